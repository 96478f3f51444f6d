#include "fpcc/operator.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "fpcc/error.hpp"

namespace fpcc {

std::string_view to_string(Scheme s) noexcept {
    switch (s) {
    case Scheme::stationary: return "stationary";
    case Scheme::bdf1: return "bdf1";
    case Scheme::bdf2: return "bdf2";
    }
    return "unknown";
}

std::optional<Scheme> parse_scheme(std::string_view s) noexcept {
    if (s == "stationary") return Scheme::stationary;
    if (s == "bdf1") return Scheme::bdf1;
    if (s == "bdf2") return Scheme::bdf2;
    return std::nullopt;
}

void TridiagonalSystem::validate() const {
    const std::size_t n = diag.size();
    const std::size_t off = n > 0 ? n - 1 : 0;
    if (n == 0 || lower.size() != off || upper.size() != off || rhs.size() != n) {
        throw Error(ErrorCode::size_mismatch,
                    "tridiagonal system with diag " + std::to_string(n) + ", lower " +
                        std::to_string(lower.size()) + ", upper " + std::to_string(upper.size()) +
                        ", rhs " + std::to_string(rhs.size()));
    }
}

EdgeCoefficients edge_coefficients_from_samples(std::vector<double> b, std::vector<double> c,
                                                double h, double t) {
    if (b.size() != c.size() || b.size() < 2) {
        throw Error(ErrorCode::size_mismatch, "edge samples of B and C differ in size");
    }
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (!(c[j] > 0.0) || !std::isfinite(c[j])) {
            throw Error(ErrorCode::nonpositive_diffusion,
                        "C = " + std::to_string(c[j]) + " at edge " + std::to_string(j));
        }
        if (!std::isfinite(b[j])) {
            throw Error(ErrorCode::non_finite_input, "B not finite at edge " + std::to_string(j));
        }
    }
    EdgeCoefficients out;
    out.t = t;
    out.h = h;
    const std::size_t n_edges = b.size();
    out.omega.resize(n_edges);
    out.delta.resize(n_edges);
    out.alpha.resize(n_edges);
    out.beta.resize(n_edges);
    out.b = std::move(b);
    out.c = std::move(c);
    kernels::edge_weights(out.b, out.c, h, out.omega, out.delta, out.alpha, out.beta);
    return out;
}

EdgeCoefficients edge_coefficients(const ProblemSpec& p, const StaggeredGrid& grid, double t) {
    if (!grid.same_domain(p.x_left, p.x_right)) {
        throw Error(ErrorCode::invalid_argument, "grid does not match the problem domain");
    }
    const std::size_t n_edges = grid.n_cells() + 1;
    std::vector<double> b(n_edges);
    std::vector<double> c(n_edges);
    for (std::size_t j = 0; j < n_edges; ++j) {
        const double x = grid.edge(j);
        b[j] = p.advection(x, t);
        c[j] = p.diffusion(x, t);
    }
    return edge_coefficients_from_samples(std::move(b), std::move(c), grid.h(), t);
}

EdgeVector flux(const EdgeCoefficients& coeffs, std::span<const double> u) {
    const std::size_t n = coeffs.n_cells();
    if (u.size() != n) {
        throw Error(ErrorCode::size_mismatch, "flux: u has " + std::to_string(u.size()) +
                                                  " entries, grid has " + std::to_string(n));
    }
    EdgeVector f(n + 1, 0.0);
    for (std::size_t j = 1; j < n; ++j) f[j] = coeffs.alpha[j] * u[j] - coeffs.beta[j] * u[j - 1];
    return f;
}

CellVector equilibrium_profile(const EdgeCoefficients& coeffs) {
    const std::size_t n = coeffs.n_cells();
    std::vector<double> log_u(n, 0.0);
    for (std::size_t k = 1; k < n; ++k) log_u[k] = log_u[k - 1] - coeffs.omega[k];
    const double peak = *std::max_element(log_u.begin(), log_u.end());
    CellVector u(n);
    double sum = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        u[k] = std::exp(log_u[k] - peak);
        sum += u[k];
    }
    const double scale = 1.0 / (coeffs.h * sum);
    for (double& v : u) v *= scale;
    return u;
}

TridiagonalSystem assemble_operator(const EdgeCoefficients& coeffs, Scheme scheme, double tau) {
    double time_coeff = 0.0;
    double scale = 1.0;
    if (scheme != Scheme::stationary) {
        if (!(tau > 0.0) || !std::isfinite(tau)) {
            throw Error(ErrorCode::nonpositive_tau, "tau = " + std::to_string(tau));
        }
        time_coeff = scheme == Scheme::bdf1 ? 1.0 : 1.5;
        scale = tau;
    }
    TridiagonalSystem sys(coeffs.n_cells());
    kernels::assemble_rows(coeffs.alpha, coeffs.beta, coeffs.h, time_coeff, scale, sys.lower,
                           sys.diag, sys.upper);
    return sys;
}

void fill_step_rhs(Scheme scheme, double tau, std::span<const double> u_prev,
                   std::optional<std::span<const double>> u_prev2,
                   std::span<const double> g_next, std::span<double> rhs) {
    const std::size_t n = rhs.size();
    if (scheme == Scheme::stationary) {
        std::fill(rhs.begin(), rhs.end(), 0.0);
        return;
    }
    if (u_prev.size() != n || g_next.size() != n) {
        throw Error(ErrorCode::size_mismatch, "step history or source has the wrong length");
    }
    if (scheme == Scheme::bdf1) {
        for (std::size_t i = 0; i < n; ++i) rhs[i] = u_prev[i] + tau * g_next[i];
        return;
    }
    if (!u_prev2) throw Error(ErrorCode::missing_history, "bdf2 needs two previous levels");
    const auto older = *u_prev2;
    if (older.size() != n) {
        throw Error(ErrorCode::size_mismatch, "second history level has the wrong length");
    }
    for (std::size_t i = 0; i < n; ++i) {
        rhs[i] = (4.0 * u_prev[i] - older[i]) / 2.0 + tau * g_next[i];
    }
}

TridiagonalSystem assemble_step(const EdgeCoefficients& coeffs, Scheme scheme, double tau,
                                std::span<const double> u_prev,
                                std::optional<std::span<const double>> u_prev2,
                                std::span<const double> g_next) {
    if (scheme == Scheme::bdf2 && !u_prev2) {
        throw Error(ErrorCode::missing_history, "bdf2 needs two previous levels");
    }
    TridiagonalSystem sys = assemble_operator(coeffs, scheme, tau);
    fill_step_rhs(scheme, tau, u_prev, u_prev2, g_next, sys.rhs);
    return sys;
}

CellVector sample_centers(const SpaceTimeField& f, const StaggeredGrid& grid, double t) {
    CellVector out(grid.n_cells());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f(grid.center(k), t);
    return out;
}

CellVector sample_centers(const SpaceField& f, const StaggeredGrid& grid) {
    CellVector out(grid.n_cells());
    for (std::size_t k = 0; k < out.size(); ++k) out[k] = f(grid.center(k));
    return out;
}

}  // namespace fpcc
