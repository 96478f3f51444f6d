#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fpcc/exponential_fitting.hpp"
#include "fpcc/grid.hpp"
#include "fpcc/kernels.hpp"
#include "fpcc/problem.hpp"

namespace fpcc {

using CellVector = std::vector<double>;
using EdgeVector = std::vector<double>;

/// Coefficients frozen at one time level, sampled on edges 0..N.
///
/// alpha/beta are the stencil weights of the Chang-Cooper flux,
///     F_j = b_j ((1 - delta_j) u_right + delta_j u_left) + c_j (u_right - u_left) / h
///         = alpha_j u_right - beta_j u_left,
/// evaluated through the Bernoulli function so that neither weight suffers
/// cancellation at large |omega|. Both are zero on the two boundary edges.
struct EdgeCoefficients {
    double t = 0.0;
    double h = 0.0;
    std::vector<double> b;
    std::vector<double> c;
    std::vector<double> omega;
    std::vector<double> delta;
    std::vector<double> alpha;
    std::vector<double> beta;

    std::size_t n_cells() const noexcept { return b.empty() ? 0 : b.size() - 1; }
};

/// Throws Error{nonpositive_diffusion | invalid_argument}.
EdgeCoefficients edge_coefficients(const ProblemSpec& p, const StaggeredGrid& grid, double t);

/// Builds coefficients directly from edge samples of B and C.
EdgeCoefficients edge_coefficients_from_samples(std::vector<double> b, std::vector<double> c,
                                                double h, double t);

/// Numerical flux on all N+1 edges; F[0] = F[N] = 0.
EdgeVector flux(const EdgeCoefficients& coeffs, std::span<const double> u);

/// Discrete equilibrium (all interior fluxes zero), scaled so h * sum(u) = 1.
/// Built from log u_{k+1} - log u_k = -omega_{k+1}, which is the exact ratio
/// beta/alpha of the Chang-Cooper weights.
CellVector equilibrium_profile(const EdgeCoefficients& coeffs);

enum class Scheme { stationary, bdf1, bdf2 };

std::string_view to_string(Scheme s) noexcept;
std::optional<Scheme> parse_scheme(std::string_view s) noexcept;

/// A = tridiag(lower, diag, upper) with lower[i] = A(i+1, i), upper[i] = A(i, i+1).
struct TridiagonalSystem {
    std::vector<double> lower;
    std::vector<double> diag;
    std::vector<double> upper;
    std::vector<double> rhs;

    TridiagonalSystem() = default;
    explicit TridiagonalSystem(std::size_t n)
        : lower(n > 0 ? n - 1 : 0), diag(n), upper(n > 0 ? n - 1 : 0), rhs(n) {}

    std::size_t size() const noexcept { return diag.size(); }
    kernels::TridiagonalView matrix() const noexcept { return {lower, diag, upper}; }
    /// Throws Error{size_mismatch} when the diagonals are inconsistent.
    void validate() const;
};

/// Matrix of one implicit step, rows scaled by tau:
///     stationary:  -(F_{k+1} - F_k)/h
///     bdf1:        u_k     - tau (F_{k+1} - F_k)/h
///     bdf2:   (3/2) u_k    - tau (F_{k+1} - F_k)/h
/// The right-hand side is left zero. Throws Error{nonpositive_tau}.
TridiagonalSystem assemble_operator(const EdgeCoefficients& coeffs, Scheme scheme, double tau);

/// Full step system. Right-hand sides (rows scaled by tau):
///     stationary:  0
///     bdf1:        u_prev + tau g_next
///     bdf2:        (4 u_prev - u_prev2) / 2 + tau g_next
/// Throws Error{missing_history | nonpositive_tau | size_mismatch}.
TridiagonalSystem assemble_step(const EdgeCoefficients& coeffs, Scheme scheme, double tau,
                                std::span<const double> u_prev,
                                std::optional<std::span<const double>> u_prev2,
                                std::span<const double> g_next);

/// Right-hand side for an already assembled operator (see assemble_step).
void fill_step_rhs(Scheme scheme, double tau, std::span<const double> u_prev,
                   std::optional<std::span<const double>> u_prev2,
                   std::span<const double> g_next, std::span<double> rhs);

/// Samples f(x, t) at the cell centers of grid.
CellVector sample_centers(const SpaceTimeField& f, const StaggeredGrid& grid, double t);
CellVector sample_centers(const SpaceField& f, const StaggeredGrid& grid);

}  // namespace fpcc
