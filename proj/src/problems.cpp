#include "fpcc/problems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>
#include <utility>

#include "fpcc/error.hpp"

namespace fpcc {

namespace {

constexpr std::array kBenchmarks{BenchmarkId::stationary_ou, BenchmarkId::ou_manufactured,
                                 BenchmarkId::mohammadi_ou, BenchmarkId::nonlinear_bimodal};

SpaceTimeField constant(double v) {
    return [v](double, double) { return v; };
}

// OU with f = -x, sigma = 1 in flux form: B = x, C = 1/2. Equilibrium exp(-x^2).
ProblemSpec stationary_ou() {
    ProblemSpec p = ProblemSpec::from_drift_diffusion(
        "stationary_ou", [](double x, double) { return -x; }, 1.0, -6.0, 6.0, 1.0);
    // Off-center start so that time runs on this problem actually relax.
    p.initial = [](double x) {
        return std::sqrt(2.0 / std::numbers::pi) * std::exp(-2.0 * (x - 2.0) * (x - 2.0));
    };
    p.exact = [](double x, double) { return std::exp(-x * x); };
    p.steady_state = [](double x) { return std::exp(-x * x); };
    p.time_independent_coefficients = true;
    return p;
}

ProblemSpec ou_manufactured() {
    ProblemSpec p = ProblemSpec::from_drift_diffusion(
        "ou_manufactured", [](double x, double) { return -x; }, 1.0, -6.0, 6.0, 1.0);
    const auto u = [](double x, double t) { return std::exp(-(x * x + t)); };
    ExactSolution exact{
        u,
        [u](double x, double t) { return -u(x, t); },
        [u](double x, double t) { return -2.0 * x * u(x, t); },
        [u](double x, double t) { return (4.0 * x * x - 2.0) * u(x, t); },
    };
    p.source = manufactured_source(exact, p.advection, p.diffusion,
                                   {constant(1.0), constant(0.0)});
    p.initial = [u](double x) { return u(x, 0.0); };
    p.exact = u;
    p.steady_state = [](double x) { return std::exp(-x * x); };
    p.time_independent_coefficients = true;
    return p;
}

ProblemSpec mohammadi_ou() {
    constexpr double a = 10.0;
    ProblemSpec p;
    p.name = "mohammadi_ou";
    p.advection = [](double x, double) { return x; };
    p.diffusion = constant(1.0);
    p.source = [](double x, double t) {
        const double s = x - a / 2.0;
        return (a - x) * (2.0 * x - a) * std::exp(-(s * s + t));
    };
    p.initial = [](double x) {
        const double s = x - a / 2.0;
        return std::exp(-s * s);
    };
    p.exact = [](double x, double t) {
        const double s = x - a / 2.0;
        return std::exp(-(s * s + t));
    };
    p.x_left = 0.0;
    p.x_right = a;
    p.t_final = 1.0;
    p.time_independent_coefficients = true;
    return p;
}

// f = x - x^3, sigma = 0.4: B = x^3 - x, C = 0.08.
ProblemSpec nonlinear_bimodal() {
    constexpr double sigma = 0.4;
    ProblemSpec p = ProblemSpec::from_drift_diffusion(
        "nonlinear_bimodal", [](double x, double) { return x - x * x * x; }, sigma, -6.0, 6.0,
        30.0);
    p.initial = [](double x) { return std::exp(-x * x) / std::sqrt(std::numbers::pi); };
    p.steady_state = [](double x) {
        return std::exp((x * x - 0.5 * x * x * x * x) / (sigma * sigma));
    };
    p.time_independent_coefficients = true;
    return p;
}

}  // namespace

std::string_view to_string(BenchmarkId id) noexcept {
    switch (id) {
    case BenchmarkId::stationary_ou: return "stationary_ou";
    case BenchmarkId::ou_manufactured: return "ou_manufactured";
    case BenchmarkId::mohammadi_ou: return "mohammadi_ou";
    case BenchmarkId::nonlinear_bimodal: return "nonlinear_bimodal";
    }
    return "unknown";
}

std::string_view describe(BenchmarkId id) noexcept {
    switch (id) {
    case BenchmarkId::stationary_ou:
        return "OU equilibrium on [-6,6], f=-x, sigma=1, u_e ~ exp(-x^2)";
    case BenchmarkId::ou_manufactured:
        return "OU on [-6,6], T=1, u_e = exp(-(x^2+t)), manufactured source";
    case BenchmarkId::mohammadi_ou:
        return "B=x, C=1 on [0,10], T=1, u_e = exp(-((x-5)^2+t))";
    case BenchmarkId::nonlinear_bimodal:
        return "f=x-x^3, sigma=0.4 on [-6,6], T=30, bimodal steady state";
    }
    return "";
}

std::span<const BenchmarkId> all_benchmarks() noexcept { return kBenchmarks; }

BenchmarkId parse_benchmark(std::string_view name) {
    for (BenchmarkId id : kBenchmarks) {
        if (to_string(id) == name) return id;
    }
    std::string valid;
    for (BenchmarkId id : kBenchmarks) {
        if (!valid.empty()) valid += ", ";
        valid += to_string(id);
    }
    throw Error(ErrorCode::unknown_id,
                "unknown problem '" + std::string(name) + "'; valid ids: " + valid);
}

ProblemSpec builtin(BenchmarkId id) {
    switch (id) {
    case BenchmarkId::stationary_ou: return stationary_ou();
    case BenchmarkId::ou_manufactured: return ou_manufactured();
    case BenchmarkId::mohammadi_ou: return mohammadi_ou();
    case BenchmarkId::nonlinear_bimodal: return nonlinear_bimodal();
    }
    throw Error(ErrorCode::unknown_id, "unknown benchmark id");
}

std::string_view to_string(TauLaw law) noexcept {
    switch (law) {
    case TauLaw::table2: return "table2";
    case TauLaw::table4: return "table4";
    case TauLaw::fig5: return "fig5";
    }
    return "unknown";
}

std::optional<TauLaw> parse_tau_law(std::string_view s) noexcept {
    if (s == "table2") return TauLaw::table2;
    if (s == "table4") return TauLaw::table4;
    if (s == "fig5") return TauLaw::fig5;
    return std::nullopt;
}

double tau_for(TauLaw law, std::size_t n_cells, double t_final) noexcept {
    const double n = static_cast<double>(n_cells);
    switch (law) {
    case TauLaw::table2: return (1.0 / 81.0) * (t_final / n);
    case TauLaw::table4: return 0.01 / (n * n);
    case TauLaw::fig5: return (1.0 / 81.0) * (t_final / 81.0);
    }
    return 0.0;
}

BenchmarkDefaults defaults_for(BenchmarkId id) {
    switch (id) {
    case BenchmarkId::stationary_ou: return {Scheme::stationary, TauLaw::table2, 81, true, {}};
    case BenchmarkId::ou_manufactured: return {Scheme::bdf1, TauLaw::table2, 81, false, {}};
    case BenchmarkId::mohammadi_ou: return {Scheme::bdf1, TauLaw::table4, 81, false, {}};
    case BenchmarkId::nonlinear_bimodal:
        return {Scheme::bdf1, TauLaw::fig5, 81, true, {0.5, 1.0, 3.0, 5.0, 15.0, 30.0}};
    }
    throw Error(ErrorCode::unknown_id, "unknown benchmark id");
}

double derivative_x(const SpaceTimeField& f, double x, double t, double step) {
    const auto central = [&](double d) { return (f(x + d, t) - f(x - d, t)) / (2.0 * d); };
    return (4.0 * central(step / 2.0) - central(step)) / 3.0;
}

double derivative_t(const SpaceTimeField& f, double x, double t, double step) {
    const auto central = [&](double d) { return (f(x, t + d) - f(x, t - d)) / (2.0 * d); };
    return (4.0 * central(step / 2.0) - central(step)) / 3.0;
}

double second_derivative_x(const SpaceTimeField& f, double x, double t, double step) {
    const double mid = f(x, t);
    const auto central = [&](double d) {
        return (f(x + d, t) - 2.0 * mid + f(x - d, t)) / (d * d);
    };
    return (4.0 * central(step / 2.0) - central(step)) / 3.0;
}

SpaceTimeField manufactured_source(const ExactSolution& exact, SpaceTimeField advection,
                                   SpaceTimeField diffusion,
                                   const CoefficientDerivatives& derivs) {
    return [exact, b = std::move(advection), c = std::move(diffusion), derivs](double x,
                                                                               double t) {
        const double u = exact.u(x, t);
        const double u_t = exact.u_t ? (*exact.u_t)(x, t) : derivative_t(exact.u, x, t);
        const double u_x = exact.u_x ? (*exact.u_x)(x, t) : derivative_x(exact.u, x, t);
        const double u_xx =
            exact.u_xx ? (*exact.u_xx)(x, t) : second_derivative_x(exact.u, x, t);
        const double b_x = derivs.advection_x ? (*derivs.advection_x)(x, t) : derivative_x(b, x, t);
        const double c_x = derivs.diffusion_x ? (*derivs.diffusion_x)(x, t) : derivative_x(c, x, t);
        // d/dx (B u + C u_x) = B_x u + B u_x + C_x u_x + C u_xx
        const double flux_x = b_x * u + b(x, t) * u_x + c_x * u_x + c(x, t) * u_xx;
        return u_t - flux_x;
    };
}

}  // namespace fpcc
