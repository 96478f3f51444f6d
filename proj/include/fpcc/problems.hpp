#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "fpcc/operator.hpp"
#include "fpcc/problem.hpp"

namespace fpcc {

enum class BenchmarkId { stationary_ou, ou_manufactured, mohammadi_ou, nonlinear_bimodal };

std::string_view to_string(BenchmarkId id) noexcept;
/// Throws Error{unknown_id}; the message lists the valid ids.
BenchmarkId parse_benchmark(std::string_view name);
std::span<const BenchmarkId> all_benchmarks() noexcept;
std::string_view describe(BenchmarkId id) noexcept;

ProblemSpec builtin(BenchmarkId id);

/// Time-step presets, N the fine cell count and T the horizon:
///   table2:  tau = (1/81) (T/N)
///   table4:  tau = 0.01 / N^2
///   fig5:    tau = (1/81) (T/81)
enum class TauLaw { table2, table4, fig5 };

std::string_view to_string(TauLaw law) noexcept;
std::optional<TauLaw> parse_tau_law(std::string_view s) noexcept;
double tau_for(TauLaw law, std::size_t n_cells, double t_final) noexcept;

/// Settings a benchmark runs with unless overridden.
struct BenchmarkDefaults {
    Scheme scheme;
    TauLaw tau_law;
    std::size_t n_cells;
    bool normalize;
    std::vector<double> snapshot_times;
};
BenchmarkDefaults defaults_for(BenchmarkId id);

/// u_exact with optional analytic derivatives. Missing derivatives are
/// approximated by Richardson-extrapolated central differences.
struct ExactSolution {
    SpaceTimeField u;
    std::optional<SpaceTimeField> u_t;
    std::optional<SpaceTimeField> u_x;
    std::optional<SpaceTimeField> u_xx;
};

/// Optional x-derivatives of the coefficients; finite differences otherwise.
struct CoefficientDerivatives {
    std::optional<SpaceTimeField> advection_x;
    std::optional<SpaceTimeField> diffusion_x;
};

/// g = du/dt - d/dx (B u + C du/dx): the source that makes `exact` solve the
/// flux-form equation.
SpaceTimeField manufactured_source(const ExactSolution& exact, SpaceTimeField advection,
                                   SpaceTimeField diffusion,
                                   const CoefficientDerivatives& derivs = {});

/// Richardson-extrapolated central differences.
double derivative_x(const SpaceTimeField& f, double x, double t, double step = 1e-5);
double derivative_t(const SpaceTimeField& f, double x, double t, double step = 1e-5);
double second_derivative_x(const SpaceTimeField& f, double x, double t, double step = 1e-3);

}  // namespace fpcc
