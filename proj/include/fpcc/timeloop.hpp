#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "fpcc/grid.hpp"
#include "fpcc/metrics.hpp"
#include "fpcc/operator.hpp"
#include "fpcc/problem.hpp"
#include "fpcc/twolevel.hpp"

namespace fpcc {

enum class LinearSolver {
    two_level,  ///< TG cycles to tolerance
    direct,     ///< Thomas on every step system
};

struct RunOptions {
    CycleConfig cycle;
    LinearSolver solver = LinearSolver::two_level;
    /// Each requested time is recorded at the nearest time level.
    std::vector<double> snapshot_times;
};

struct Snapshot {
    double t = 0.0;
    CellVector u;
};

/// Result of one run. Histories hold one entry per time level (steps + 1);
/// cycles_per_step[0] is 0 for the initial level. For stationary solves
/// steps is 0 and the cycle count sits in cycles_per_step[0].
struct RunReport {
    std::string problem;
    Scheme scheme = Scheme::bdf1;
    std::size_t n_cells = 0;
    double x_left = 0.0;
    double x_right = 0.0;
    double h = 0.0;
    double tau = 0.0;
    double t_final = 0.0;
    std::size_t steps = 0;
    std::vector<Snapshot> snapshots;
    std::vector<int> cycles_per_step;
    std::vector<double> mass_history;
    std::vector<double> min_value_history;
    /// Norms of u - u_exact at t_final.
    std::optional<ErrorRecord> error_final;
    /// Space-time norms over all time levels.
    std::optional<ErrorRecord> error_spacetime;
    /// Stationary runs: factor applied to u so that h sum u matches the
    /// exact samples before computing errors.
    std::optional<double> error_scaling;
    double wall_time = 0.0;
    CellVector solution;

    int max_cycles() const noexcept;
};

/// Number of steps T/tau. Throws Error{nonpositive_tau | nonintegral_step_count}.
std::size_t step_count(double t_final, double tau);

/// Coefficients at t_m, source at t_{m+1}. Throws errors of the solver path.
RunReport run_bdf1(const ProblemSpec& p, const GridHierarchy& hier, double tau,
                   const RunOptions& opts = {});

/// First step BDF1, then BDF2. Throws Error{too_few_steps} when T/tau < 2.
RunReport run_bdf2(const ProblemSpec& p, const GridHierarchy& hier, double tau,
                   const RunOptions& opts = {});

RunReport run_time_dependent(const ProblemSpec& p, const GridHierarchy& hier, Scheme scheme,
                             double tau, const RunOptions& opts = {});

/// Marches from an explicit initial vector over `steps` steps.
RunReport run_from(const ProblemSpec& p, const GridHierarchy& hier, Scheme scheme, double tau,
                   std::size_t steps, CellVector u0, const RunOptions& opts = {});

struct StationaryResult {
    CellVector u;
    int cycles = 0;
};

/// Discrete equilibrium of the zero-flux operator by renormalized TG cycles
/// from the normalized constant, returned with h sum u = 1. Requires
/// cfg.normalize.
StationaryResult solve_stationary(const ProblemSpec& p, const GridHierarchy& hier,
                                  const CycleConfig& cfg);

/// solve_stationary wrapped in a report; errors against p.steady_state (or
/// p.exact at t = 0) after rescaling u to the mass of the reference samples.
RunReport run_stationary(const ProblemSpec& p, const GridHierarchy& hier,
                         const CycleConfig& cfg);

}  // namespace fpcc
