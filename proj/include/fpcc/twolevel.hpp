#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string_view>

#include "fpcc/grid.hpp"
#include "fpcc/operator.hpp"

namespace fpcc {

enum class Smoother {
    symmetric_gauss_seidel,  ///< forward + backward sweep per smoothing step
    gauss_seidel,            ///< lexicographic, left to right
    damped_jacobi,
};

std::string_view to_string(Smoother s) noexcept;
std::optional<Smoother> parse_smoother(std::string_view s) noexcept;
enum class StoppingRule {
    norm_difference,  ///< |h^2 sum u_new^2 - h^2 sum u_old^2| < tol
    residual,         ///< sqrt(sum r^2) < tol after the cycle
};
enum class CoarseSolve {
    direct,  ///< Thomas on the coarse operator
    pinned,  ///< singular zero-column-sum operator, see solve_pinned
};

struct CycleConfig {
    int m1 = 3;
    int m2 = 3;
    double tol = 1e-8;
    int max_cycles = 100;
    bool normalize = false;
    Smoother smoother = Smoother::symmetric_gauss_seidel;
    double jacobi_weight = 2.0 / 3.0;
    StoppingRule stopping = StoppingRule::norm_difference;
    CoarseSolve coarse_solve = CoarseSolve::direct;

    /// Throws Error{invalid_argument}.
    void validate() const;
};

struct SolveResult {
    CellVector u;
    int cycles = 0;
    /// Value compared against tol by the stopping rule in the last cycle.
    double last_gap = 0.0;
};

/// Produces the coarse-grid operator (right-hand side ignored).
using CoarseAssembler = std::function<TridiagonalSystem()>;

/// One TG(m1, m2) cycle: m1 smoothing sweeps, injected residual, exact
/// coarse error solve from a zero guess, quadratic prolongation of the
/// error, correction, optional renormalization to h sum u = 1, m2 sweeps.
CellVector tg_cycle(const TridiagonalSystem& fine_sys, const TridiagonalSystem& coarse_op,
                    const GridHierarchy& hier, std::span<const double> u, const CycleConfig& cfg);

/// Repeats tg_cycle until the stopping rule holds.
/// Throws Error{no_convergence} with the final gap when max_cycles runs out.
SolveResult solve_to_tolerance(const TridiagonalSystem& fine_sys,
                               const TridiagonalSystem& coarse_op, const GridHierarchy& hier,
                               std::span<const double> u0, const CycleConfig& cfg);

SolveResult solve_to_tolerance(const TridiagonalSystem& fine_sys,
                               const CoarseAssembler& coarse_assembler,
                               const GridHierarchy& hier, std::span<const double> u0,
                               const CycleConfig& cfg);

/// u scaled so h sum u = 1. Throws Error{zero_mass}.
CellVector normalize(std::span<const double> u, double h);

}  // namespace fpcc
