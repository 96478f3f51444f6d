#include "fpcc/twolevel.hpp"

#include <algorithm>
#include <cmath>
#include <iterator>
#include <string>

#include "fpcc/error.hpp"
#include "fpcc/linalg.hpp"
#include "fpcc/metrics.hpp"
#include "fpcc/transfer.hpp"

namespace fpcc {

std::string_view to_string(Smoother s) noexcept {
    switch (s) {
    case Smoother::symmetric_gauss_seidel: return "symmetric-gauss-seidel";
    case Smoother::gauss_seidel: return "gauss-seidel";
    case Smoother::damped_jacobi: return "damped-jacobi";
    }
    return "unknown";
}

std::optional<Smoother> parse_smoother(std::string_view s) noexcept {
    if (s == "symmetric-gauss-seidel") return Smoother::symmetric_gauss_seidel;
    if (s == "gauss-seidel") return Smoother::gauss_seidel;
    if (s == "damped-jacobi") return Smoother::damped_jacobi;
    return std::nullopt;
}

void CycleConfig::validate() const {
    if (m1 < 0 || m2 < 0) throw Error(ErrorCode::invalid_argument, "negative sweep count");
    if (!(tol > 0.0)) throw Error(ErrorCode::invalid_argument, "tol must be positive");
    if (max_cycles < 1) throw Error(ErrorCode::invalid_argument, "max_cycles must be >= 1");
    if (smoother == Smoother::damped_jacobi && !(jacobi_weight > 0.0 && jacobi_weight <= 1.0)) {
        throw Error(ErrorCode::invalid_argument, "jacobi weight must lie in (0, 1]");
    }
}

CellVector normalize(std::span<const double> u, double h) {
    const double m = mass(u, h);
    if (m == 0.0 || !std::isfinite(m)) {
        throw Error(ErrorCode::zero_mass, "cannot normalize, h*sum(u) = " + std::to_string(m));
    }
    CellVector out(u.size());
    std::transform(u.begin(), u.end(), out.begin(), [m](double v) { return v / m; });
    return out;
}

namespace {

void smooth(const TridiagonalSystem& sys, CellVector& u, int sweeps, const CycleConfig& cfg) {
    switch (cfg.smoother) {
    case Smoother::symmetric_gauss_seidel:
        for (int s = 0; s < sweeps; ++s) symmetric_gauss_seidel_sweep(sys, u);
        return;
    case Smoother::gauss_seidel:
        for (int s = 0; s < sweeps; ++s) gauss_seidel_sweep(sys, u);
        return;
    case Smoother::damped_jacobi:
        break;
    }
    CellVector next(u.size());
    for (int s = 0; s < sweeps; ++s) {
        kernels::jacobi_sweep(sys.matrix(), sys.rhs, u, cfg.jacobi_weight, next);
        u.swap(next);
    }
}

double euclidean(std::span<const double> v) {
    double s = 0.0;
    for (double x : v) s += x * x;
    return std::sqrt(s);
}

}  // namespace

CellVector tg_cycle(const TridiagonalSystem& fine_sys, const TridiagonalSystem& coarse_op,
                    const GridHierarchy& hier, std::span<const double> u, const CycleConfig& cfg) {
    if (fine_sys.size() != hier.fine.n_cells() || u.size() != hier.fine.n_cells() ||
        coarse_op.size() != hier.coarse.n_cells()) {
        throw Error(ErrorCode::size_mismatch, "two-level cycle operands do not match the hierarchy");
    }
    CellVector iterate(u.begin(), u.end());
    smooth(fine_sys, iterate, cfg.m1, cfg);

    TridiagonalSystem coarse = coarse_op;
    coarse.rhs = restrict_injection(hier, residual(fine_sys, iterate));
    CellVector coarse_error;
    if (cfg.coarse_solve == CoarseSolve::pinned) {
        const CellVector coarse_u = restrict_injection(hier, iterate);
        const auto pin = static_cast<std::size_t>(std::distance(
            coarse_u.begin(), std::max_element(coarse_u.begin(), coarse_u.end())));
        coarse_error = solve_pinned(coarse, pin);
    } else {
        coarse_error = thomas_solve(coarse);
    }
    kernels::axpy(1.0, prolong_quadratic(hier, coarse_error), iterate);

    if (cfg.normalize) iterate = normalize(iterate, hier.fine.h());
    smooth(fine_sys, iterate, cfg.m2, cfg);
    return iterate;
}

SolveResult solve_to_tolerance(const TridiagonalSystem& fine_sys,
                               const TridiagonalSystem& coarse_op, const GridHierarchy& hier,
                               std::span<const double> u0, const CycleConfig& cfg) {
    cfg.validate();
    const double h = hier.fine.h();
    SolveResult result;
    result.u.assign(u0.begin(), u0.end());
    double old_norm = paper_l2(result.u, h);
    for (int cycle = 1; cycle <= cfg.max_cycles; ++cycle) {
        result.u = tg_cycle(fine_sys, coarse_op, hier, result.u, cfg);
        result.cycles = cycle;
        if (cfg.stopping == StoppingRule::norm_difference) {
            const double new_norm = paper_l2(result.u, h);
            result.last_gap = std::abs(new_norm - old_norm);
            old_norm = new_norm;
        } else {
            result.last_gap = euclidean(residual(fine_sys, result.u));
        }
        if (!std::isfinite(result.last_gap)) break;
        if (result.last_gap < cfg.tol) return result;
    }
    throw Error(ErrorCode::no_convergence,
                "no convergence after " + std::to_string(result.cycles) +
                    " two-level cycles, last gap " + std::to_string(result.last_gap));
}

SolveResult solve_to_tolerance(const TridiagonalSystem& fine_sys,
                               const CoarseAssembler& coarse_assembler,
                               const GridHierarchy& hier, std::span<const double> u0,
                               const CycleConfig& cfg) {
    return solve_to_tolerance(fine_sys, coarse_assembler(), hier, u0, cfg);
}

}  // namespace fpcc
