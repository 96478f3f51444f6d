#pragma once

#include <cstddef>
#include <span>

#include "fpcc/operator.hpp"

namespace fpcc {

/// Thomas algorithm. Throws Error{zero_pivot} naming the failing row.
CellVector thomas_solve(const TridiagonalSystem& sys);

/// Solves a singular system whose matrix has zero column sums (the
/// stationary flux-difference operator). The right-hand side is projected
/// onto zero sum, the unknown at `pin` is fixed to 0, and the two remaining
/// tridiagonal blocks are solved directly. Pick `pin` where the null vector
/// is large to keep the result well scaled.
CellVector solve_pinned(const TridiagonalSystem& sys, std::size_t pin);

/// One lexicographic Gauss-Seidel sweep, in place. Throws Error{zero_diagonal}.
void gauss_seidel_sweep(const TridiagonalSystem& sys, std::span<double> u);

/// Gauss-Seidel sweep from the last row to the first, in place.
void gauss_seidel_backward_sweep(const TridiagonalSystem& sys, std::span<double> u);

/// Forward then backward Gauss-Seidel sweep. Default smoother of the
/// two-level cycle: drift toward the domain interior makes one-directional
/// sweeps run against the flow on half of the domain.
void symmetric_gauss_seidel_sweep(const TridiagonalSystem& sys, std::span<double> u);

/// Copying form of gauss_seidel_sweep.
CellVector relax_sweep(const TridiagonalSystem& sys, std::span<const double> u);

/// One damped Jacobi sweep (default weight 2/3).
CellVector jacobi_sweep(const TridiagonalSystem& sys, std::span<const double> u,
                        double weight = 2.0 / 3.0);

/// rhs - A u. Throws Error{size_mismatch}.
CellVector residual(const TridiagonalSystem& sys, std::span<const double> u);

/// A u.
CellVector apply(const TridiagonalSystem& sys, std::span<const double> u);

}  // namespace fpcc
