#pragma once

#include <span>

#include "fpcc/grid.hpp"
#include "fpcc/operator.hpp"

namespace fpcc {

/// Straight injection: coarse[I] = fine[3I + 1], the fine cell whose center
/// coincides with the coarse center. Throws Error{size_mismatch}.
CellVector restrict_injection(const GridHierarchy& hier, std::span<const double> fine);

/// Quadratic Lagrange prolongation. A fine cell inside coarse cell I takes
/// the interpolant through coarse centers I-1, I, I+1; the first and last
/// coarse cells use the one-sided triples (0, 1, 2) and (n-3, n-2, n-1).
/// Throws Error{size_mismatch | coarse_too_small}.
CellVector prolong_quadratic(const GridHierarchy& hier, std::span<const double> coarse);

/// Edge injection: coarse[I] = fine[3I]. Not used by the cycle; kept for
/// inspecting fluxes across levels.
EdgeVector restrict_edges(const GridHierarchy& hier, std::span<const double> fine_edges);

}  // namespace fpcc
