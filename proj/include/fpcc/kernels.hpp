#pragma once

// Data-parallel inner loops of the solver. Each kernel exists twice: a plain
// serial loop kept as the reference, and an OpenMP version used by the
// library. All kernels are elementwise (no reductions), so both versions
// produce bit-identical results for any thread count.

#include <cstddef>
#include <span>

namespace fpcc::kernels {

/// Below this many entries the OpenMP versions run on the calling thread.
inline constexpr std::size_t kParallelMinSize = 4096;

struct TridiagonalView {
    std::span<const double> lower;  // A(i+1, i), size n-1
    std::span<const double> diag;   // A(i, i), size n
    std::span<const double> upper;  // A(i, i+1), size n-1
};

namespace serial {
#include "fpcc/kernels_decl.inc"
}  // namespace serial

namespace parallel {
#include "fpcc/kernels_decl.inc"
}  // namespace parallel

using parallel::apply;
using parallel::assemble_rows;
using parallel::axpy;
using parallel::edge_weights;
using parallel::jacobi_sweep;
using parallel::prolong_quadratic;
using parallel::residual;
using parallel::restrict_injection;

/// Weights of the three-point Lagrange interpolant through nodes -1, 0, 1
/// evaluated at s, in node order.
struct LagrangeWeights {
    double w_minus;
    double w_center;
    double w_plus;
};
constexpr LagrangeWeights lagrange3(double s) noexcept {
    return {s * (s - 1.0) / 2.0, (1.0 - s) * (1.0 + s), s * (s + 1.0) / 2.0};
}

}  // namespace fpcc::kernels
