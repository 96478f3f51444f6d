#include <array>
#include <cassert>
#include <cstdint>

#include "fpcc/exponential_fitting.hpp"
#include "fpcc/kernels.hpp"

namespace fpcc::kernels::parallel {

namespace {

using Index = std::int64_t;

Index to_index(std::size_t n) { return static_cast<Index>(n); }

// Interior row of a tridiagonal product; edge rows handled by the caller.
inline double row_product(TridiagonalView a, std::span<const double> u, Index i) {
    return a.lower[i - 1] * u[i - 1] + a.diag[i] * u[i] + a.upper[i] * u[i + 1];
}

inline double first_row(TridiagonalView a, std::span<const double> u) {
    return a.diag.size() > 1 ? a.diag[0] * u[0] + a.upper[0] * u[1] : a.diag[0] * u[0];
}

inline double last_row(TridiagonalView a, std::span<const double> u) {
    const std::size_t n = a.diag.size();
    return a.lower[n - 2] * u[n - 2] + a.diag[n - 1] * u[n - 1];
}

}  // namespace

void edge_weights(std::span<const double> b, std::span<const double> c, double h,
                  std::span<double> omega, std::span<double> delta, std::span<double> alpha,
                  std::span<double> beta) {
    const Index n_edges = to_index(b.size());
#pragma omp parallel for schedule(static) if (b.size() >= kParallelMinSize)
    for (Index j = 0; j < n_edges; ++j) {
        const double w = h * b[j] / c[j];
        omega[j] = w;
        delta[j] = cc_delta(w);
        if (j == 0 || j + 1 == n_edges) {
            alpha[j] = 0.0;
            beta[j] = 0.0;
        } else {
            const double d = c[j] / h;
            alpha[j] = d * bernoulli(-w);
            beta[j] = d * bernoulli(w);
        }
    }
}

void assemble_rows(std::span<const double> alpha, std::span<const double> beta, double h,
                   double time_coeff, double scale, std::span<double> lower,
                   std::span<double> diag, std::span<double> upper) {
    const Index n = to_index(diag.size());
    const double s = scale / h;
#pragma omp parallel for schedule(static) if (diag.size() >= kParallelMinSize)
    for (Index k = 0; k < n; ++k) {
        diag[k] = time_coeff + s * (beta[k + 1] + alpha[k]);
        if (k + 1 < n) {
            upper[k] = -s * alpha[k + 1];
            lower[k] = -s * beta[k + 1];
        }
    }
}

void apply(TridiagonalView a, std::span<const double> u, std::span<double> out) {
    const Index n = to_index(a.diag.size());
    if (n == 1) {
        out[0] = a.diag[0] * u[0];
        return;
    }
    out[0] = first_row(a, u);
#pragma omp parallel for schedule(static) if (a.diag.size() >= kParallelMinSize)
    for (Index i = 1; i < n - 1; ++i) out[i] = row_product(a, u, i);
    out[n - 1] = last_row(a, u);
}

void residual(TridiagonalView a, std::span<const double> rhs, std::span<const double> u,
              std::span<double> r) {
    const Index n = to_index(a.diag.size());
    if (n == 1) {
        r[0] = rhs[0] - a.diag[0] * u[0];
        return;
    }
    r[0] = rhs[0] - first_row(a, u);
#pragma omp parallel for schedule(static) if (a.diag.size() >= kParallelMinSize)
    for (Index i = 1; i < n - 1; ++i) r[i] = rhs[i] - row_product(a, u, i);
    r[n - 1] = rhs[n - 1] - last_row(a, u);
}

void jacobi_sweep(TridiagonalView a, std::span<const double> rhs, std::span<const double> u,
                  double weight, std::span<double> out) {
    const Index n = to_index(a.diag.size());
    if (n == 1) {
        out[0] = u[0] + weight * (rhs[0] - a.diag[0] * u[0]) / a.diag[0];
        return;
    }
    out[0] = u[0] + weight * (rhs[0] - first_row(a, u)) / a.diag[0];
#pragma omp parallel for schedule(static) if (a.diag.size() >= kParallelMinSize)
    for (Index i = 1; i < n - 1; ++i) {
        out[i] = u[i] + weight * (rhs[i] - row_product(a, u, i)) / a.diag[i];
    }
    out[n - 1] = u[n - 1] + weight * (rhs[n - 1] - last_row(a, u)) / a.diag[n - 1];
}

void restrict_injection(std::span<const double> fine, std::span<double> coarse) {
    const Index nc = to_index(coarse.size());
#pragma omp parallel for schedule(static) if (coarse.size() >= kParallelMinSize)
    for (Index i = 0; i < nc; ++i) coarse[i] = fine[3 * i + 1];
}

void prolong_quadratic(std::span<const double> coarse, std::span<double> fine) {
    const Index nc = to_index(coarse.size());
    assert(nc >= 3 && fine.size() == 3 * coarse.size());
    // Weights per (stencil position, offset within the coarse cell).
    const auto table = [](double shift) {
        std::array<LagrangeWeights, 3> w{};
        for (int r = 0; r < 3; ++r) w[r] = lagrange3((r - 1.0) / 3.0 + shift);
        return w;
    };
    const auto left = table(-1.0);
    const auto centered = table(0.0);
    const auto right = table(1.0);

    const auto fill = [&](Index parent, Index mid, const std::array<LagrangeWeights, 3>& w) {
        const double a = coarse[mid - 1];
        const double b = coarse[mid];
        const double c = coarse[mid + 1];
        for (Index r = 0; r < 3; ++r) {
            fine[3 * parent + r] = w[r].w_minus * a + w[r].w_center * b + w[r].w_plus * c;
        }
    };

    fill(0, 1, left);
#pragma omp parallel for schedule(static) if (coarse.size() >= kParallelMinSize / 3)
    for (Index parent = 1; parent < nc - 1; ++parent) fill(parent, parent, centered);
    fill(nc - 1, nc - 2, right);
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    const Index n = to_index(y.size());
#pragma omp parallel for schedule(static) if (y.size() >= kParallelMinSize)
    for (Index i = 0; i < n; ++i) y[i] += alpha * x[i];
}

}  // namespace fpcc::kernels::parallel
