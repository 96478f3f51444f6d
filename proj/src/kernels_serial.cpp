#include <cassert>

#include "fpcc/exponential_fitting.hpp"
#include "fpcc/kernels.hpp"

namespace fpcc::kernels::serial {

void edge_weights(std::span<const double> b, std::span<const double> c, double h,
                  std::span<double> omega, std::span<double> delta, std::span<double> alpha,
                  std::span<double> beta) {
    const std::size_t n_edges = b.size();
    for (std::size_t j = 0; j < n_edges; ++j) {
        omega[j] = h * b[j] / c[j];
        delta[j] = cc_delta(omega[j]);
        const bool boundary = (j == 0 || j + 1 == n_edges);
        alpha[j] = boundary ? 0.0 : (c[j] / h) * bernoulli(-omega[j]);
        beta[j] = boundary ? 0.0 : (c[j] / h) * bernoulli(omega[j]);
    }
}

void assemble_rows(std::span<const double> alpha, std::span<const double> beta, double h,
                   double time_coeff, double scale, std::span<double> lower,
                   std::span<double> diag, std::span<double> upper) {
    const std::size_t n = diag.size();
    const double s = scale / h;
    for (std::size_t k = 0; k < n; ++k) {
        diag[k] = time_coeff + s * (beta[k + 1] + alpha[k]);
    }
    for (std::size_t k = 0; k + 1 < n; ++k) {
        upper[k] = -s * alpha[k + 1];
        lower[k] = -s * beta[k + 1];
    }
}

void apply(TridiagonalView a, std::span<const double> u, std::span<double> out) {
    const std::size_t n = a.diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.0;
        if (i > 0) v = a.lower[i - 1] * u[i - 1];
        v += a.diag[i] * u[i];
        if (i + 1 < n) v += a.upper[i] * u[i + 1];
        out[i] = v;
    }
}

void residual(TridiagonalView a, std::span<const double> rhs, std::span<const double> u,
              std::span<double> r) {
    const std::size_t n = a.diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.0;
        if (i > 0) v = a.lower[i - 1] * u[i - 1];
        v += a.diag[i] * u[i];
        if (i + 1 < n) v += a.upper[i] * u[i + 1];
        r[i] = rhs[i] - v;
    }
}

void jacobi_sweep(TridiagonalView a, std::span<const double> rhs, std::span<const double> u,
                  double weight, std::span<double> out) {
    const std::size_t n = a.diag.size();
    for (std::size_t i = 0; i < n; ++i) {
        double v = 0.0;
        if (i > 0) v = a.lower[i - 1] * u[i - 1];
        v += a.diag[i] * u[i];
        if (i + 1 < n) v += a.upper[i] * u[i + 1];
        out[i] = u[i] + weight * (rhs[i] - v) / a.diag[i];
    }
}

void restrict_injection(std::span<const double> fine, std::span<double> coarse) {
    for (std::size_t i = 0; i < coarse.size(); ++i) coarse[i] = fine[3 * i + 1];
}

void prolong_quadratic(std::span<const double> coarse, std::span<double> fine) {
    const std::size_t nc = coarse.size();
    assert(nc >= 3 && fine.size() == 3 * nc);
    for (std::size_t k = 0; k < fine.size(); ++k) {
        const std::size_t parent = k / 3;
        // offset of the fine center from its parent's center, in coarse cells
        double s = (static_cast<double>(k % 3) - 1.0) / 3.0;
        std::size_t mid = parent;
        if (parent == 0) {
            mid = 1;
            s -= 1.0;
        } else if (parent == nc - 1) {
            mid = nc - 2;
            s += 1.0;
        }
        const LagrangeWeights w = lagrange3(s);
        fine[k] = w.w_minus * coarse[mid - 1] + w.w_center * coarse[mid] + w.w_plus * coarse[mid + 1];
    }
}

void axpy(double alpha, std::span<const double> x, std::span<double> y) {
    for (std::size_t i = 0; i < y.size(); ++i) y[i] += alpha * x[i];
}

}  // namespace fpcc::kernels::serial
