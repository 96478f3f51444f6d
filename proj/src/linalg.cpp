#include "fpcc/linalg.hpp"

#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include "fpcc/error.hpp"
#include "fpcc/kernels.hpp"

namespace fpcc {

namespace {

void check_vector(const TridiagonalSystem& sys, std::span<const double> u) {
    sys.validate();
    if (u.size() != sys.size()) {
        throw Error(ErrorCode::size_mismatch, "vector of length " + std::to_string(u.size()) +
                                                  " for system of size " +
                                                  std::to_string(sys.size()));
    }
}

void check_diagonal(const TridiagonalSystem& sys) {
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys.diag[i] == 0.0) {
            throw Error(ErrorCode::zero_diagonal, "diagonal entry " + std::to_string(i));
        }
    }
}

// Forward elimination and back substitution on rows [first, last) with the
// couplings to rows outside the range dropped.
void thomas_range(const TridiagonalSystem& sys, std::span<const double> rhs, std::size_t first,
                  std::size_t last, std::span<double> x) {
    const std::size_t n = last - first;
    if (n == 0) return;
    std::vector<double> c_prime(n);
    std::vector<double> d_prime(n);
    for (std::size_t i = 0; i < n; ++i) {
        const std::size_t row = first + i;
        const double sub = i > 0 ? sys.lower[row - 1] : 0.0;
        const double pivot = sys.diag[row] - (i > 0 ? sub * c_prime[i - 1] : 0.0);
        if (pivot == 0.0 || !std::isfinite(pivot)) {
            throw Error(ErrorCode::zero_pivot, "pivot at row " + std::to_string(row));
        }
        c_prime[i] = (i + 1 < n) ? sys.upper[row] / pivot : 0.0;
        d_prime[i] = (rhs[row] - (i > 0 ? sub * d_prime[i - 1] : 0.0)) / pivot;
    }
    x[first + n - 1] = d_prime[n - 1];
    for (std::size_t i = n - 1; i-- > 0;) {
        x[first + i] = d_prime[i] - c_prime[i] * x[first + i + 1];
    }
}

}  // namespace

CellVector thomas_solve(const TridiagonalSystem& sys) {
    sys.validate();
    CellVector x(sys.size());
    thomas_range(sys, sys.rhs, 0, sys.size(), x);
    return x;
}

CellVector solve_pinned(const TridiagonalSystem& sys, std::size_t pin) {
    sys.validate();
    const std::size_t n = sys.size();
    if (pin >= n) throw Error(ErrorCode::invalid_argument, "pin index out of range");
    std::vector<double> rhs = sys.rhs;
    const double mean = std::accumulate(rhs.begin(), rhs.end(), 0.0) / static_cast<double>(n);
    for (double& r : rhs) r -= mean;
    CellVector x(n, 0.0);
    thomas_range(sys, rhs, 0, pin, x);
    thomas_range(sys, rhs, pin + 1, n, x);
    return x;
}

// The divisions only involve values known before the sweep reaches row i,
// so the loop-carried chain is a single multiply-add.
void gauss_seidel_sweep(const TridiagonalSystem& sys, std::span<double> u) {
    check_vector(sys, u);
    check_diagonal(sys);
    const std::size_t n = sys.size();
    if (n == 1) {
        u[0] = sys.rhs[0] / sys.diag[0];
        return;
    }
    u[0] = (sys.rhs[0] - sys.upper[0] * u[1]) / sys.diag[0];
    for (std::size_t i = 1; i + 1 < n; ++i) {
        const double known = (sys.rhs[i] - sys.upper[i] * u[i + 1]) / sys.diag[i];
        u[i] = known - (sys.lower[i - 1] / sys.diag[i]) * u[i - 1];
    }
    u[n - 1] = (sys.rhs[n - 1] - sys.lower[n - 2] * u[n - 2]) / sys.diag[n - 1];
}

void gauss_seidel_backward_sweep(const TridiagonalSystem& sys, std::span<double> u) {
    check_vector(sys, u);
    check_diagonal(sys);
    const std::size_t n = sys.size();
    if (n == 1) {
        u[0] = sys.rhs[0] / sys.diag[0];
        return;
    }
    u[n - 1] = (sys.rhs[n - 1] - sys.lower[n - 2] * u[n - 2]) / sys.diag[n - 1];
    for (std::size_t i = n - 2; i > 0; --i) {
        const double known = (sys.rhs[i] - sys.lower[i - 1] * u[i - 1]) / sys.diag[i];
        u[i] = known - (sys.upper[i] / sys.diag[i]) * u[i + 1];
    }
    u[0] = (sys.rhs[0] - sys.upper[0] * u[1]) / sys.diag[0];
}

void symmetric_gauss_seidel_sweep(const TridiagonalSystem& sys, std::span<double> u) {
    gauss_seidel_sweep(sys, u);
    gauss_seidel_backward_sweep(sys, u);
}

CellVector relax_sweep(const TridiagonalSystem& sys, std::span<const double> u) {
    CellVector out(u.begin(), u.end());
    gauss_seidel_sweep(sys, out);
    return out;
}

CellVector jacobi_sweep(const TridiagonalSystem& sys, std::span<const double> u, double weight) {
    check_vector(sys, u);
    for (std::size_t i = 0; i < sys.size(); ++i) {
        if (sys.diag[i] == 0.0) {
            throw Error(ErrorCode::zero_diagonal, "diagonal entry " + std::to_string(i));
        }
    }
    CellVector out(u.size());
    kernels::jacobi_sweep(sys.matrix(), sys.rhs, u, weight, out);
    return out;
}

CellVector residual(const TridiagonalSystem& sys, std::span<const double> u) {
    check_vector(sys, u);
    CellVector r(u.size());
    kernels::residual(sys.matrix(), sys.rhs, u, r);
    return r;
}

CellVector apply(const TridiagonalSystem& sys, std::span<const double> u) {
    check_vector(sys, u);
    CellVector out(u.size());
    kernels::apply(sys.matrix(), u, out);
    return out;
}

}  // namespace fpcc
