// Serial reference kernels against their OpenMP versions, plus one full
// two-level step solve.

#include <benchmark/benchmark.h>

#include <random>
#include <vector>

#include "fpcc/kernels.hpp"
#include "fpcc/problems.hpp"
#include "fpcc/twolevel.hpp"

namespace {

using namespace fpcc;

std::vector<double> random_vector(std::size_t n, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> dist(0.1, 1.0);
    std::vector<double> v(n);
    for (double& x : v) x = dist(rng);
    return v;
}

struct Tridiagonal {
    std::vector<double> lower, diag, upper;
    explicit Tridiagonal(std::size_t n)
        : lower(random_vector(n - 1, 1)), diag(random_vector(n, 2)), upper(random_vector(n - 1, 3)) {
        for (double& d : diag) d += 3.0;
    }
    kernels::TridiagonalView view() const { return {lower, diag, upper}; }
};

template <auto Kernel>
void BM_edge_weights(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::vector<double> b = random_vector(n + 1, 4), c = random_vector(n + 1, 5);
    std::vector<double> omega(n + 1), delta(n + 1), alpha(n + 1), beta(n + 1);
    for (auto _ : state) {
        Kernel(b, c, 0.01, omega, delta, alpha, beta);
        benchmark::DoNotOptimize(alpha.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Kernel>
void BM_residual(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Tridiagonal a(n);
    const std::vector<double> rhs = random_vector(n, 6), u = random_vector(n, 7);
    std::vector<double> r(n);
    for (auto _ : state) {
        Kernel(a.view(), rhs, u, r);
        benchmark::DoNotOptimize(r.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Kernel>
void BM_jacobi(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const Tridiagonal a(n);
    const std::vector<double> rhs = random_vector(n, 8), u = random_vector(n, 9);
    std::vector<double> out(n);
    for (auto _ : state) {
        Kernel(a.view(), rhs, u, 2.0 / 3.0, out);
        benchmark::DoNotOptimize(out.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

template <auto Kernel>
void BM_prolong(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const std::vector<double> coarse = random_vector(n / 3, 10);
    std::vector<double> fine(n);
    for (auto _ : state) {
        Kernel(coarse, fine);
        benchmark::DoNotOptimize(fine.data());
    }
    state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(n));
}

void BM_two_level_step(benchmark::State& state) {
    const auto n = static_cast<std::size_t>(state.range(0));
    const ProblemSpec p = builtin(BenchmarkId::ou_manufactured);
    const GridHierarchy hier = make_hierarchy(p.x_left, p.x_right, n);
    const double tau = tau_for(TauLaw::table2, n, p.t_final);
    TridiagonalSystem fine = assemble_operator(edge_coefficients(p, hier.fine, 0.0), Scheme::bdf1, tau);
    const TridiagonalSystem coarse =
        assemble_operator(edge_coefficients(p, hier.coarse, 0.0), Scheme::bdf1, tau);
    const CellVector u = sample_centers(p.initial, hier.fine);
    fill_step_rhs(Scheme::bdf1, tau, u, std::nullopt, sample_centers(p.source, hier.fine, tau),
                  fine.rhs);
    const CycleConfig cfg;
    for (auto _ : state) {
        SolveResult r = solve_to_tolerance(fine, coarse, hier, u, cfg);
        benchmark::DoNotOptimize(r.u.data());
    }
}

constexpr std::int64_t kSmall = 729;
constexpr std::int64_t kLarge = 531441;

}  // namespace

BENCHMARK(BM_edge_weights<fpcc::kernels::serial::edge_weights>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_edge_weights<fpcc::kernels::parallel::edge_weights>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_residual<fpcc::kernels::serial::residual>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_residual<fpcc::kernels::parallel::residual>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_jacobi<fpcc::kernels::serial::jacobi_sweep>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_jacobi<fpcc::kernels::parallel::jacobi_sweep>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_prolong<fpcc::kernels::serial::prolong_quadratic>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_prolong<fpcc::kernels::parallel::prolong_quadratic>)->Arg(kSmall)->Arg(kLarge);
BENCHMARK(BM_two_level_step)->Arg(81)->Arg(729)->Arg(6561);

BENCHMARK_MAIN();
