#include "doctest.h"

#include <cmath>
#include <numeric>
#include <random>

#include "fpcc/error.hpp"
#include "fpcc/linalg.hpp"
#include "fpcc/operator.hpp"
#include "oracles.hpp"

using namespace fpcc;

namespace {

ProblemSpec coefficient_problem(SpaceTimeField b, SpaceTimeField c, double xl, double xr) {
    ProblemSpec p;
    p.name = "test";
    p.advection = std::move(b);
    p.diffusion = std::move(c);
    p.source = [](double, double) { return 0.0; };
    p.initial = [](double) { return 1.0; };
    p.x_left = xl;
    p.x_right = xr;
    return p;
}

// u[i+1]/u[i] = (c/h - delta b)/((1 - delta) b + c/h) on every interior edge.
std::vector<double> ratio_equilibrium(const EdgeCoefficients& k) {
    const std::size_t n = k.n_cells();
    std::vector<double> u(n, 1.0);
    for (std::size_t j = 1; j < n; ++j) {
        const double num = k.c[j] / k.h - k.delta[j] * k.b[j];
        const double den = (1.0 - k.delta[j]) * k.b[j] + k.c[j] / k.h;
        u[j] = u[j - 1] * num / den;
    }
    return u;
}

}  // namespace

TEST_SUITE("operator") {

TEST_CASE("omega at the mid edge of B = x, C = 1 on [0, 10]") {
    const auto p = coefficient_problem([](double x, double) { return x; },
                                       [](double, double) { return 1.0; }, 0.0, 10.0);
    const StaggeredGrid g = make_grid(0.0, 10.0, 10);
    const EdgeCoefficients k = edge_coefficients(p, g, 0.3);
    CHECK(g.edge(5) == 5.0);
    CHECK(k.omega[5] == doctest::Approx(g.h() * 5.0));
    for (std::size_t j = 0; j <= 10; ++j) {
        CHECK(k.omega[j] == doctest::Approx(g.h() * k.b[j] / k.c[j]));
        CHECK(k.delta[j] > 0.0);
        CHECK(k.delta[j] < 1.0);
    }
}

TEST_CASE("zero advection gives centered weights") {
    const auto p = coefficient_problem([](double, double) { return 0.0; },
                                       [](double x, double) { return 1.0 + x * x; }, -1.0, 1.0);
    const EdgeCoefficients k = edge_coefficients(p, make_grid(-1.0, 1.0, 27), 0.0);
    for (double d : k.delta) CHECK(d == 0.5);
}

TEST_CASE("delta at mirrored edges of B = -x sums to one") {
    const auto p = coefficient_problem([](double x, double) { return -x; },
                                       [](double, double) { return 0.5; }, -6.0, 6.0);
    const EdgeCoefficients k = edge_coefficients(p, make_grid(-6.0, 6.0, 81), 0.0);
    for (std::size_t j = 0; j <= 81; ++j) {
        CHECK(k.delta[j] + k.delta[81 - j] == doctest::Approx(1.0).epsilon(1e-14));
    }
}

TEST_CASE("nonpositive diffusion is rejected") {
    const auto p = coefficient_problem([](double, double) { return 1.0; },
                                       [](double x, double) { return x; }, -1.0, 1.0);
    try {
        edge_coefficients(p, make_grid(-1.0, 1.0, 9), 0.0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::nonpositive_diffusion);
    }
}

TEST_CASE("flux vanishes on the discrete equilibrium") {
    const auto p = coefficient_problem([](double x, double) { return x - 0.3 * x * x * x; },
                                       [](double x, double) { return 0.2 + 0.05 * x * x; },
                                       -4.0, 4.0);
    const EdgeCoefficients k = edge_coefficients(p, make_grid(-4.0, 4.0, 81), 0.0);
    const std::vector<double> u = ratio_equilibrium(k);
    const EdgeVector f = flux(k, u);
    const double scale = oracle::max_abs(u) * (oracle::max_abs(k.b) + oracle::max_abs(k.c) / k.h);
    for (double v : f) CHECK(std::abs(v) <= 1e-13 * scale);

    const CellVector eq = equilibrium_profile(k);
    const double total = std::accumulate(u.begin(), u.end(), 0.0) * k.h;
    for (std::size_t i = 0; i < u.size(); ++i) {
        CHECK(eq[i] == doctest::Approx(u[i] / total).epsilon(1e-11));
    }
}

TEST_CASE("flux of constant and linear data without advection") {
    const StaggeredGrid g = make_grid(0.0, 1.0, 27);
    const EdgeCoefficients k = edge_coefficients_from_samples(std::vector<double>(28, 0.0),
                                                             std::vector<double>(28, 1.0), g.h(), 0.0);
    const EdgeVector f0 = flux(k, std::vector<double>(27, 3.0));
    for (double v : f0) CHECK(v == 0.0);
    const EdgeVector f1 = flux(k, g.centers());
    CHECK(f1[0] == 0.0);
    CHECK(f1[27] == 0.0);
    for (std::size_t j = 1; j < 27; ++j) CHECK(f1[j] == doctest::Approx(1.0).epsilon(1e-13));
}

TEST_CASE("flux agrees with the delta-weighted formula") {
    std::mt19937_64 rng(7);
    const std::size_t n = 81;
    const double h = 0.1;
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<double> b = oracle::random_vector(rng, n + 1, -30.0, 30.0);
        std::vector<double> c = oracle::random_vector(rng, n + 1, 0.05, 2.0);
        const std::vector<double> u = oracle::random_vector(rng, n, 0.0, 1.0);
        const EdgeCoefficients k = edge_coefficients_from_samples(b, c, h, 0.0);
        const EdgeVector f = flux(k, u);
        const std::vector<double> ref = oracle::naive_flux(b, c, h, u);
        for (std::size_t j = 0; j <= n; ++j) {
            const double scale = std::abs(b[j]) + c[j] / h;
            CHECK(std::abs(f[j] - ref[j]) <= 1e-13 * scale);
        }
    }
    const EdgeCoefficients k = edge_coefficients_from_samples(std::vector<double>(10, 1.0),
                                                             std::vector<double>(10, 1.0), h, 0.0);
    CHECK_THROWS_AS(flux(k, std::vector<double>(8, 1.0)), Error);
}

TEST_CASE("heat stencil for bdf1") {
    const double tau = 0.01;
    const StaggeredGrid g = make_grid(0.0, 1.0, 9);
    const EdgeCoefficients k = edge_coefficients_from_samples(std::vector<double>(10, 0.0),
                                                             std::vector<double>(10, 1.0), g.h(), 0.0);
    const TridiagonalSystem s = assemble_operator(k, Scheme::bdf1, tau);
    const double r = tau / (g.h() * g.h());
    for (std::size_t i = 1; i + 1 < 9; ++i) {
        CHECK(s.lower[i - 1] == doctest::Approx(-r).epsilon(1e-14));
        CHECK(s.diag[i] == doctest::Approx(1.0 + 2.0 * r).epsilon(1e-14));
        CHECK(s.upper[i] == doctest::Approx(-r).epsilon(1e-14));
    }
    CHECK(s.diag[0] == doctest::Approx(1.0 + r).epsilon(1e-14));
    CHECK(s.diag[8] == doctest::Approx(1.0 + r).epsilon(1e-14));
}

TEST_CASE("assembled operators match the dense flux-difference oracle") {
    std::mt19937_64 rng(11);
    const std::size_t n = 27;
    const double h = 12.0 / n;
    const std::vector<double> b = oracle::random_vector(rng, n + 1, -5.0, 5.0);
    const std::vector<double> c = oracle::random_vector(rng, n + 1, 0.1, 1.0);
    const EdgeCoefficients k = edge_coefficients_from_samples(b, c, h, 0.0);
    struct Case {
        Scheme scheme;
        double time_coeff;
        double tau;
    };
    for (const Case cs : {Case{Scheme::stationary, 0.0, 1.0}, Case{Scheme::bdf1, 1.0, 0.05},
                          Case{Scheme::bdf2, 1.5, 0.05}}) {
        const TridiagonalSystem s =
            assemble_operator(k, cs.scheme, cs.scheme == Scheme::stationary ? 0.0 : cs.tau);
        const oracle::Dense ref = oracle::naive_operator(b, c, h, cs.time_coeff, cs.tau, n);
        const oracle::Dense got = oracle::dense_from(s);
        double scale = 0.0;
        for (const auto& row : ref) for (long double v : row) scale = std::max(scale, static_cast<double>(std::fabs(v)));
        for (std::size_t i = 0; i < n; ++i) {
            for (std::size_t j = 0; j < n; ++j) {
                CHECK(std::abs(static_cast<double>(got[i][j] - ref[i][j])) <= 1e-13 * scale);
            }
        }
    }
}

TEST_CASE("flux-difference columns sum to zero") {
    std::mt19937_64 rng(5);
    const std::size_t n = 81;
    const double h = 0.05;
    const std::vector<double> b = oracle::random_vector(rng, n + 1, -40.0, 40.0);
    const std::vector<double> c = oracle::random_vector(rng, n + 1, 0.05, 1.0);
    const EdgeCoefficients k = edge_coefficients_from_samples(b, c, h, 0.0);
    const TridiagonalSystem s = assemble_operator(k, Scheme::stationary, 0.0);
    for (std::size_t col = 0; col < n; ++col) {
        double sum = s.diag[col];
        double scale = std::abs(s.diag[col]);
        if (col > 0) {
            sum += s.upper[col - 1];
            scale += std::abs(s.upper[col - 1]);
        }
        if (col + 1 < n) {
            sum += s.lower[col];
            scale += std::abs(s.lower[col]);
        }
        CHECK(std::abs(sum) <= 1e-14 * scale);
    }
    for (int trial = 0; trial < 10; ++trial) {
        const std::vector<double> u = oracle::random_vector(rng, n);
        const CellVector au = fpcc::apply(s, u);
        const double total = std::accumulate(au.begin(), au.end(), 0.0);
        double norm = 0.0;
        for (double v : u) norm += v * v;
        CHECK(std::abs(total) <= 1e-12 * std::sqrt(norm) * (oracle::max_abs(b) + oracle::max_abs(c) / h) / h);
    }
}

TEST_CASE("stationary operator annihilates the discrete equilibrium") {
    const auto p = coefficient_problem([](double x, double) { return x; },
                                       [](double, double) { return 0.5; }, -6.0, 6.0);
    const EdgeCoefficients k = edge_coefficients(p, make_grid(-6.0, 6.0, 81), 0.0);
    const TridiagonalSystem s = assemble_operator(k, Scheme::stationary, 0.0);
    const CellVector eq = equilibrium_profile(k);
    const CellVector r = fpcc::apply(s, eq);
    const double scale = oracle::max_abs(eq) * (oracle::max_abs(k.b) + 2.0 * 0.5 / k.h) / k.h;
    for (double v : r) CHECK(std::abs(v) <= 1e-13 * scale);
}

TEST_CASE("one bdf1 step keeps the discrete equilibrium") {
    const auto p = coefficient_problem([](double x, double) { return x * x * x - x; },
                                       [](double, double) { return 0.08; }, -3.0, 3.0);
    const EdgeCoefficients k = edge_coefficients(p, make_grid(-3.0, 3.0, 81), 0.0);
    const CellVector eq = equilibrium_profile(k);
    const std::vector<double> g(81, 0.0);
    const TridiagonalSystem s = assemble_step(k, Scheme::bdf1, 0.1, eq, std::nullopt, g);
    const CellVector next = thomas_solve(s);
    CHECK(oracle::max_abs_diff(next, eq) <= 1e-12 * oracle::max_abs(eq));
}

TEST_CASE("bdf1 matrix has the M-matrix sign pattern") {
    std::mt19937_64 rng(3);
    const std::vector<double> b = oracle::random_vector(rng, 82, -100.0, 100.0);
    const std::vector<double> c = oracle::random_vector(rng, 82, 1e-3, 1.0);
    const EdgeCoefficients k = edge_coefficients_from_samples(b, c, 0.1, 0.0);
    const TridiagonalSystem s = assemble_operator(k, Scheme::bdf1, 0.5);
    for (double v : s.lower) CHECK(v <= 0.0);
    for (double v : s.upper) CHECK(v <= 0.0);
    for (double v : s.diag) CHECK(v > 0.0);
}

TEST_CASE("step right-hand sides") {
    const EdgeCoefficients k = edge_coefficients_from_samples(std::vector<double>(4, 0.0),
                                                             std::vector<double>(4, 1.0), 0.5, 0.0);
    const std::vector<double> u1 = {1.0, 2.0, 3.0};
    const std::vector<double> u0 = {0.5, 1.0, 4.0};
    const std::vector<double> g = {10.0, 20.0, 30.0};
    const double tau = 0.1;
    const TridiagonalSystem s1 = assemble_step(k, Scheme::bdf1, tau, u1, std::nullopt, g);
    const TridiagonalSystem s2 = assemble_step(k, Scheme::bdf2, tau, u1, std::span<const double>(u0), g);
    for (std::size_t i = 0; i < 3; ++i) {
        CHECK(s1.rhs[i] == doctest::Approx(u1[i] + tau * g[i]));
        CHECK(s2.rhs[i] == doctest::Approx((4.0 * u1[i] - u0[i]) / 2.0 + tau * g[i]));
    }
    const TridiagonalSystem st = assemble_step(k, Scheme::stationary, 0.0, u1, std::nullopt, g);
    for (double v : st.rhs) CHECK(v == 0.0);
}

TEST_CASE("step assembly errors") {
    const EdgeCoefficients k = edge_coefficients_from_samples(std::vector<double>(4, 0.0),
                                                             std::vector<double>(4, 1.0), 0.5, 0.0);
    const std::vector<double> u(3, 1.0);
    try {
        assemble_step(k, Scheme::bdf2, 0.1, u, std::nullopt, u);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::missing_history);
    }
    try {
        assemble_step(k, Scheme::bdf1, 0.0, u, std::nullopt, u);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::nonpositive_tau);
    }
}

TEST_CASE("scheme names round-trip") {
    for (Scheme s : {Scheme::stationary, Scheme::bdf1, Scheme::bdf2}) {
        CHECK(parse_scheme(to_string(s)) == s);
    }
    CHECK_FALSE(parse_scheme("bdf3").has_value());
}

}
