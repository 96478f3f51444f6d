#include "doctest.h"

#include <cmath>
#include <random>

#include "fpcc/error.hpp"
#include "fpcc/metrics.hpp"
#include "oracles.hpp"

using namespace fpcc;

TEST_SUITE("metrics") {

TEST_CASE("stationary norms") {
    const ErrorRecord zero = norms_stationary(std::vector<double>(5, 0.0), 0.1);
    CHECK(zero.l1_paper == 0.0);
    CHECK(zero.l2_paper == 0.0);
    CHECK(zero.linf == 0.0);

    const ErrorRecord ones = norms_stationary(std::vector<double>(10, 1.0), 0.1);
    CHECK(ones.l1_paper == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(ones.l2_paper == doctest::Approx(0.1).epsilon(1e-15));
    CHECK(ones.n_cells == 10);

    const ErrorRecord pyth = norms_stationary(std::vector<double>{3.0, -4.0}, 1.0);
    CHECK(pyth.l2_std == doctest::Approx(5.0).epsilon(1e-15));
    CHECK(pyth.linf == 4.0);
    CHECK(pyth.l1_std == 7.0);
}

TEST_CASE("paper L2 equals h times the squared standard L2") {
    std::mt19937_64 rng(6);
    for (int trial = 0; trial < 50; ++trial) {
        const double h = std::uniform_real_distribution<double>(1e-3, 1.0)(rng);
        const std::vector<double> e = oracle::random_vector(rng, 81);
        const ErrorRecord r = norms_stationary(e, h);
        CHECK(std::abs(r.l2_paper - h * r.l2_std * r.l2_std) <= 1e-13 * r.l2_paper);
    }
}

TEST_CASE("space-time norms") {
    const ErrorRecord zero = norms_spacetime({CellVector(4, 0.0), CellVector(4, 0.0)}, 0.5, 0.1);
    CHECK(zero.l1_paper == 0.0);
    CHECK(zero.l2_paper == 0.0);

    const ErrorRecord one = norms_spacetime({CellVector(2, 1.0)}, 1.0, 1.0);
    CHECK(one.l1_paper == 2.0);
    CHECK(one.l2_paper == 2.0);
    CHECK(one.n_steps == 0);

    std::mt19937_64 rng(9);
    std::vector<CellVector> levels;
    for (int m = 0; m < 5; ++m) levels.push_back(oracle::random_vector(rng, 27));
    const ErrorRecord a = norms_spacetime(levels, 0.2, 0.01);
    const ErrorRecord b = norms_spacetime(levels, 0.2, 0.02);
    CHECK(b.l1_paper == doctest::Approx(2.0 * a.l1_paper).epsilon(1e-15));
    CHECK(b.l2_paper == doctest::Approx(2.0 * a.l2_paper).epsilon(1e-15));
    CHECK(a.n_steps == 4);

    double s1 = 0.0, s2 = 0.0;
    for (const auto& v : levels) for (double x : v) { s1 += std::abs(x); s2 += x * x; }
    CHECK(a.l1_paper == doctest::Approx(0.2 * 0.2 * 0.01 * s1).epsilon(1e-14));
    CHECK(a.l2_paper == doctest::Approx(0.01 * 0.2 * 0.2 * s2).epsilon(1e-14));
    const ErrorRecord last = norms_stationary(levels.back(), 0.2);
    CHECK(a.linf == last.linf);
    CHECK(a.l2_std == last.l2_std);

    SpaceTimeNorms stream(0.2, 0.01);
    for (const auto& v : levels) stream.add(v);
    const ErrorRecord c = stream.record();
    CHECK(c.l1_paper == doctest::Approx(a.l1_paper).epsilon(1e-15));
    CHECK(c.l2_paper == doctest::Approx(a.l2_paper).epsilon(1e-15));
    CHECK(stream.levels() == 5);

    CHECK_THROWS_AS(norms_spacetime({}, 0.1, 0.1), Error);
    CHECK_THROWS_AS(SpaceTimeNorms(0.1, 0.1).record(), Error);
}

TEST_CASE("convergence order") {
    CHECK(convergence_order(std::vector<double>{9e-6, 1e-6}, 3.0) == doctest::Approx(2.0).epsilon(1e-12));
    const std::vector<double> table = {1.9392e-6, 2.4187e-7, 1.6076e-8, 1.4322e-9};
    CHECK(convergence_order(table, 3.0) == doctest::Approx(2.2158436).epsilon(1e-6));
    CHECK(convergence_order(std::vector<double>{1e-3, 1e-3, 1e-3}, 3.0) == doctest::Approx(0.0).scale(1.0));

    std::vector<double> scaled = table;
    for (double& v : scaled) v *= 123.0;
    CHECK(convergence_order(scaled, 3.0) == doctest::Approx(convergence_order(table, 3.0)).epsilon(1e-12));

    try {
        convergence_order(std::vector<double>{1.0}, 3.0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::too_few_points);
    }
    try {
        convergence_order(std::vector<double>{1.0, 0.0}, 3.0);
        FAIL("expected an error");
    } catch (const Error& e) {
        CHECK(e.code() == ErrorCode::nonpositive_error);
    }
    CHECK_THROWS_AS(convergence_order(std::vector<double>{1.0, 0.5}, 1.0), Error);
}

TEST_CASE("mass and related sums") {
    const std::vector<double> u = {1.0, -2.0, 3.0};
    CHECK(mass(u, 0.5) == 1.0);
    CHECK(paper_l2(u, 0.5) == doctest::Approx(0.25 * 14.0));
    CHECK(max_abs(u) == 3.0);
}

}
