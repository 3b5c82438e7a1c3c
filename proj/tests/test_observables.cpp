#include <doctest.h>

#include <cmath>
#include <random>

#include "strobowalk/observables.hpp"
#include "strobowalk/scan.hpp"
#include "strobowalk/walk.hpp"

using namespace strobowalk;

namespace {

Distribution three_step_dist() {
    // exact 3-step Hadamard walk from coin |0>
    Distribution d;
    d.step = 3;
    d.offsets = {-3, -1, 1, 3};
    d.probabilities = {1.0 / 8, 1.0 / 8, 5.0 / 8, 1.0 / 8};
    return d;
}

} // namespace

TEST_SUITE("observables") {

TEST_CASE("distribution of the initial state is a point mass") {
    const Distribution d = distribution(initial_state(42, 5));
    REQUIRE(d.offsets.size() == 1);
    CHECK(d.offsets[0] == 0);
    CHECK(d.probabilities[0] == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("distribution after one symmetric step") {
    WalkConfig cfg;
    cfg.model = make_harmonic(1.0);
    cfg.steps = 1;
    cfg.origin = 101;
    const Distribution d = distribution(evolve(cfg));
    REQUIRE(d.offsets.size() == 2);
    CHECK(d.offsets[0] == -1);
    CHECK(d.offsets[1] == 1);
    CHECK(d.probabilities[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(d.probabilities[1] == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("distribution of the 3-step walk from coin |0>") {
    WalkConfig cfg;
    cfg.model = make_free_particle(1.0, 1.0);
    cfg.steps = 3;
    cfg.origin = 0;
    cfg.coin0 = {1, 0};
    cfg.coin1 = {0, 0};
    const Distribution d = distribution(evolve(cfg));
    const Distribution expected = three_step_dist();
    REQUIRE(d.offsets == expected.offsets);
    for (std::size_t i = 0; i < d.offsets.size(); ++i)
        CHECK(d.probabilities[i] ==
              doctest::Approx(expected.probabilities[i]).epsilon(1e-12));
}

TEST_CASE("spread of degenerate and two-point distributions") {
    Distribution point;
    point.step = 0;
    point.offsets = {0};
    point.probabilities = {1.0};
    const SpreadRecord p = spread(point, 0);
    CHECK(p.mean == 0.0);
    CHECK(p.stddev == 0.0);
    CHECK(p.rms_displacement == 0.0);

    Distribution two;
    two.step = 1;
    two.offsets = {-1, 1};
    two.probabilities = {0.5, 0.5};
    const SpreadRecord r = spread(two, 1);
    CHECK(r.mean == doctest::Approx(0.0));
    CHECK(r.stddev == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(r.rms_displacement == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("moments of the exact 3-step distribution") {
    // sum n P = 1/2 and sum n^2 P = 3 for the listed probabilities
    const SpreadRecord r = spread(three_step_dist(), 3);
    CHECK(r.mean == doctest::Approx(0.5).epsilon(1e-15));
    CHECK(r.rms_displacement == doctest::Approx(std::sqrt(3.0)).epsilon(1e-15));
    CHECK(r.stddev == doctest::Approx(std::sqrt(3.0 - 0.25)).epsilon(1e-15));
}

TEST_CASE("moment identity rms^2 = stddev^2 + mean^2") {
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    for (int trial = 0; trial < 50; ++trial) {
        Distribution d;
        d.step = 9;
        double total = 0.0;
        for (long off = -9; off <= 9; off += 2) {
            d.offsets.push_back(off);
            d.probabilities.push_back(u(rng));
            total += d.probabilities.back();
        }
        for (double& p : d.probabilities) p /= total;
        const SpreadRecord r = spread(d, 9);
        CHECK(r.rms_displacement * r.rms_displacement ==
              doctest::Approx(r.stddev * r.stddev + r.mean * r.mean)
                  .epsilon(1e-10));
    }
}

TEST_CASE("classical reference at small t") {
    const Distribution one = classical_reference(1);
    REQUIRE(one.offsets.size() == 2);
    CHECK(one.probabilities[0] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(one.probabilities[1] == doctest::Approx(0.5).epsilon(1e-14));

    const Distribution two = classical_reference(2);
    REQUIRE(two.offsets.size() == 3);
    CHECK(two.offsets[0] == -2);
    CHECK(two.probabilities[0] == doctest::Approx(0.25).epsilon(1e-14));
    CHECK(two.probabilities[1] == doctest::Approx(0.5).epsilon(1e-14));
    CHECK(two.probabilities[2] == doctest::Approx(0.25).epsilon(1e-14));

    CHECK_THROWS_AS(classical_reference(0), std::invalid_argument);
}

TEST_CASE("classical reference stddev is sqrt(t)") {
    const SpreadRecord r100 = spread(classical_reference(100), 100);
    CHECK(r100.mean == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(r100.stddev == doctest::Approx(10.0).epsilon(1e-9));

    std::mt19937 rng(13);
    std::uniform_int_distribution<int> ts(1, 400);
    for (int trial = 0; trial < 20; ++trial) {
        const int t = ts(rng);
        const SpreadRecord r = spread(classical_reference(t), t);
        CHECK(r.norm_error < 1e-11);
        CHECK(r.stddev ==
              doctest::Approx(std::sqrt(static_cast<double>(t))).epsilon(1e-9));
    }
}

TEST_CASE("growth exponent recovers exact power laws") {
    std::vector<SpreadRecord> linear, rooted;
    for (int t = 1; t <= 60; ++t) {
        SpreadRecord a{};
        a.step = t;
        a.stddev = 0.5 * t;
        linear.push_back(a);
        SpreadRecord b{};
        b.step = t;
        b.stddev = std::sqrt(static_cast<double>(t));
        rooted.push_back(b);
    }
    const ExponentFit lin = growth_exponent(linear, {10, 60});
    CHECK(lin.alpha == doctest::Approx(1.0).epsilon(1e-10));
    CHECK(lin.rms_residual < 1e-10);
    const ExponentFit root = growth_exponent(rooted, {10, 60});
    CHECK(root.alpha == doctest::Approx(0.5).epsilon(1e-10));
}

TEST_CASE("growth exponent preconditions") {
    std::vector<SpreadRecord> few;
    for (int t = 1; t <= 5; ++t) {
        SpreadRecord r{};
        r.step = t;
        r.stddev = t;
        few.push_back(r);
    }
    CHECK_THROWS_AS(static_cast<void>(growth_exponent(few, {1, 5})),
                    std::invalid_argument);

    std::vector<SpreadRecord> with_zero;
    for (int t = 1; t <= 20; ++t) {
        SpreadRecord r{};
        r.step = t;
        r.stddev = (t == 7) ? 0.0 : t;
        with_zero.push_back(r);
    }
    CHECK_THROWS_AS(static_cast<void>(growth_exponent(with_zero, {1, 20})),
                    std::invalid_argument);
    CHECK_THROWS_AS(static_cast<void>(growth_exponent(with_zero, {0, 20})),
                    std::invalid_argument);
}

TEST_CASE("default fit range is the last half") {
    CHECK(default_fit_range(200).lo == 100);
    CHECK(default_fit_range(200).hi == 200);
    CHECK(default_fit_range(21).lo == 11);
    CHECK(default_fit_range(21).hi == 21);
}

TEST_CASE("symmetric initial state keeps the mean at zero") {
    WalkConfig cfg;
    cfg.model = make_harmonic(1.0);
    cfg.steps = 200;
    cfg.origin = 300;
    const std::vector<SpreadRecord> records = run_recorded(cfg);
    for (const SpreadRecord& rec : records)
        CHECK(std::abs(rec.mean) < 1e-9);
}

} // TEST_SUITE
