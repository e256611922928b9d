#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "qrod/parameters.hpp"
#include "test_support.hpp"

using namespace qrod;

TEST_CASE("derive: natural units") {
    const auto d = derive(RodParameters::natural(0.01));
    CHECK(d.moment_of_inertia == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(d.kappa == 4.0 / 3.0);
    CHECK(d.omega == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(d.effective_mass == doctest::Approx(4.0 / 3.0).epsilon(1e-15));
    CHECK(d.growth_rate == doctest::Approx(0.86602540378443865).epsilon(1e-15));
    CHECK(d.de_broglie_ratio == doctest::Approx(0.01).epsilon(1e-15));
}

TEST_CASE("derive: SI example") {
    // frozen from an independent 40-digit evaluation of the definitions
    const RodParameters p{2.0, 0.5, 9.8, kCodataHbar};
    const auto d = derive(p);
    CHECK(d.omega == doctest::Approx(4.4271887242357311).epsilon(1e-14));
    CHECK(d.moment_of_inertia == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(d.effective_mass == doctest::Approx(8.0 / 3.0).epsilon(1e-14));
    CHECK(d.growth_rate == doctest::Approx(3.8340579025361628).epsilon(1e-14));
    CHECK(d.de_broglie_ratio == doctest::Approx(4.7640698542032519e-35).epsilon(1e-14));
}

TEST_CASE("derive: rejects non-positive inputs naming the field") {
    RodParameters p = RodParameters::natural(1.0);
    p.mass = 0.0;
    CHECK_THROWS_WITH_AS(derive(p), doctest::Contains("mass"), DomainError);
    p = RodParameters::natural(1.0);
    p.half_length = -1.0;
    CHECK_THROWS_WITH_AS(derive(p), doctest::Contains("half_length"), DomainError);
    p = RodParameters::natural(1.0);
    p.gravity = 0.0;
    CHECK_THROWS_WITH_AS(derive(p), doctest::Contains("gravity"), DomainError);
    p = RodParameters::natural(0.0);
    CHECK_THROWS_WITH_AS(derive(p), doctest::Contains("hbar"), DomainError);
}

TEST_CASE("derive: quadrupling gravity exactly doubles both frequencies") {
    std::mt19937_64 rng(42);
    std::uniform_real_distribution<double> pick(0.1, 10.0);
    for (int i = 0; i < 200; ++i) {
        RodParameters p{pick(rng), pick(rng), pick(rng), pick(rng)};
        RodParameters q = p;
        q.gravity = 4.0 * p.gravity;
        const auto dp = derive(p);
        const auto dq = derive(q);
        CHECK(dq.omega == 2.0 * dp.omega);
        CHECK(dq.growth_rate == 2.0 * dp.growth_rate);
    }
}

TEST_CASE("derive: frequency identities hold to machine precision") {
    std::mt19937_64 rng(7);
    std::uniform_real_distribution<double> pick(0.05, 20.0);
    const double sqrt3_half = std::sqrt(3.0) / 2.0;
    for (int i = 0; i < 200; ++i) {
        const RodParameters p{pick(rng), pick(rng), pick(rng), pick(rng)};
        const auto d = derive(p);
        CHECK(d.kappa == 4.0 / 3.0);
        CHECK(d.growth_rate == doctest::Approx(sqrt3_half * d.omega).epsilon(1e-15));
        // 1/Omega == sqrt(kappa)/omega, the consistency between the two
        // tipping-time variable sets
        CHECK(1.0 / d.growth_rate ==
              doctest::Approx(std::sqrt(d.kappa) / d.omega).epsilon(1e-15));
        // I Omega == sqrt(kappa) m a^2 omega
        CHECK(d.action_scale() ==
              doctest::Approx(std::sqrt(d.kappa) * p.mass * p.half_length * p.half_length *
                              d.omega)
                  .epsilon(1e-14));
    }
}

TEST_CASE("classical_regime thresholds") {
    CHECK(classical_regime(RodParameters::natural(10.0)) == Regime::Quantum);
    CHECK(classical_regime(RodParameters::natural(1e-6)) == Regime::Classical);
    CHECK(classical_regime(RodParameters::natural(0.5)) == Regime::Intermediate);
}

TEST_CASE("gaussian state: normalization integral is exactly one") {
    for (const double sigma : {0.01, 0.05, 0.1, 0.2, 0.3, 0.5}) {
        const GaussianState state = make_gaussian(sigma);
        const int panels = sigma <= 0.05 ? 400000 : 60000;
        const double norm = test::simpson(
            [&](double th) { return state.density(th); }, -std::numbers::pi / 2.0,
            std::numbers::pi / 2.0, panels);
        CHECK(std::abs(norm - 1.0) < 1e-12);
    }
}

TEST_CASE("gaussian state: symmetric, centred, quiet at the walls") {
    const GaussianState state = make_gaussian(0.3);
    CHECK(state.amplitude(0.2) == state.amplitude(-0.2));
    const double mean = test::simpson(
        [&](double th) { return th * state.density(th); }, -std::numbers::pi / 2.0,
        std::numbers::pi / 2.0, 40000);
    CHECK(std::abs(mean) < 1e-15);
    // the wide end of the allowed range still satisfies psi(+-pi/2) ~ 0
    CHECK(state.density(std::numbers::pi / 2.0) < 1e-10 * state.density(0.0));
}

TEST_CASE("gaussian state: range errors and width warning") {
    CHECK_THROWS_AS(make_gaussian(0.0), DomainError);
    CHECK_THROWS_AS(make_gaussian(-0.1), DomainError);
    CHECK_THROWS_AS(make_gaussian(std::numbers::pi / 2.0), DomainError);

    WarningLog log;
    make_gaussian(0.29, &log);
    CHECK(log.empty());
    make_gaussian(0.35, &log);
    REQUIRE(log.size() == 1);
    CHECK(log.messages()[0].find("0.35") != std::string::npos);
}
