#include <cmath>
#include <numbers>

#include <doctest.h>

#include "homodyne/fidelities.hpp"

using namespace homodyne;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("fidelities");

TEST_CASE("thermal weights and truncation") {
    CHECK(thermal_weight(1.0, 0) == doctest::Approx(0.5));
    CHECK(thermal_weight(1.0, 1) == doctest::Approx(0.25));
    CHECK(thermal_weight(1.0, 2) == doctest::Approx(0.125));
    double sum = 0.0;
    const int trunc = auto_thermal_truncation(2.0);
    for (int n = 0; n <= trunc; ++n) sum += thermal_weight(2.0, n);
    CHECK(sum >= 1.0 - 1e-8);
    CHECK(std::pow(2.0 / 3.0, trunc + 1) < 1e-8);
    CHECK_THROWS_AS(auto_thermal_truncation(0.0), std::invalid_argument);
}

TEST_CASE("information fidelity closed values") {
    CHECK(info_fidelity_coherent({1.0, kPi / 2, 1.0, 0}, {0.3, 0.8}) == doctest::Approx(0.5));
    CHECK(info_fidelity_coherent({1.0, kPi / 2, 1.0, 0}, {3, 0}) == doctest::Approx(0.5));
    CHECK(info_fidelity_coherent({0.7, kPi / 3, 0.0, 0}, {0, 0}) == doctest::Approx(1.0));
}

TEST_CASE("disturbance fidelity closed values") {
    CHECK(disturbance_fidelity_coherent({0.9, 0.0, 1.0, 0.0}, {1.4, -2.0}) ==
          doctest::Approx(1.0));
    CHECK(disturbance_fidelity_coherent({1.0, kPi / 2, 1.0, 1.0}, {2, 1}) ==
          doctest::Approx(0.5));
}

TEST_CASE("universal information/disturbance pair") {
    const FidelityPair balanced = universal_id_fidelities(1.0, kPi / 2);
    CHECK(balanced.x == doctest::Approx(0.5));
    CHECK(balanced.y == doctest::Approx(0.5));
    const FidelityPair lossy = universal_id_fidelities(0.9, kPi / 2);
    CHECK(lossy.x == doctest::Approx(0.9 / 1.9).epsilon(1e-12));
    CHECK(lossy.y == doctest::Approx(0.9 / 1.9).epsilon(1e-12));
    const FidelityPair open = universal_id_fidelities(1.0, 1e-4);
    CHECK(open.x < 1e-7);
    CHECK(open.y > 1.0 - 1e-7);
}

TEST_CASE("universal trade-off relation") {
    CHECK(universal_id_tradeoff(1.0, 0.5) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(universal_id_tradeoff(1.0, 1e-9) == doctest::Approx(1.0).epsilon(1e-6));
    // Parametric consistency across the sweep.
    for (int i = 1; i <= 40; ++i) {
        const double phi = kPi / 2 * i / 40.0;
        const FidelityPair pair = universal_id_fidelities(0.8, phi);
        CHECK(universal_id_tradeoff(0.8, pair.x) == doctest::Approx(pair.y).epsilon(1e-12));
    }
    CHECK_THROWS_AS(universal_id_tradeoff(0.8, 0.6), OutOfRange);
    CHECK_THROWS_AS(universal_id_tradeoff(1.0, 0.0), OutOfRange);
}

TEST_CASE("averaged information/disturbance closed values") {
    const FidelityPair best = avg_id_fidelities(1.0, kPi / 2, 1.0, 0.5, 0.5);
    CHECK(best.x == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    CHECK(best.y == doctest::Approx(2.0 / 3.0).epsilon(1e-14));
    const FidelityPair idle = avg_id_fidelities(0.9, 0.0, 2.0, 0.0, 0.0);
    CHECK(idle.x == doctest::Approx(1.0 / 5.0));
    CHECK(idle.y == doctest::Approx(1.0));
    // Universality limit: averaged values approach the universal pair.
    const double phi = kPi / 3;
    const FidelityPair wide = avg_id_fidelities(0.9, phi, 1e4, 1.0 / std::sin(phi),
                                                (1.0 - std::cos(phi)) / std::sin(phi));
    const FidelityPair universal = universal_id_fidelities(0.9, phi);
    CHECK(wide.x == doctest::Approx(universal.x).epsilon(1e-6));
    CHECK(wide.y == doctest::Approx(universal.y).epsilon(1e-6));
}

TEST_CASE("estimation and distortion closed values") {
    CHECK(est_fidelity_coherent({1.0, kPi / 2, 1.0, 0}, {1.7, 0.4}) == doctest::Approx(1.0));
    CHECK(est_fidelity_coherent({1.0, kPi / 3, 0.0, 0}, {1, 0}) == doctest::Approx(0.0));
    CHECK(distortion_fidelity_coherent({1.0, kPi / 2, 1.0, 1.0}, {0.6, -1.2}) ==
          doctest::Approx(2.0 * std::numbers::sqrt2 / 3.0).epsilon(1e-12));
}

TEST_CASE("universal estimation/distortion pair") {
    const FidelityPair ideal = universal_ed_fidelities(1.0, kPi / 2);
    CHECK(ideal.x == doctest::Approx(1.0));
    CHECK(ideal.y == doctest::Approx(2.0 * std::numbers::sqrt2 / 3.0).epsilon(1e-12));
    const FidelityPair lossy = universal_ed_fidelities(0.9, kPi / 2);
    CHECK(lossy.x == doctest::Approx(2.0 * std::sqrt(0.9) / 1.9).epsilon(1e-12));
    const FidelityPair open = universal_ed_fidelities(1.0, 1e-5);
    CHECK(open.x < 1e-4);
    CHECK(open.y > 1.0 - 1e-8);
}

TEST_CASE("averaged estimation/distortion closed values") {
    CHECK(avg_ed_fidelities(1.0, kPi / 2, 1.0, 1.0, 0.0).x == doctest::Approx(1.0));
    CHECK(avg_ed_fidelities(0.8, 0.0, 3.0, 1.0, 0.0).y == doctest::Approx(1.0));
    // Distortion average at the optimal gain (root of 3g^3 + g - 2).
    CHECK(avg_ed_fidelities(1.0, kPi / 2, 1.0, 1.0, 0.7474152503958124).y ==
          doctest::Approx(0.9638578236405594).epsilon(1e-12));
}

TEST_CASE("oracle matches closed forms at spot points") {
    // Estimation of the vacuum with matched rescaling is perfect.
    CHECK(oracle_fidelity(FidelityKind::Estimation, CoherentState{{0, 0}},
                          {1.0, kPi / 2, 1.0, 0.0}) == doctest::Approx(1.0).epsilon(1e-8));
    // Generic interior point, all four kinds.
    SchemeParams p{0.9, kPi / 3, 0.7, 0.7};
    const Complex beta(1.0, 0.0);
    CHECK(oracle_fidelity(FidelityKind::Information, CoherentState{beta}, p) ==
          doctest::Approx(info_fidelity_coherent(p, beta)).epsilon(1e-8));
    CHECK(oracle_fidelity(FidelityKind::Disturbance, CoherentState{beta}, p) ==
          doctest::Approx(disturbance_fidelity_coherent(p, beta)).epsilon(1e-8));
    CHECK(oracle_fidelity(FidelityKind::Estimation, CoherentState{beta}, p) ==
          doctest::Approx(est_fidelity_coherent(p, beta)).epsilon(1e-8));
    CHECK(oracle_fidelity(FidelityKind::Distortion, CoherentState{beta}, p) ==
          doctest::Approx(distortion_fidelity_coherent(p, beta)).epsilon(1e-8));
}

TEST_CASE("oracle handles degenerate rescalings") {
    CHECK(oracle_fidelity(FidelityKind::Estimation, CoherentState{{1, 0}},
                          {1.0, kPi / 3, 0.0, 0.0}) == 0.0);
    CHECK_THROWS_AS(oracle_fidelity(FidelityKind::Information, FockState{1},
                                    {1.0, kPi / 3, 1.0, 0.0}),
                    std::invalid_argument);
    CHECK_THROWS_AS(oracle_fidelity(FidelityKind::Disturbance, CoherentState{{1, 0}},
                                    {1.0, kPi / 3, 1.0, 0.0}),
                    DistributionalP);
}

TEST_CASE("fock estimation/distortion reduces to the vacuum closed forms") {
    SchemeParams p{0.9, kPi / 3, 0.8, 0.4};
    const FidelityPair pair = fock_ed_fidelities(0, p);
    CHECK(pair.x == doctest::Approx(est_fidelity_coherent(p, {0, 0})).epsilon(1e-8));
    CHECK(pair.y == doctest::Approx(distortion_fidelity_coherent(p, {0, 0})).epsilon(1e-8));
    CHECK(pair.label == TradeoffKind::EstimationDistortion);
}

TEST_CASE("fock fidelities stay inside the unit interval") {
    for (int n : {1, 2, 5}) {
        for (double value : {0.4, 1.0, 1.6}) {
            SchemeParams p{1.0, kPi / 3, value, value};
            const FidelityPair pair = fock_ed_fidelities(n, p);
            CAPTURE(n); CAPTURE(value);
            CHECK(pair.x > 0.0);
            CHECK(pair.x <= 1.0 + 1e-9);
            CHECK(pair.y > 0.0);
            CHECK(pair.y <= 1.0 + 1e-9);
        }
    }
}

TEST_CASE("gaussian ensemble average reproduces the closed averages") {
    for (double omega : {0.5, 1.0, 5.0}) {
        SchemeParams p{0.9, kPi / 3, 0.7, 0.7};
        const FidelityPair id = avg_id_fidelities(0.9, kPi / 3, omega, 0.7, 0.7);
        const double gbar = gaussian_ensemble_average(
            [&](double r) { return info_fidelity_coherent(p, {r, 0}); }, omega);
        CHECK(gbar == doctest::Approx(id.x).epsilon(1e-8));
        const FidelityPair ed = avg_ed_fidelities(0.9, kPi / 3, omega, 0.7, 0.7);
        const double kbar = gaussian_ensemble_average(
            [&](double r) { return distortion_fidelity_coherent(p, {r, 0}); }, omega);
        CHECK(kbar == doctest::Approx(ed.y).epsilon(1e-8));
    }
}

TEST_CASE("thermal averages reduce to vacuum as N -> 0") {
    SchemeParams p{0.9, kPi / 3, 0.9, 0.5};
    const FidelityPair small = thermal_avg_ed(p, 1e-4, 0);
    CHECK(small.x == doctest::Approx(est_fidelity_coherent(p, {0, 0})).epsilon(1e-3));
    CHECK(small.y == doctest::Approx(distortion_fidelity_coherent(p, {0, 0})).epsilon(1e-3));
}

TEST_CASE("thermal averages reject insufficient truncations") {
    SchemeParams p{0.9, kPi / 3, 1.0, 0.5};
    CHECK_THROWS_AS(thermal_avg_ed(p, 2.0, 5), TruncationInsufficient);
    CHECK_THROWS_AS(thermal_avg_ed(p, 200.0, 0), TruncationInsufficient);
}

TEST_CASE("thermal average interleaves the pure-state values") {
    SchemeParams p{0.9, kPi / 3, 1.0, 0.5};
    const FidelityPair avg = thermal_avg_ed(p, 1.0, 0);
    const FidelityPair vac = fock_ed_fidelities(0, p);
    const FidelityPair one = fock_ed_fidelities(1, p);
    CHECK(avg.x < vac.x);
    CHECK(avg.x > 0.5 * one.x);
}

TEST_SUITE_END();
