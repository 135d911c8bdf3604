#include <cmath>
#include <numbers>
#include <random>

#include <doctest.h>

#include "homodyne/fidelities.hpp"
#include "homodyne/optimize.hpp"

using namespace homodyne;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("optimize");

TEST_CASE("closed-form optima at the balanced point") {
    CHECK(optimal_kappa_info(1.0, kPi / 2, 1.0) == doctest::Approx(0.5));
    CHECK(optimal_g_disturbance(1.0, kPi / 2, 1.0) == doctest::Approx(0.5));
    CHECK(optimal_kappa_estimation(1.0, kPi / 2, 1.0) == doctest::Approx(1.0));
    const FidelityPair pair = avg_id_fidelities(1.0, kPi / 2, 1.0, 0.5, 0.5);
    CHECK(pair.x == doctest::Approx(2.0 / 3.0));
    CHECK(pair.y == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("optima vanish with the splitter angle") {
    CHECK(optimal_kappa_info(0.9, 1e-9, 2.0) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(optimal_g_disturbance(0.9, 1e-9, 2.0) == doctest::Approx(0.0).epsilon(1e-6));
    CHECK(optimal_g_distortion(0.9, 1e-12, 2.0) == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("wide ensembles recover the universal parameters") {
    for (double phi : {kPi / 6, kPi / 3, kPi / 2}) {
        const double kappa_u = 1.0 / std::sin(phi);
        const double gain_u = (1.0 - std::cos(phi)) / std::sin(phi);
        CHECK(optimal_kappa_info(0.9, phi, 1e3) == doctest::Approx(kappa_u).epsilon(1e-5));
        CHECK(optimal_g_disturbance(0.9, phi, 1e3) == doctest::Approx(gain_u).epsilon(1e-5));
        CHECK(optimal_kappa_estimation(0.9, phi, 1e3) == doctest::Approx(kappa_u).epsilon(1e-5));
        CHECK(optimal_g_distortion(0.9, phi, 1e3) == doctest::Approx(gain_u).epsilon(1e-5));
    }
}

TEST_CASE("cubic solver finds the reference root") {
    // 3 g^3 + g - 2 = 0 at eta = 1, Omega = 1, phi = pi/2.
    const double root = optimal_g_distortion(1.0, kPi / 2, 1.0);
    CHECK(root == doctest::Approx(0.7474152504).epsilon(1e-8));
    CHECK(std::abs(3.0 * root * root * root + root - 2.0) < 1e-12);
    // The optimum beats its neighbourhood.
    const auto kbar = [](double g) { return avg_ed_fidelities(1.0, kPi / 2, 1.0, 1.0, g).y; };
    CHECK(kbar(root) > kbar(root + 1e-3));
    CHECK(kbar(root) > kbar(root - 1e-3));
}

TEST_CASE("cubic real roots against a factored polynomial") {
    // (x - 2)(x^2 + 2x + 7) = x^3 + 3x - 14: one real root.
    const auto one = cubic_real_roots(1.0, 3.0, -14.0);
    REQUIRE(one.size() == 1);
    CHECK(one[0] == doctest::Approx(2.0).epsilon(1e-13));
    // (x - 1)x(x + 1) = x^3 - x: three real roots.
    const auto three = cubic_real_roots(1.0, -1.0, 0.0);
    REQUIRE(three.size() == 3);
    CHECK(three[0] == doctest::Approx(-1.0));
    CHECK(three[1] == doctest::Approx(0.0));
    CHECK(three[2] == doctest::Approx(1.0));
    CHECK_THROWS_AS(cubic_real_roots(0.0, 1.0, 1.0), std::invalid_argument);
}

TEST_CASE("closed-form optima survive perturbation on a random grid") {
    std::mt19937 gen(777);
    std::uniform_real_distribution<double> etas(0.75, 1.0);
    std::uniform_real_distribution<double> phis(0.2, kPi / 2);
    std::uniform_real_distribution<double> omegas(0.3, 8.0);
    for (int i = 0; i < 60; ++i) {
        const double eta = etas(gen), phi = phis(gen), omega = omegas(gen);
        CAPTURE(eta); CAPTURE(phi); CAPTURE(omega);
        const double k1 = optimal_kappa_info(eta, phi, omega);
        const auto gbar = [&](double k) { return avg_id_fidelities(eta, phi, omega, k, 0).x; };
        CHECK(gbar(k1) > gbar(k1 + 1e-3));
        CHECK(gbar(k1) > gbar(k1 - 1e-3));
        const double g1 = optimal_g_disturbance(eta, phi, omega);
        const auto fbar = [&](double g) { return avg_id_fidelities(eta, phi, omega, 0, g).y; };
        CHECK(fbar(g1) > fbar(g1 + 1e-3));
        CHECK(fbar(g1) > fbar(g1 - 1e-3));
        const double k2 = optimal_kappa_estimation(eta, phi, omega);
        const auto hbar = [&](double k) { return avg_ed_fidelities(eta, phi, omega, k, 0).x; };
        CHECK(hbar(k2) > hbar(k2 + 1e-3));
        CHECK(hbar(k2) > hbar(k2 - 1e-3));
        const double g2 = optimal_g_distortion(eta, phi, omega);
        const auto kbar = [&](double g) { return avg_ed_fidelities(eta, phi, omega, 0, g).y; };
        CHECK(kbar(g2) > kbar(g2 + 1e-3));
        CHECK(kbar(g2) > kbar(g2 - 1e-3));
    }
}

TEST_CASE("golden-section maximiser on a parabola") {
    const auto f = [](double x) { return -(x - 2.0) * (x - 2.0); };
    const MaxResult result = maximize_1d(f, {0.0, 4.0}, 1e-10);
    CHECK(result.arg == doctest::Approx(2.0).epsilon(1e-8));
    CHECK(result.value == doctest::Approx(0.0));
}

TEST_CASE("maximiser matches the closed-form estimation optimum") {
    const auto hbar = [](double k) { return avg_ed_fidelities(1.0, kPi / 2, 1.0, k, 0).x; };
    const MaxResult result = maximize_1d(hbar, {0.0, 10.0}, 1e-8);
    CHECK(result.arg == doctest::Approx(1.0).epsilon(1e-6));
    CHECK(result.value == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("maximiser survives a multimodal objective via the scan fallback") {
    // Two local maxima; the global one sits where the bump lifts the sine.
    const auto f = [](double x) {
        return std::sin(x) + 0.3 * std::exp(-(x - 8.5) * (x - 8.5) * 4.0);
    };
    const MaxResult result = maximize_1d(f, {0.0, 10.0}, 1e-8);
    double best = -10.0;
    for (int i = 0; i <= 100000; ++i) best = std::max(best, f(10.0 * i / 100000.0));
    CHECK(result.arg == doctest::Approx(8.2901).epsilon(1e-3));
    CHECK(result.value == doctest::Approx(best).epsilon(1e-8));
}

TEST_CASE("maximiser handles boundary maxima") {
    const auto f = [](double x) { return -x; };
    const MaxResult result = maximize_1d(f, {0.0, 10.0}, 1e-9);
    CHECK(result.arg == doctest::Approx(0.0).epsilon(1e-7));
}

TEST_CASE("invalid brackets are rejected") {
    const auto f = [](double x) { return x; };
    CHECK_THROWS_AS(maximize_1d(f, {1.0, 1.0}, 1e-8), BracketInvalid);
    CHECK_THROWS_AS(maximize_1d(f, {2.0, -1.0}, 1e-8), BracketInvalid);
}

TEST_SUITE_END();
