#include <cmath>
#include <numbers>

#include <doctest.h>

#include "homodyne/quadrature.hpp"

using namespace homodyne;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("quadrature");

TEST_CASE("gauss-legendre integrates polynomials exactly") {
    // An n-point rule is exact to degree 2n-1.
    const auto f = [](double x) { return 5 * x * x * x * x - x * x + 3; };
    const double exact = 2.0 - 2.0 / 3.0 + 6.0;  // over [-1, 1]
    CHECK(gauss_legendre_integrate(f, -1.0, 1.0, 3) == doctest::Approx(exact).epsilon(1e-14));
    CHECK(gauss_legendre_integrate(f, -1.0, 1.0, 48) == doctest::Approx(exact).epsilon(1e-14));
}

TEST_CASE("radial rule integrates a gaussian to one") {
    const auto density = [](double r) { return std::exp(-r * r) / kPi; };
    CHECK(integrate_radial(density, 9.0) == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("plane rule handles off-centre gaussians") {
    const Complex mean(1.7, -0.6);
    const auto density = [&](Complex z) { return std::exp(-std::norm(z - mean)) / kPi; };
    CHECK(integrate_plane(density, mean, 8.0) == doctest::Approx(1.0).epsilon(1e-10));
    // Same integral from a shifted disc that still covers the mass.
    CHECK(integrate_plane(density, Complex(0.0, 0.0), 12.0) ==
          doctest::Approx(1.0).epsilon(1e-9));
}

TEST_CASE("first and second moments of a gaussian") {
    const double sigma2 = 0.37;
    const auto density = [&](Complex z) {
        return std::exp(-std::norm(z) / (2.0 * sigma2)) / (2.0 * kPi * sigma2);
    };
    const double var = integrate_plane(
        [&](Complex z) { return z.real() * z.real() * density(z); }, Complex(0, 0), 10.0);
    CHECK(var == doctest::Approx(sigma2).epsilon(1e-9));
}

TEST_CASE("non-convergent request throws") {
    QuadratureSpec spec;
    spec.tolerance = 1e-300;  // unreachable
    const auto rough = [](double r) { return std::cos(123.456 * r * r) / (1.0 + r); };
    CHECK_THROWS_AS(integrate_radial(rough, 20.0, spec), QuadratureFailure);
}

TEST_CASE("spec radius overrides the caller estimate") {
    const auto density = [](double r) { return std::exp(-r * r) / kPi; };
    QuadratureSpec spec;
    spec.radius = 0.5;  // deliberately truncating
    const double truncated = integrate_radial(density, 9.0, spec);
    CHECK(truncated < 0.5);
}

TEST_SUITE_END();
