#pragma once

#include <complex>
#include <functional>
#include <vector>

#include "homodyne/errors.hpp"

namespace homodyne {

using Complex = std::complex<double>;

enum class QuadMethod {
    PolarTensor,  // 2-D disc rule: Gauss-Legendre in radius x trapezoid in angle
    Radial,       // 1-D rule for radially symmetric integrands
};

/// Controls for every numerical integral in the library. The adaptive
/// schemes double the node count until two successive levels agree to
/// `tolerance` (relative to max(1, |I|)).
struct QuadratureSpec {
    QuadMethod method = QuadMethod::PolarTensor;
    double radius = 0.0;   // domain cutoff; <= 0 means "use the caller's estimate"
    int nodes = 32;        // radial node count at the first refinement level
    double tolerance = 1e-9;
};

struct GaussLegendreRule {
    std::vector<double> abscissas;  // on [-1, 1]
    std::vector<double> weights;
};

/// n-point Gauss-Legendre rule on [-1, 1]; rules are cached and the cache is
/// safe to hit from multiple threads.
const GaussLegendreRule& gauss_legendre(int n);

/// Integral of f over [a, b] with the n-point Gauss-Legendre rule.
double gauss_legendre_integrate(const std::function<double(double)>& f, double a, double b, int n);

/// Integral of f(z) d^2z over a disc, adaptive in the node count.
/// Throws QuadratureFailure if doubling the rule never reaches the tolerance.
double integrate_plane(const std::function<double(Complex)>& f, Complex center, double radius,
                       const QuadratureSpec& spec = {});

/// 2*pi * Integral of f(r) r dr over [0, radius] for radially symmetric
/// integrands f(|z|); adaptive as above.
double integrate_radial(const std::function<double(double)>& f, double radius,
                        const QuadratureSpec& spec = {});

}  // namespace homodyne
