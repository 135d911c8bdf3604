#pragma once

#include <functional>
#include <vector>

#include "homodyne/errors.hpp"

namespace homodyne {

struct Bracket {
    double lo = 0.0;
    double hi = 10.0;
};

struct MaxResult {
    double arg = 0.0;
    double value = 0.0;
};

/// kappa maximising the Gaussian-averaged information fidelity:
///   eta Omega^2 sin(phi) / (1 + eta Omega^2 sin^2(phi)).
double optimal_kappa_info(double eta, double phi, double omega);

/// g maximising the Gaussian-averaged disturbance fidelity:
///   eta Omega^2 sin(phi)(1 - cos(phi)) / (1 + eta Omega^2 sin^2(phi)).
double optimal_g_disturbance(double eta, double phi, double omega);

/// kappa maximising the Gaussian-averaged estimation fidelity:
///   sqrt(eta (2 + Omega^2) / (2 + eta Omega^2 sin^2(phi))).
double optimal_kappa_estimation(double eta, double phi, double omega);

/// g maximising the Gaussian-averaged distortion fidelity: the real root of
///   g^3 (2 + eta Om^2 sin^2 phi) + g eta Om^2 [2 eta sin^2 phi - (1-cos phi)^2]
///     = eta^2 Om^2 (2 sin phi - sin 2phi)
/// selected among real roots in [0, 10] by the value of Kbar, Newton-polished
/// to residual below 1e-10. Throws NoRealRootInRange when no admissible root
/// exists.
double optimal_g_distortion(double eta, double phi, double omega);

/// Real roots of a3 x^3 + a1 x + a0 = 0 (a3 != 0), ascending.
std::vector<double> cubic_real_roots(double a3, double a1, double a0);

/// Maximiser of f on the bracket: coarse 32-point scan to locate the mode,
/// then golden-section refinement to |arg - argmax| < tol. The scan also
/// serves as the fallback when f is not unimodal. Throws BracketInvalid.
MaxResult maximize_1d(const std::function<double(double)>& f, Bracket b, double tol = 1e-8);

}  // namespace homodyne
