#pragma once

#include <complex>
#include <functional>
#include <variant>

#include "homodyne/quadrature.hpp"

namespace homodyne {

/// Fock-space cap honoured by every routine that takes a photon number; deep
/// enough that thermal truncations up to N = 2 can be doubled for convergence
/// checks.
inline constexpr int kMaxFock = 128;

/// Width of the |s + 1| window inside which the Fock quasi-probability is
/// evaluated through its closed Husimi limit instead of the generic Laguerre
/// form (which is 0 * inf there).
inline constexpr double kHusimiWindow = 1e-9;

struct CoherentState {
    Complex amplitude;
};

struct FockState {
    int n = 0;
};

using InputState = std::variant<CoherentState, FockState>;

/// Laguerre polynomial L_n(x) by the stable three-term recurrence.
double laguerre(int n, double x);

/// s-ordered quasi-probability of a coherent state |beta> at xi:
///   2/(pi(1-s)) exp(-2|xi-beta|^2/(1-s)),  normalised to 1 over the plane.
/// Throws OrderingOutOfRange for s >= 1.
double wigner_s_coherent(Complex beta, double s, Complex xi);

/// s-ordered quasi-probability of the number state |n> at xi:
///   (-1)^n 2/(pi(1-s)) ((1+s)/(1-s))^n exp(-2|xi|^2/(1-s)) L_n(4|xi|^2/(1-s^2)).
/// Near s = -1 the closed Husimi form exp(-|xi|^2)|xi|^(2n)/(pi n!) is used.
/// Throws OrderingOutOfRange for s >= 1.
double wigner_s_fock(int n, double s, Complex xi);

/// Dispatch over the two supported state families.
double wigner_s(const InputState& state, double s, Complex xi);

/// Husimi Q-function of the state at z; equals wigner_s at s = -1.
double q_function(const InputState& state, Complex z);

using PlaneFn = std::function<double(Complex)>;

/// Transport between orderings (valid for r > s): the Gaussian convolution
///   W_s(zeta) = Integral d^2xi  2/(pi(r-s)) exp(-2|xi-zeta|^2/(r-s)) W_r(xi).
/// `w` evaluates W_r pointwise. Serves as the numerical ordering oracle.
double gaussian_smooth(const PlaneFn& w, double r, double s, Complex zeta,
                       const QuadratureSpec& spec = {});

}  // namespace homodyne
