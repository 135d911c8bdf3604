#include "homodyne/phase_space.hpp"

#include <cmath>
#include <numbers>
#include <sstream>
#include <utility>

namespace homodyne {

namespace {

constexpr double kPi = std::numbers::pi;

void require_ordering_below_one(double s, const char* who) {
    if (!(s < 1.0)) {
        std::ostringstream msg;
        msg << who << ": ordering parameter s = " << s << " must be < 1";
        throw OrderingOutOfRange(msg.str());
    }
}

void require_fock_range(int n, const char* who) {
    if (n < 0 || n > kMaxFock) {
        std::ostringstream msg;
        msg << who << ": photon number " << n << " outside [0, " << kMaxFock << "]";
        throw std::invalid_argument(msg.str());
    }
}

// exp(-r^2) r^(2n) / (pi n!), evaluated in log space so large n and r do not
// overflow intermediate powers.
double husimi_fock(int n, double r2) {
    if (n == 0) return std::exp(-r2) / kPi;
    if (r2 == 0.0) return 0.0;
    return std::exp(-r2 + n * std::log(r2) - std::lgamma(n + 1.0)) / kPi;
}

// L_n(x) = mantissa * 2^exponent. The recurrence is renormalised by exact
// powers of two, so no precision is lost and huge arguments cannot overflow.
std::pair<double, long> laguerre_scaled(int n, double x) {
    double prev = 1.0;
    double curr = 1.0 - x;
    long exponent = 0;
    for (int k = 1; k < n; ++k) {
        const double next = ((2 * k + 1 - x) * curr - k * prev) / (k + 1);
        prev = curr;
        curr = next;
        const double mag = std::max(std::abs(prev), std::abs(curr));
        if (mag > 0x1p512) {
            prev = std::ldexp(prev, -512);
            curr = std::ldexp(curr, -512);
            exponent += 512;
        }
    }
    return {curr, exponent};
}

}  // namespace

double laguerre(int n, double x) {
    require_fock_range(n, "laguerre");
    if (n == 0) return 1.0;
    const auto [mantissa, exponent] = laguerre_scaled(n, x);
    return std::ldexp(mantissa, static_cast<int>(exponent));
}

double wigner_s_coherent(Complex beta, double s, Complex xi) {
    require_ordering_below_one(s, "wigner_s_coherent");
    const double d2 = std::norm(xi - beta);
    return 2.0 / (kPi * (1.0 - s)) * std::exp(-2.0 * d2 / (1.0 - s));
}

double wigner_s_fock(int n, double s, Complex xi) {
    require_ordering_below_one(s, "wigner_s_fock");
    require_fock_range(n, "wigner_s_fock");
    const double r2 = std::norm(xi);
    if (std::abs(s + 1.0) <= kHusimiWindow) return husimi_fock(n, r2);
    const double one_minus = 1.0 - s;
    const double prefactor = 2.0 / (kPi * one_minus);
    if (n == 0) return prefactor * std::exp(-2.0 * r2 / one_minus);

    const double ratio = (1.0 + s) / one_minus;
    const auto [mantissa, exponent] = laguerre_scaled(n, 4.0 * r2 / (one_minus * (1.0 + s)));
    // (-ratio)^n carries the (-1)^n together with the ratio's sign.
    const double sign = ((-ratio < 0.0 && n % 2 == 1) ? -1.0 : 1.0) *
                        (mantissa < 0.0 ? -1.0 : 1.0);
    const double log2_magnitude = n * std::log2(std::abs(ratio)) + exponent -
                                  2.0 * r2 / one_minus * std::numbers::log2e;
    return sign * prefactor * std::abs(mantissa) * std::exp2(log2_magnitude);
}

double wigner_s(const InputState& state, double s, Complex xi) {
    return std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, CoherentState>) {
                return wigner_s_coherent(st.amplitude, s, xi);
            } else {
                return wigner_s_fock(st.n, s, xi);
            }
        },
        state);
}

double q_function(const InputState& state, Complex z) {
    return std::visit(
        [&](const auto& st) {
            using T = std::decay_t<decltype(st)>;
            if constexpr (std::is_same_v<T, CoherentState>) {
                return std::exp(-std::norm(z - st.amplitude)) / kPi;
            } else {
                return husimi_fock(st.n, std::norm(z));
            }
        },
        state);
}

double gaussian_smooth(const PlaneFn& w, double r, double s, Complex zeta,
                       const QuadratureSpec& spec) {
    if (!(r > s)) {
        std::ostringstream msg;
        msg << "gaussian_smooth: requires r > s, got r = " << r << ", s = " << s;
        throw std::invalid_argument(msg.str());
    }
    const double width = r - s;
    const double norm = 2.0 / (kPi * width);
    const auto integrand = [&](Complex xi) {
        return norm * std::exp(-2.0 * std::norm(xi - zeta) / width) * w(xi);
    };
    const double radius =
        spec.radius > 0.0 ? spec.radius
                          : std::max(6.0, std::abs(zeta) + 6.0 * std::max(1.0, std::sqrt(width)));
    return integrate_plane(integrand, Complex(0.0, 0.0), radius, spec);
}

}  // namespace homodyne
