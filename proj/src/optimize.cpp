#include "homodyne/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "homodyne/fidelities.hpp"

namespace homodyne {

namespace {

double newton_polish(double a3, double a1, double a0, double x) {
    for (int i = 0; i < 3; ++i) {
        const double value = (a3 * x * x + a1) * x + a0;
        const double slope = 3.0 * a3 * x * x + a1;
        if (slope == 0.0) break;
        const double step = value / slope;
        x -= step;
        if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
    }
    return x;
}

}  // namespace

double optimal_kappa_info(double eta, double phi, double omega) {
    const double t = eta * omega * omega * std::sin(phi);
    return t / (1.0 + t * std::sin(phi));
}

double optimal_g_disturbance(double eta, double phi, double omega) {
    const double t = eta * omega * omega * std::sin(phi);
    return t * (1.0 - std::cos(phi)) / (1.0 + t * std::sin(phi));
}

double optimal_kappa_estimation(double eta, double phi, double omega) {
    const double om2 = omega * omega;
    const double sin2 = std::sin(phi) * std::sin(phi);
    return std::sqrt(eta * (2.0 + om2) / (2.0 + eta * om2 * sin2));
}

std::vector<double> cubic_real_roots(double a3, double a1, double a0) {
    if (a3 == 0.0) throw std::invalid_argument("cubic_real_roots: leading coefficient is zero");
    // Depressed form x^3 + p x + q.
    const double p = a1 / a3;
    const double q = a0 / a3;
    std::vector<double> roots;
    const double half_q = 0.5 * q;
    const double discriminant = half_q * half_q + p * p * p / 27.0;
    if (discriminant >= 0.0) {
        const double root_d = std::sqrt(discriminant);
        const double u = std::cbrt(-half_q + root_d);
        const double v = std::cbrt(-half_q - root_d);
        roots.push_back(u + v);
    } else {
        // Three real roots; trigonometric form.
        const double m = 2.0 * std::sqrt(-p / 3.0);
        const double theta = std::acos(std::clamp(3.0 * q / (p * m), -1.0, 1.0)) / 3.0;
        for (int k = 0; k < 3; ++k) {
            roots.push_back(m * std::cos(theta - 2.0 * std::numbers::pi * k / 3.0));
        }
    }
    for (double& r : roots) r = newton_polish(a3, a1, a0, r);
    std::sort(roots.begin(), roots.end());
    return roots;
}

double optimal_g_distortion(double eta, double phi, double omega) {
    const double om2 = omega * omega;
    const double sin_phi = std::sin(phi);
    const double cos_phi = std::cos(phi);
    const double a3 = 2.0 + eta * om2 * sin_phi * sin_phi;
    const double a1 = eta * om2 * (2.0 * eta * sin_phi * sin_phi - (1.0 - cos_phi) * (1.0 - cos_phi));
    const double a0 = -eta * eta * om2 * (2.0 * sin_phi - std::sin(2.0 * phi));

    constexpr double kGainMax = 10.0;
    double best = -1.0;
    double best_value = -1.0;
    for (double root : cubic_real_roots(a3, a1, a0)) {
        if (root < -1e-12 || root > kGainMax) continue;
        root = std::max(root, 0.0);
        const double value = avg_ed_fidelities(eta, phi, omega, 1.0, root).y;
        if (value > best_value) {
            best = root;
            best_value = value;
        }
    }
    if (best < 0.0) {
        std::ostringstream msg;
        msg << "no real cubic root in [0, " << kGainMax << "] at eta = " << eta
            << ", phi = " << phi << ", Omega = " << omega;
        throw NoRealRootInRange(msg.str());
    }
    const double residual = std::abs((a3 * best * best + a1) * best + a0);
    const double scale = std::max({1.0, std::abs(a3) * best * best * best,
                                   std::abs(a1) * best, std::abs(a0)});
    if (residual > 1e-10 * scale) {
        std::ostringstream msg;
        msg << "cubic residual " << residual << " exceeds tolerance at eta = " << eta
            << ", phi = " << phi << ", Omega = " << omega;
        throw NoRealRootInRange(msg.str());
    }
    return best;
}

MaxResult maximize_1d(const std::function<double(double)>& f, Bracket b, double tol) {
    if (!(b.lo < b.hi) || !std::isfinite(b.lo) || !std::isfinite(b.hi)) {
        std::ostringstream msg;
        msg << "invalid bracket [" << b.lo << ", " << b.hi << "]";
        throw BracketInvalid(msg.str());
    }
    // Coarse scan locates the mode (and is the fallback for multimodal f).
    constexpr int kScanPoints = 32;
    double best_x = b.lo;
    double best_f = -std::numeric_limits<double>::infinity();
    int best_index = 0;
    const double step = (b.hi - b.lo) / (kScanPoints - 1);
    for (int i = 0; i < kScanPoints; ++i) {
        const double x = b.lo + step * i;
        const double value = f(x);
        if (value > best_f) {
            best_f = value;
            best_x = x;
            best_index = i;
        }
    }
    double lo = b.lo + step * std::max(0, best_index - 1);
    double hi = b.lo + step * std::min(kScanPoints - 1, best_index + 1);

    constexpr double kInvGolden = 0.6180339887498949;
    double c = hi - (hi - lo) * kInvGolden;
    double d = lo + (hi - lo) * kInvGolden;
    double fc = f(c);
    double fd = f(d);
    while (hi - lo > tol) {
        if (fc > fd) {
            hi = d;
            d = c;
            fd = fc;
            c = hi - (hi - lo) * kInvGolden;
            fc = f(c);
        } else {
            lo = c;
            c = d;
            fc = fd;
            d = lo + (hi - lo) * kInvGolden;
            fd = f(d);
        }
    }
    const double arg = 0.5 * (lo + hi);
    const double value = f(arg);
    if (best_f > value) return {best_x, best_f};  // scan point stays the champion
    return {arg, value};
}

}  // namespace homodyne
