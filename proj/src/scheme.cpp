#include "homodyne/scheme.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace homodyne {

namespace {

constexpr double kPi = std::numbers::pi;

double degenerate_guard(const SchemeParams& p) {
    const double scale = feedforward_scale(p);
    if (scale <= 1e-12) {  // phi = pi/2 with g = 0, up to roundoff in cos
        std::ostringstream msg;
        msg << "cos(phi) + g sin(phi) = " << scale << " at phi = " << p.phi << ", g = " << p.gain
            << ": output-plane rescaling is degenerate";
        throw DegenerateGeometry(msg.str());
    }
    return scale;
}

}  // namespace

void SchemeParams::check() const {
    std::ostringstream msg;
    if (!(eta > 0.0 && eta <= 1.0)) {
        msg << "eta = " << eta << " outside (0, 1]";
        throw std::invalid_argument(msg.str());
    }
    if (!(phi >= 0.0 && phi <= kPi / 2.0 + 1e-12)) {
        msg << "phi = " << phi << " outside [0, pi/2]";
        throw std::invalid_argument(msg.str());
    }
    if (!(kappa >= 0.0)) {
        msg << "kappa = " << kappa << " must be >= 0";
        throw std::invalid_argument(msg.str());
    }
    if (!(gain >= 0.0)) {
        msg << "gain = " << gain << " must be >= 0";
        throw std::invalid_argument(msg.str());
    }
}

double feedforward_scale(const SchemeParams& p) {
    return std::cos(p.phi) + p.gain * std::sin(p.phi);
}

OrderingTriple ordering_params(const SchemeParams& p) {
    p.check();
    const double scale = degenerate_guard(p);
    const double sin2 = std::sin(p.phi) * std::sin(p.phi);
    const double c2 = scale * scale;
    OrderingTriple t;
    t.s1 = sin2 > 0.0 ? 1.0 - 2.0 / (p.eta * sin2) : -std::numeric_limits<double>::infinity();
    t.s2 = 1.0 - 2.0 * p.gain * p.gain / (p.eta * c2);
    t.s3 = 1.0 - 2.0 * (p.eta + p.gain * p.gain) / (p.eta * c2);
    return t;
}

double outcome_density(const InputState& state, const SchemeParams& p, Complex z) {
    p.check();
    const double sin_phi = std::sin(p.phi);
    if (sin_phi == 0.0) {
        // Fully transmitting splitter: the detectors see reflected vacuum.
        return p.eta / kPi * std::exp(-p.eta * std::norm(z));
    }
    const double s1 = 1.0 - 2.0 / (p.eta * sin_phi * sin_phi);
    return wigner_s(state, s1, z / sin_phi) / (sin_phi * sin_phi);
}

double output_p_density(const InputState& state, const SchemeParams& p, Complex xi) {
    p.check();
    if (p.gain == 0.0) {
        throw DistributionalP(
            "output P-function is distributional at g = 0 (s2 = 1); evaluate output_q instead");
    }
    const double scale = degenerate_guard(p);
    const double s2 = 1.0 - 2.0 * p.gain * p.gain / (p.eta * scale * scale);
    return wigner_s(state, s2, xi / scale) / (scale * scale);
}

double output_q(const InputState& state, const SchemeParams& p, Complex z) {
    p.check();
    const double scale = feedforward_scale(p);
    if (scale <= 1e-12) {
        // Fully reflecting splitter without feed-forward: the output is the
        // vacuum it started from.
        return std::exp(-std::norm(z)) / kPi;
    }
    const double s3 = 1.0 - 2.0 * (p.eta + p.gain * p.gain) / (p.eta * scale * scale);
    if (s3 >= 1.0) {
        std::ostringstream msg;
        msg << "output Q ordering s3 = " << s3 << " is not below 1";
        throw OrderingOutOfRange(msg.str());
    }
    return wigner_s(state, s3, z / scale) / (scale * scale);
}

}  // namespace homodyne
