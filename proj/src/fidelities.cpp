#include "homodyne/fidelities.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

namespace homodyne {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kThermalTailBudget = 1e-8;

struct Region {
    Complex center;
    double radius;
};

// Disc covering two Gaussian features of the given per-axis widths.
Region covering_region(Complex c1, double sigma1, Complex c2, double sigma2) {
    const Complex mid = 0.5 * (c1 + c2);
    const double spread = 0.5 * std::abs(c1 - c2);
    const double radius = spread + 12.0 * std::max(sigma1, sigma2) + 2.0;
    return {mid, std::max(6.0, radius)};
}

int fock_number(const InputState& state) {
    return std::get<FockState>(state).n;
}

bool is_coherent(const InputState& state) {
    return std::holds_alternative<CoherentState>(state);
}

// Per-axis standard deviation of the outcome distribution T.
double outcome_sigma(const InputState& state, const SchemeParams& p) {
    const double sin2 = std::sin(p.phi) * std::sin(p.phi);
    double var = 1.0 / (2.0 * p.eta);
    if (!is_coherent(state)) var += 0.5 * fock_number(state) * sin2;
    return std::sqrt(var);
}

// Per-axis standard deviation of the output Q-function.
double output_q_sigma(const InputState& state, const SchemeParams& p) {
    const double c = feedforward_scale(p);
    double var = (p.eta + p.gain * p.gain) / (2.0 * p.eta);
    if (!is_coherent(state)) var += 0.5 * fock_number(state) * c * c;
    return std::sqrt(var);
}

double oracle_information(const InputState& state, const SchemeParams& p,
                          const QuadratureSpec& spec) {
    const Complex beta = std::get<CoherentState>(state).amplitude;
    const Complex t_mean = beta * std::sin(p.phi);
    const double t_sigma = outcome_sigma(state, p);
    const auto integrand = [&](Complex z) {
        return outcome_density(state, p, z) * std::exp(-std::norm(p.kappa * z - beta));
    };
    Region region = p.kappa > 0.0
                        ? covering_region(t_mean, t_sigma, beta / p.kappa, 1.0 / (p.kappa * std::numbers::sqrt2))
                        : covering_region(t_mean, t_sigma, t_mean, t_sigma);
    return integrate_plane(integrand, region.center, region.radius, spec);
}

double oracle_disturbance(const InputState& state, const SchemeParams& p,
                          const QuadratureSpec& spec) {
    const Complex beta = std::get<CoherentState>(state).amplitude;
    const double c = feedforward_scale(p);
    const double p_sigma = p.gain / std::sqrt(2.0 * p.eta);
    const auto integrand = [&](Complex xi) {
        return output_p_density(state, p, xi) * std::exp(-std::norm(xi - beta));
    };
    const Region region = covering_region(beta * c, p_sigma, beta, 1.0 / std::numbers::sqrt2);
    return integrate_plane(integrand, region.center, region.radius, spec);
}

double oracle_estimation(const InputState& state, const SchemeParams& p,
                         const QuadratureSpec& spec) {
    if (p.kappa == 0.0) return 0.0;  // the estimate collapses onto the origin
    const double k = p.kappa;
    const auto sqrt_overlap = [&](Complex z) {
        const double s_density = outcome_density(state, p, z / k) / (k * k);
        return std::sqrt(std::max(0.0, q_function(state, z) * s_density));
    };
    if (is_coherent(state)) {
        const Complex beta = std::get<CoherentState>(state).amplitude;
        const Region region = covering_region(beta, 1.0 / std::numbers::sqrt2,
                                              k * beta * std::sin(p.phi),
                                              k * outcome_sigma(state, p));
        return integrate_plane(sqrt_overlap, region.center, region.radius, spec);
    }
    const int n = fock_number(state);
    const double radius = std::max(
        10.0, (std::sqrt(2.0 * n + 1.0) + 6.0) * std::max(1.0, k) * std::max(1.0, 1.0 / std::sqrt(p.eta)));
    return integrate_radial([&](double r) { return sqrt_overlap(Complex(r, 0.0)); }, radius, spec);
}

double oracle_distortion(const InputState& state, const SchemeParams& p,
                         const QuadratureSpec& spec) {
    const auto sqrt_overlap = [&](Complex z) {
        return std::sqrt(std::max(0.0, q_function(state, z) * output_q(state, p, z)));
    };
    if (is_coherent(state)) {
        const Complex beta = std::get<CoherentState>(state).amplitude;
        const double c = feedforward_scale(p);
        const Region region =
            covering_region(beta, 1.0 / std::numbers::sqrt2, beta * c, output_q_sigma(state, p));
        return integrate_plane(sqrt_overlap, region.center, region.radius, spec);
    }
    const int n = fock_number(state);
    const double c = feedforward_scale(p);
    const double radius =
        std::max(10.0, (std::sqrt(2.0 * n + 1.0) + 6.0) * std::max(1.0, c) *
                           std::max(1.0, output_q_sigma(state, p)));
    return integrate_radial([&](double r) { return sqrt_overlap(Complex(r, 0.0)); }, radius, spec);
}

}  // namespace

double thermal_weight(double mean_photons, int n) {
    if (!(mean_photons > 0.0) || n < 0) {
        throw std::invalid_argument("thermal_weight: requires N > 0 and n >= 0");
    }
    // N^n / (1+N)^(n+1), in log space for large n.
    const double log_ratio = std::log(mean_photons) - std::log1p(mean_photons);
    return std::exp(n * log_ratio - std::log1p(mean_photons));
}

int auto_thermal_truncation(double mean_photons) {
    if (!(mean_photons > 0.0)) {
        throw std::invalid_argument("auto_thermal_truncation: requires N > 0");
    }
    const double log_ratio = std::log(mean_photons) - std::log1p(mean_photons);
    return static_cast<int>(std::ceil(std::log(kThermalTailBudget) / log_ratio));
}

double info_fidelity_coherent(const SchemeParams& p, Complex beta) {
    p.check();
    const double denom = p.eta + p.kappa * p.kappa;
    const double mismatch = 1.0 - p.kappa * std::sin(p.phi);
    return p.eta / denom * std::exp(-p.eta * mismatch * mismatch * std::norm(beta) / denom);
}

double disturbance_fidelity_coherent(const SchemeParams& p, Complex beta) {
    p.check();
    const double denom = p.eta + p.gain * p.gain;
    const double mismatch = 1.0 - std::cos(p.phi) - p.gain * std::sin(p.phi);
    return p.eta / denom * std::exp(-p.eta * mismatch * mismatch * std::norm(beta) / denom);
}

double est_fidelity_coherent(const SchemeParams& p, Complex beta) {
    p.check();
    const double denom = p.eta + p.kappa * p.kappa;
    const double mismatch = 1.0 - p.kappa * std::sin(p.phi);
    return 2.0 * p.kappa * std::sqrt(p.eta) / denom *
           std::exp(-p.eta * mismatch * mismatch * std::norm(beta) / (2.0 * denom));
}

double distortion_fidelity_coherent(const SchemeParams& p, Complex beta) {
    p.check();
    const double g2 = p.gain * p.gain;
    const double mismatch = 1.0 - std::cos(p.phi) - p.gain * std::sin(p.phi);
    return 2.0 * std::sqrt(p.eta * (p.eta + g2)) / (2.0 * p.eta + g2) *
           std::exp(-p.eta * mismatch * mismatch * std::norm(beta) / (2.0 * (2.0 * p.eta + g2)));
}

FidelityPair universal_id_fidelities(double eta, double phi) {
    const double es2 = eta * std::sin(phi) * std::sin(phi);
    const double omc = 1.0 - std::cos(phi);
    return {es2 / (1.0 + es2), es2 / (es2 + omc * omc), TradeoffKind::InfoDisturbance};
}

double universal_id_tradeoff(double eta, double info) {
    const double reachable = eta / (1.0 + eta);
    if (!(info > 0.0) || info > reachable * (1.0 + 1e-12)) {
        std::ostringstream msg;
        msg << "information fidelity " << info << " outside the reachable range (0, " << reachable
            << "] at eta = " << eta;
        throw OutOfRange(msg.str());
    }
    double inner = 1.0 - info / (eta * (1.0 - info));
    inner = std::max(0.0, inner);  // roundoff at the endpoint G = eta/(1+eta)
    const double bracket = 1.0 - std::sqrt(inner);
    return info / (info + (1.0 - info) * bracket * bracket);
}

FidelityPair universal_ed_fidelities(double eta, double phi) {
    const double sin_phi = std::sin(phi);
    const double es2 = eta * sin_phi * sin_phi;
    const double omc2 = (1.0 - std::cos(phi)) * (1.0 - std::cos(phi));
    const double h = 2.0 * std::sqrt(eta) * sin_phi / (1.0 + es2);
    const double k = 2.0 * sin_phi * std::sqrt(eta * (es2 + omc2)) / (2.0 * es2 + omc2);
    return {h, k, TradeoffKind::EstimationDistortion};
}

FidelityPair avg_id_fidelities(double eta, double phi, double omega, double kappa, double gain) {
    const double om2 = omega * omega;
    const double g_mismatch = 1.0 - kappa * std::sin(phi);
    const double f_mismatch = 1.0 - std::cos(phi) - gain * std::sin(phi);
    const double g = eta / (eta + kappa * kappa + eta * om2 * g_mismatch * g_mismatch);
    const double f = eta / (eta + gain * gain + eta * om2 * f_mismatch * f_mismatch);
    return {g, f, TradeoffKind::InfoDisturbance};
}

FidelityPair avg_ed_fidelities(double eta, double phi, double omega, double kappa, double gain) {
    const double om2 = omega * omega;
    const double h_mismatch = 1.0 - kappa * std::sin(phi);
    const double k_mismatch = 1.0 - std::cos(phi) - gain * std::sin(phi);
    const double g2 = gain * gain;
    const double h = 4.0 * kappa * std::sqrt(eta) /
                     (2.0 * (eta + kappa * kappa) + eta * om2 * h_mismatch * h_mismatch);
    const double k = 4.0 * std::sqrt(eta * (eta + g2)) /
                     (2.0 * (2.0 * eta + g2) + eta * om2 * k_mismatch * k_mismatch);
    return {h, k, TradeoffKind::EstimationDistortion};
}

double gaussian_ensemble_average(const std::function<double(double)>& fidelity_of_amplitude,
                                 double omega, const QuadratureSpec& spec) {
    if (!(omega > 0.0)) throw std::invalid_argument("gaussian_ensemble_average: requires Omega > 0");
    const double om2 = omega * omega;
    const auto integrand = [&](double r) {
        return std::exp(-r * r / om2) / (kPi * om2) * fidelity_of_amplitude(r);
    };
    return integrate_radial(integrand, 9.0 * omega, spec);
}

double oracle_fidelity(FidelityKind kind, const InputState& state, const SchemeParams& p,
                       const QuadratureSpec& spec) {
    p.check();
    switch (kind) {
        case FidelityKind::Information:
            if (!is_coherent(state)) {
                throw std::invalid_argument("information oracle supports coherent inputs only");
            }
            return oracle_information(state, p, spec);
        case FidelityKind::Disturbance:
            if (!is_coherent(state)) {
                throw std::invalid_argument("disturbance oracle supports coherent inputs only");
            }
            return oracle_disturbance(state, p, spec);
        case FidelityKind::Estimation:
            return oracle_estimation(state, p, spec);
        case FidelityKind::Distortion:
            return oracle_distortion(state, p, spec);
    }
    throw std::logic_error("unreachable fidelity kind");
}

FidelityPair fock_ed_fidelities(int n, const SchemeParams& p, const QuadratureSpec& spec) {
    const InputState state = FockState{n};
    return {oracle_fidelity(FidelityKind::Estimation, state, p, spec),
            oracle_fidelity(FidelityKind::Distortion, state, p, spec),
            TradeoffKind::EstimationDistortion};
}

FidelityPair thermal_avg_ed(const SchemeParams& p, double mean_photons, int n_trunc,
                            const QuadratureSpec& spec) {
    if (!(mean_photons > 0.0)) throw std::invalid_argument("thermal_avg_ed: requires N > 0");
    if (n_trunc <= 0) n_trunc = auto_thermal_truncation(mean_photons);
    const double log_ratio = std::log(mean_photons) - std::log1p(mean_photons);
    const double tail = std::exp((n_trunc + 1) * log_ratio);
    if (n_trunc > kMaxFock || tail >= kThermalTailBudget) {
        std::ostringstream msg;
        msg << "thermal truncation n_trunc = " << n_trunc << " leaves tail mass " << tail
            << " (budget " << kThermalTailBudget << ", Fock cap " << kMaxFock << ")";
        throw TruncationInsufficient(msg.str());
    }
    double h = 0.0, k = 0.0;
    for (int n = 0; n <= n_trunc; ++n) {
        const double weight = thermal_weight(mean_photons, n);
        const FidelityPair pair = fock_ed_fidelities(n, p, spec);
        h += weight * pair.x;
        k += weight * pair.y;
    }
    return {h, k, TradeoffKind::EstimationDistortion};
}

}  // namespace homodyne
