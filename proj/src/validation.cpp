#include "homodyne/validation.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <sstream>

#include "homodyne/montecarlo.hpp"

namespace homodyne {

namespace {

constexpr double kPi = std::numbers::pi;

const std::vector<double> kEtaGrid{0.8, 0.9, 1.0};
const std::vector<double> kPhiGrid{kPi / 6, kPi / 4, kPi / 3, kPi / 2};
const std::vector<double> kGainGrid{0.3, 0.7, 1.0, 1.5};
const std::vector<Complex> kAmplitudeGrid{{0.0, 0.0}, {1.0, 0.0}, {2.0, 1.0}};

std::string format_dev(double dev) {
    std::ostringstream out;
    out.precision(3);
    out << std::scientific << dev;
    return out.str();
}

CheckResult finish_check(std::string name, bool passed, double worst, std::string detail) {
    return {std::move(name), passed, worst, std::move(detail)};
}

double universal_kappa(double phi) { return 1.0 / std::sin(phi); }
double universal_gain(double phi) { return (1.0 - std::cos(phi)) / std::sin(phi); }

// Printed-form variants retained only to measure how far they fall from the
// oracle; the library implements the corrected expressions.
double distortion_printed_sign(const SchemeParams& p, Complex beta) {
    const double g2 = p.gain * p.gain;
    const double mismatch = 1.0 - std::cos(p.phi) - p.gain * std::sin(p.phi);
    return 2.0 * std::sqrt(p.eta * (p.eta + g2)) / (2.0 * p.eta + g2) *
           std::exp(+p.eta * mismatch * mismatch * std::norm(beta) / (2.0 * (2.0 * p.eta + g2)));
}

double avg_est_printed_sign(double eta, double phi, double omega, double kappa) {
    const double mismatch = 1.0 + kappa * std::sin(phi);
    return 4.0 * kappa * std::sqrt(eta) /
           (2.0 * (eta + kappa * kappa) + eta * omega * omega * mismatch * mismatch);
}

double fgnu_braces(double eta, double omega, double info) {
    const double om2 = omega * omega;
    double inner = 1.0 - ((1.0 + om2) * info - 1.0) / (eta * om2 * (1.0 - info));
    inner = std::max(0.0, inner);
    const double bracket = 1.0 - std::sqrt(inner);
    return info + (1.0 - info) * bracket * bracket;
}

// Linear interpolation along a monotone curve.
double interp_linear(const std::vector<std::pair<double, double>>& samples, double at) {
    for (std::size_t i = 1; i < samples.size(); ++i) {
        const double a0 = samples[i - 1].first;
        const double a1 = samples[i].first;
        if ((at <= a0 && at >= a1) || (at >= a0 && at <= a1)) {
            const double t = a0 == a1 ? 0.0 : (at - a0) / (a1 - a0);
            return samples[i - 1].second + t * (samples[i].second - samples[i - 1].second);
        }
    }
    throw std::invalid_argument("interpolation point outside the curve range");
}

double interp_x_at_y(const std::vector<TradeoffPoint>& curve, double y) {
    std::vector<std::pair<double, double>> samples;
    samples.reserve(curve.size());
    for (const auto& pt : curve) samples.emplace_back(pt.y_fid, pt.x_fid);
    return interp_linear(samples, y);
}

double interp_y_at_x(const std::vector<TradeoffPoint>& curve, double x) {
    std::vector<std::pair<double, double>> samples;
    samples.reserve(curve.size());
    for (const auto& pt : curve) samples.emplace_back(pt.x_fid, pt.y_fid);
    return interp_linear(samples, x);
}

}  // namespace

bool ValidationReport::all_passed() const {
    return std::all_of(checks.begin(), checks.end(),
                       [](const CheckResult& c) { return c.passed; });
}

CheckResult check_closed_form_vs_oracle(const ValidationTolerances& tol) {
    double worst = 0.0;
    int points = 0;
    bool in_range = true;
    for (double eta : kEtaGrid) {
        for (double phi : kPhiGrid) {
            for (double value : kGainGrid) {
                for (Complex beta : kAmplitudeGrid) {
                    const InputState state = CoherentState{beta};
                    SchemeParams p{eta, phi, value, value};
                    const double closed[4] = {info_fidelity_coherent(p, beta),
                                              disturbance_fidelity_coherent(p, beta),
                                              est_fidelity_coherent(p, beta),
                                              distortion_fidelity_coherent(p, beta)};
                    const double oracle[4] = {
                        oracle_fidelity(FidelityKind::Information, state, p),
                        oracle_fidelity(FidelityKind::Disturbance, state, p),
                        oracle_fidelity(FidelityKind::Estimation, state, p),
                        oracle_fidelity(FidelityKind::Distortion, state, p)};
                    for (int i = 0; i < 4; ++i) {
                        worst = std::max(worst, std::abs(closed[i] - oracle[i]));
                        in_range = in_range && closed[i] >= 0.0 && closed[i] <= 1.0 + 1e-12;
                    }
                    points += 4;
                }
            }
        }
    }
    std::ostringstream detail;
    detail << points << " closed-form/oracle comparisons, worst " << format_dev(worst)
           << (in_range ? "; all values in [0, 1]" : "; RANGE VIOLATION");
    return finish_check("closed_form_vs_oracle", worst <= tol.oracle && in_range, worst,
                        detail.str());
}

CheckResult check_average_vs_oracle(const ValidationTolerances& tol) {
    double worst = 0.0;
    int points = 0;
    for (double eta : {0.8, 1.0}) {
        for (double phi : {kPi / 6, kPi / 3, kPi / 2}) {
            for (double value : {0.3, 1.0}) {
                for (double omega : {0.5, 1.0, 5.0}) {
                    const FidelityPair id = avg_id_fidelities(eta, phi, omega, value, value);
                    const FidelityPair ed = avg_ed_fidelities(eta, phi, omega, value, value);
                    SchemeParams p{eta, phi, value, value};
                    const auto avg = [&](auto&& per_state) {
                        return gaussian_ensemble_average(
                            [&](double r) { return per_state(p, Complex(r, 0.0)); }, omega);
                    };
                    worst = std::max(worst, std::abs(id.x - avg(info_fidelity_coherent)));
                    worst = std::max(worst, std::abs(id.y - avg(disturbance_fidelity_coherent)));
                    worst = std::max(worst, std::abs(ed.x - avg(est_fidelity_coherent)));
                    worst = std::max(worst, std::abs(ed.y - avg(distortion_fidelity_coherent)));
                    points += 4;
                }
            }
        }
    }
    // Fully nested spots: Gaussian average of the defining-integral oracles.
    {
        const double eta = 0.9, phi = kPi / 3, omega = 1.0, value = 0.7;
        SchemeParams p{eta, phi, value, value};
        QuadratureSpec outer;
        outer.tolerance = 1e-7;
        const auto nested = [&](FidelityKind kind) {
            return gaussian_ensemble_average(
                [&](double r) {
                    return oracle_fidelity(kind, CoherentState{Complex(r, 0.0)}, p);
                },
                omega, outer);
        };
        const FidelityPair id = avg_id_fidelities(eta, phi, omega, value, value);
        const FidelityPair ed = avg_ed_fidelities(eta, phi, omega, value, value);
        worst = std::max(worst, std::abs(id.x - nested(FidelityKind::Information)));
        worst = std::max(worst, std::abs(id.y - nested(FidelityKind::Disturbance)));
        worst = std::max(worst, std::abs(ed.x - nested(FidelityKind::Estimation)));
        worst = std::max(worst, std::abs(ed.y - nested(FidelityKind::Distortion)));
        points += 4;
    }
    std::ostringstream detail;
    detail << points << " ensemble-average comparisons, worst " << format_dev(worst);
    return finish_check("average_vs_oracle", worst <= tol.oracle, worst, detail.str());
}

CheckResult check_sign_adjudication(const ValidationTolerances& tol) {
    double worst_corrected = 0.0;
    double least_printed = std::numeric_limits<double>::infinity();
    // Distortion exponent sign, adjudicated per state by the defining integral.
    for (double eta : {0.8, 1.0}) {
        for (double phi : {kPi / 6, kPi / 3}) {
            for (double gain : {1.0, 1.5}) {
                for (Complex beta : {Complex(1.0, 0.0), Complex(2.0, 1.0)}) {
                    SchemeParams p{eta, phi, 1.0, gain};
                    const double reference =
                        oracle_fidelity(FidelityKind::Distortion, CoherentState{beta}, p);
                    worst_corrected = std::max(
                        worst_corrected, std::abs(distortion_fidelity_coherent(p, beta) - reference));
                    least_printed = std::min(
                        least_printed, std::abs(distortion_printed_sign(p, beta) - reference));
                }
            }
        }
    }
    // Averaged-estimation mismatch term, adjudicated by the Gaussian average.
    for (double eta : {0.8, 1.0}) {
        for (double phi : {kPi / 3, kPi / 2}) {
            for (double kappa : {0.7, 1.2}) {
                const double omega = 1.0;
                SchemeParams p{eta, phi, kappa, 0.0};
                const double reference = gaussian_ensemble_average(
                    [&](double r) { return est_fidelity_coherent(p, Complex(r, 0.0)); }, omega);
                worst_corrected = std::max(
                    worst_corrected,
                    std::abs(avg_ed_fidelities(eta, phi, omega, kappa, 0.0).x - reference));
                least_printed = std::min(
                    least_printed, std::abs(avg_est_printed_sign(eta, phi, omega, kappa) - reference));
            }
        }
    }
    const bool passed = worst_corrected <= tol.oracle && least_printed >= 1e-3;
    std::ostringstream detail;
    detail << "corrected forms within " << format_dev(worst_corrected)
           << " of the oracle; uncorrected (positive distortion exponent, (1+k sin)^2 "
              "average term) deviate by at least "
           << format_dev(least_printed);
    return finish_check("sign_adjudication", passed, worst_corrected, detail.str());
}

CheckResult check_universal_tradeoff_identity(const ValidationTolerances& tol) {
    double worst = 0.0;
    for (double eta : kEtaGrid) {
        for (int i = 1; i <= 100; ++i) {
            const double phi = kPi / 2 * i / 100.0;
            const FidelityPair pair = universal_id_fidelities(eta, phi);
            worst = std::max(worst, std::abs(universal_id_tradeoff(eta, pair.x) - pair.y));
        }
    }
    const FidelityPair balanced = universal_id_fidelities(1.0, kPi / 2);
    const double spot =
        std::max(std::abs(balanced.x - 0.5), std::abs(balanced.y - 0.5));
    const bool passed = worst <= tol.identity && spot <= 1e-12;
    std::ostringstream detail;
    detail << "300 angles, worst identity residual " << format_dev(worst)
           << "; balanced point off by " << format_dev(spot);
    return finish_check("universal_tradeoff_identity", passed, worst, detail.str());
}

CheckResult check_universality(const ValidationTolerances& tol) {
    const std::vector<Complex> amplitudes{
        {0.0, 0.0}, {0.7, 0.0}, {1.0, 1.0}, {2.0, 0.0}, {0.0, 3.0}};
    double worst = 0.0;
    for (double eta : {0.8, 1.0}) {
        for (double phi : {kPi / 6, kPi / 3, kPi / 2}) {
            SchemeParams p{eta, phi, universal_kappa(phi), universal_gain(phi)};
            for (auto fidelity : {&info_fidelity_coherent, &disturbance_fidelity_coherent,
                                  &est_fidelity_coherent, &distortion_fidelity_coherent}) {
                double lo = std::numeric_limits<double>::infinity();
                double hi = -lo;
                for (Complex beta : amplitudes) {
                    const double value = fidelity(p, beta);
                    lo = std::min(lo, value);
                    hi = std::max(hi, value);
                }
                worst = std::max(worst, hi - lo);
            }
        }
    }
    std::ostringstream detail;
    detail << "amplitude spread at universal parameters: " << format_dev(worst);
    return finish_check("universality", worst <= tol.universality, worst, detail.str());
}

CheckResult check_normalization(const ValidationTolerances& tol) {
    double worst = 0.0;
    double most_negative = 0.0;
    // s-ordered number-state functions.
    for (int n : {0, 1, 2, 3, 5, 10}) {
        for (double s : {-3.0, -1.0, -0.5, 0.0, 0.5}) {
            const double radius =
                (std::sqrt(2.0 * n + 1.0) + 8.0) * std::max(1.0, std::sqrt((1.0 - s) / 2.0));
            const double integral = integrate_radial(
                [&](double r) { return wigner_s_fock(n, s, Complex(r, 0.0)); }, radius);
            worst = std::max(worst, std::abs(integral - 1.0));
        }
    }
    // Coherent-state functions.
    for (Complex beta : kAmplitudeGrid) {
        for (double s : {-3.0, -1.0, 0.0, 0.5}) {
            const double radius = 8.0 * std::max(1.0, std::sqrt((1.0 - s) / 2.0));
            const double integral = integrate_plane(
                [&](Complex xi) { return wigner_s_coherent(beta, s, xi); }, beta, radius);
            worst = std::max(worst, std::abs(integral - 1.0));
        }
    }
    // Outcome distributions, including their first two moments.
    const std::vector<InputState> states{CoherentState{{0.0, 0.0}},
                                         CoherentState{{1.5, 0.5}},
                                         CoherentState{{3.0, 0.0}},
                                         FockState{0},
                                         FockState{2},
                                         FockState{5}};
    for (double eta : kEtaGrid) {
        for (double phi : {kPi / 6, kPi / 3, kPi / 2}) {
            for (const auto& state : states) {
                SchemeParams p{eta, phi, 1.0, 0.0};
                if (const auto* coh = std::get_if<CoherentState>(&state)) {
                    const Complex mean = coh->amplitude * std::sin(phi);
                    const double radius = 8.0 / std::sqrt(eta) + 2.0;
                    const auto density = [&](Complex z) { return outcome_density(state, p, z); };
                    const double total = integrate_plane(density, mean, radius);
                    worst = std::max(worst, std::abs(total - 1.0));
                    const double mean_x = integrate_plane(
                        [&](Complex z) { return z.real() * density(z); }, mean, radius);
                    const double var_x = integrate_plane(
                        [&](Complex z) {
                            const double dx = z.real() - mean.real();
                            return dx * dx * density(z);
                        },
                        mean, radius);
                    worst = std::max(worst, std::abs(mean_x - mean.real()));
                    worst = std::max(worst, std::abs(var_x - 1.0 / (2.0 * eta)));
                } else {
                    const int n = std::get<FockState>(state).n;
                    const double radius = std::sqrt(2.0 * n + 1.0) + 8.0 / std::sqrt(eta);
                    const double total = integrate_radial(
                        [&](double r) { return outcome_density(state, p, Complex(r, 0.0)); },
                        radius);
                    worst = std::max(worst, std::abs(total - 1.0));
                }
            }
        }
    }
    // Output Q-functions: normalised and nonnegative.
    for (double eta : {0.8, 1.0}) {
        for (double phi : {kPi / 6, kPi / 3, kPi / 2}) {
            for (double gain : {0.0, 0.5, 1.0}) {
                if (phi == kPi / 2 && gain == 0.0) continue;  // degenerate geometry
                for (const auto& state : states) {
                    SchemeParams p{eta, phi, 1.0, gain};
                    const double c = feedforward_scale(p);
                    if (const auto* coh = std::get_if<CoherentState>(&state)) {
                        const Complex center = coh->amplitude * c;
                        const double radius = 10.0 * std::max(1.0, c) + 2.0;
                        const double total = integrate_plane(
                            [&](Complex z) { return output_q(state, p, z); }, center, radius);
                        worst = std::max(worst, std::abs(total - 1.0));
                        for (int i = -3; i <= 3; ++i) {
                            for (int j = -3; j <= 3; ++j) {
                                const Complex z = center + Complex(0.8 * i, 0.8 * j);
                                most_negative = std::min(most_negative, output_q(state, p, z));
                            }
                        }
                    } else {
                        const int n = std::get<FockState>(state).n;
                        const double radius = (std::sqrt(2.0 * n + 1.0) + 8.0) * std::max(1.0, c);
                        const double total = integrate_radial(
                            [&](double r) { return output_q(state, p, Complex(r, 0.0)); }, radius);
                        worst = std::max(worst, std::abs(total - 1.0));
                        for (int i = 0; i <= 20; ++i) {
                            const Complex z(radius * i / 20.0, 0.0);
                            most_negative = std::min(most_negative, output_q(state, p, z));
                        }
                    }
                }
            }
        }
    }
    const bool passed = worst <= tol.normalization && most_negative >= -tol.positivity;
    std::ostringstream detail;
    detail << "worst normalisation/moment deviation " << format_dev(worst)
           << "; most negative output Q " << format_dev(most_negative);
    return finish_check("normalization", passed, worst, detail.str());
}

CheckResult check_smoothing_consistency(const ValidationTolerances& tol) {
    double worst = 0.0;
    // Ordering transport for a coherent state: r = 0 down to s = -1 and -3.
    {
        const Complex beta(1.0, 0.5);
        const PlaneFn w0 = [&](Complex xi) { return wigner_s_coherent(beta, 0.0, xi); };
        for (int i = -2; i <= 2; ++i) {
            for (int j = -2; j <= 2; ++j) {
                const Complex zeta = beta + Complex(0.9 * i, 0.9 * j);
                worst = std::max(worst, std::abs(gaussian_smooth(w0, 0.0, -1.0, zeta) -
                                                 wigner_s_coherent(beta, -1.0, zeta)));
            }
        }
        const PlaneFn wq = [&](Complex xi) { return wigner_s_coherent(beta, -1.0, xi); };
        for (Complex zeta : {beta, beta + Complex(1.2, 0.0), Complex(0.0, 0.0)}) {
            worst = std::max(worst, std::abs(gaussian_smooth(wq, -1.0, -3.0, zeta) -
                                             wigner_s_coherent(beta, -3.0, zeta)));
        }
    }
    // Ordering transport for number states.
    for (int n : {1, 2, 5}) {
        const PlaneFn w0 = [&](Complex xi) { return wigner_s_fock(n, 0.0, xi); };
        for (double r : {0.0, 0.5, 1.0, 1.6, 2.4}) {
            const Complex zeta(r, 0.0);
            worst = std::max(worst, std::abs(gaussian_smooth(w0, 0.0, -1.0, zeta) -
                                             wigner_s_fock(n, -1.0, zeta)));
        }
    }
    // Output Q equals the output P smoothed by two ordering units.
    for (const InputState& state :
         {InputState{CoherentState{{1.0, 0.0}}}, InputState{FockState{2}}}) {
        SchemeParams p{0.9, kPi / 3, 1.0, 0.7};
        const PlaneFn p_out = [&](Complex xi) { return output_p_density(state, p, xi); };
        for (int i = -1; i <= 1; ++i) {
            for (int j = -1; j <= 1; ++j) {
                const Complex z(0.9 * i + 0.5, 0.9 * j);
                worst = std::max(worst, std::abs(gaussian_smooth(p_out, 1.0, -1.0, z) -
                                                 output_q(state, p, z)));
            }
        }
    }
    std::ostringstream detail;
    detail << "worst transport deviation " << format_dev(worst);
    return finish_check("smoothing_consistency", worst <= tol.smoothing, worst, detail.str());
}

CheckResult check_optimizer_argmax(const ValidationTolerances& tol) {
    const std::vector<double> etas{0.8, 0.85, 0.9, 1.0};
    const std::vector<double> phis{kPi / 6, kPi / 4, kPi / 3, 5 * kPi / 12, kPi / 2};
    const std::vector<double> omegas{0.5, 1.0, 2.0, 5.0, 10.0};
    const double step = tol.argmax_step;
    int points = 0;
    int failures = 0;
    double worst_residual = 0.0;
    for (double eta : etas) {
        for (double phi : phis) {
            for (double omega : omegas) {
                ++points;
                const double k_info = optimal_kappa_info(eta, phi, omega);
                const auto gbar = [&](double k) {
                    return avg_id_fidelities(eta, phi, omega, k, 0.0).x;
                };
                if (!(gbar(k_info) > gbar(k_info + step) && gbar(k_info) > gbar(k_info - step))) {
                    ++failures;
                }
                const double g_dist = optimal_g_disturbance(eta, phi, omega);
                const auto fbar = [&](double g) {
                    return avg_id_fidelities(eta, phi, omega, 0.0, g).y;
                };
                if (!(fbar(g_dist) > fbar(g_dist + step) && fbar(g_dist) > fbar(g_dist - step))) {
                    ++failures;
                }
                const double k_est = optimal_kappa_estimation(eta, phi, omega);
                const auto hbar = [&](double k) {
                    return avg_ed_fidelities(eta, phi, omega, k, 0.0).x;
                };
                if (!(hbar(k_est) > hbar(k_est + step) && hbar(k_est) > hbar(k_est - step))) {
                    ++failures;
                }
                const double g_tor = optimal_g_distortion(eta, phi, omega);
                const auto kbar = [&](double g) {
                    return avg_ed_fidelities(eta, phi, omega, 0.0, g).y;
                };
                if (!(kbar(g_tor) > kbar(g_tor + step) && kbar(g_tor) > kbar(g_tor - step))) {
                    ++failures;
                }
                // Residual of the distortion cubic at the returned root.
                const double om2 = omega * omega;
                const double sin_phi = std::sin(phi);
                const double a3 = 2.0 + eta * om2 * sin_phi * sin_phi;
                const double a1 = eta * om2 *
                                  (2.0 * eta * sin_phi * sin_phi -
                                   (1.0 - std::cos(phi)) * (1.0 - std::cos(phi)));
                const double a0 = -eta * eta * om2 * (2.0 * sin_phi - std::sin(2.0 * phi));
                worst_residual =
                    std::max(worst_residual, std::abs((a3 * g_tor * g_tor + a1) * g_tor + a0));
                for (double sibling : cubic_real_roots(a3, a1, a0)) {
                    if (std::abs(sibling - g_tor) > 1e-9 && sibling >= 0.0 && sibling <= 10.0 &&
                        kbar(sibling) > kbar(g_tor)) {
                        ++failures;
                    }
                }
            }
        }
    }
    // Reference point: root of 3g^3 + g - 2 = 0 against plain bisection.
    const double root = optimal_g_distortion(1.0, kPi / 2, 1.0);
    double lo = 0.0, hi = 2.0;
    while (hi - lo > 1e-13) {
        const double mid = 0.5 * (lo + hi);
        ((3.0 * mid * mid * mid + mid - 2.0) < 0.0 ? lo : hi) = mid;
    }
    const double bisected = 0.5 * (lo + hi);
    const bool spot_ok = std::abs(root - bisected) <= 1e-6 && std::abs(root - 0.74742) <= 1e-4;
    // Golden-section agreement with a closed-form optimum.
    const auto h_objective = [](double k) { return avg_ed_fidelities(1.0, kPi / 2, 1.0, k, 0.0).x; };
    const MaxResult golden = maximize_1d(h_objective, Bracket{}, 1e-8);
    const bool golden_ok = std::abs(golden.arg - 1.0) <= 1e-6 && std::abs(golden.value - 1.0) <= 1e-9;

    const bool passed =
        failures == 0 && worst_residual <= tol.cubic_residual && spot_ok && golden_ok;
    std::ostringstream detail;
    detail << points << " grid points, " << failures << " argmax failures, worst cubic residual "
           << format_dev(worst_residual) << ", reference root " << root << " (bisection "
           << bisected << ")";
    return finish_check("optimizer_argmax", passed, worst_residual, detail.str());
}

CheckResult check_universal_limit(const ValidationTolerances& tol) {
    const double omega = 1e3;
    double worst = 0.0;
    for (double eta : kEtaGrid) {
        for (double phi : kPhiGrid) {
            const double k_univ = universal_kappa(phi);
            const double g_univ = universal_gain(phi);
            worst = std::max(worst, std::abs(optimal_kappa_info(eta, phi, omega) - k_univ));
            worst = std::max(worst, std::abs(optimal_g_disturbance(eta, phi, omega) - g_univ));
            worst = std::max(worst, std::abs(optimal_kappa_estimation(eta, phi, omega) - k_univ));
            worst = std::max(worst, std::abs(optimal_g_distortion(eta, phi, omega) - g_univ));
        }
    }
    std::ostringstream detail;
    detail << "worst distance from universal parameters at Omega = 1e3: " << format_dev(worst);
    return finish_check("universal_limit", worst <= tol.universal_limit, worst, detail.str());
}

CheckResult check_nonuniversal_dominance(const ValidationTolerances& tol) {
    bool passed = true;
    double min_gap = std::numeric_limits<double>::infinity();
    std::ostringstream detail;
    for (double eta : {0.8, 0.9}) {
        const double reachable = eta / (1.0 + eta);
        for (double omega : {0.5, 1.0, 5.0, 10.0}) {
            int overlap_points = 0;
            for (int i = 1; i <= 200; ++i) {
                const double phi = kPi / 2 * i / 200.0;
                const double k = optimal_kappa_info(eta, phi, omega);
                const double g = optimal_g_disturbance(eta, phi, omega);
                const FidelityPair pair = avg_id_fidelities(eta, phi, omega, k, g);
                if (pair.x >= reachable - 1e-9) continue;
                ++overlap_points;
                const double gap = pair.y - universal_id_tradeoff(eta, pair.x);
                min_gap = std::min(min_gap, gap);
                if (gap < tol.dominance_margin) passed = false;
            }
            if (omega <= 1.0) {
                // Narrow ensembles sit entirely to the right of the universal range.
                const double g_floor = 1.0 / (1.0 + omega * omega);
                if (overlap_points != 0 || g_floor < reachable - 1e-12) passed = false;
            } else if (overlap_points < 50) {
                passed = false;
            }
        }
        // Wide-ensemble limit: the optimised curve collapses onto the universal one.
        double coincide = 0.0;
        const double omega_wide = 1e3;
        for (int i = 1; i <= 100; ++i) {
            const double phi = kPi / 2 * i / 100.0;
            const double k = optimal_kappa_info(eta, phi, omega_wide);
            const double g = optimal_g_disturbance(eta, phi, omega_wide);
            const FidelityPair pair = avg_id_fidelities(eta, phi, omega_wide, k, g);
            if (pair.x >= reachable - 1e-6) continue;
            coincide = std::max(coincide, std::abs(pair.y - universal_id_tradeoff(eta, pair.x)));
        }
        if (coincide > tol.universal_limit) passed = false;
        detail << "eta=" << eta << ": Omega=1e3 coincidence " << format_dev(coincide) << "; ";
    }
    // Exact spot: eta = 1, Omega = 1, phi = pi/2 reaches (2/3, 2/3).
    const FidelityPair spot = avg_id_fidelities(1.0, kPi / 2, 1.0, optimal_kappa_info(1.0, kPi / 2, 1.0),
                                                optimal_g_disturbance(1.0, kPi / 2, 1.0));
    const double spot_dev =
        std::max(std::abs(spot.x - 2.0 / 3.0), std::abs(spot.y - 2.0 / 3.0));
    if (spot_dev > 1e-14) passed = false;
    detail << "min dominance gap " << format_dev(min_gap) << "; (2/3, 2/3) off by "
           << format_dev(spot_dev);
    return finish_check("nonuniversal_dominance", passed, min_gap, detail.str());
}

CheckResult check_fgnu_discrepancy(const ValidationTolerances& tol) {
    double worst_corrected = 0.0;
    double least_printed = std::numeric_limits<double>::infinity();
    double worst_printed = 0.0;
    for (double eta : kEtaGrid) {
        for (double omega : {1.0, 5.0}) {
            const double om2 = omega * omega;
            for (int i = 1; i < 50; ++i) {
                const double phi = kPi / 2 * i / 50.0;
                const double k = optimal_kappa_info(eta, phi, omega);
                const double g = optimal_g_disturbance(eta, phi, omega);
                const FidelityPair pair = avg_id_fidelities(eta, phi, omega, k, g);
                const double braces = fgnu_braces(eta, omega, pair.x);
                const double corrected = pair.x / braces;
                const double printed = (1.0 + om2) * pair.x / om2 / braces;
                worst_corrected = std::max(worst_corrected, std::abs(pair.y - corrected));
                least_printed = std::min(least_printed, std::abs(pair.y - printed));
                worst_printed = std::max(worst_printed, std::abs(pair.y - printed));
            }
        }
    }
    const bool passed = worst_corrected <= tol.fgnu_corrected && least_printed >= 5e-3;
    std::ostringstream detail;
    detail << "corrected prefactor (plain Gbar) agrees to " << format_dev(worst_corrected)
           << "; printed prefactor (1+Om^2)Gbar/Om^2 deviates by " << format_dev(least_printed)
           << " .. " << format_dev(worst_printed);
    return finish_check("fgnu_discrepancy", passed, worst_corrected, detail.str());
}

CheckResult check_eta_degradation(const ValidationTolerances& tol) {
    (void)tol;
    double min_gap = std::numeric_limits<double>::infinity();
    // Universal curves: at matched information fidelity the lossier detector
    // always disturbs more.
    const double reachable_low = 0.8 / 1.8;
    for (int i = 1; i < 100; ++i) {
        const double info = reachable_low * i / 100.0;
        min_gap = std::min(min_gap, universal_id_tradeoff(0.9, info) -
                                        universal_id_tradeoff(0.8, info));
    }
    bool passed = min_gap > 0.0;
    // Optimised ensemble curves at Omega = 1, compared at matched x.
    const auto curve_low =
        generate_curve({CurveKind::IdCoherent, 0.8, GaussianCoherentEnsemble{1.0}, 60, false});
    const auto curve_high =
        generate_curve({CurveKind::IdCoherent, 0.9, GaussianCoherentEnsemble{1.0}, 60, false});
    const double x_lo = std::max(curve_low.front().x_fid, curve_high.front().x_fid);
    const double x_hi = std::min(curve_low.back().x_fid, curve_high.back().x_fid);
    double min_opt_gap = std::numeric_limits<double>::infinity();
    for (int i = 1; i < 40; ++i) {
        const double x = x_lo + (x_hi - x_lo) * i / 40.0;
        min_opt_gap = std::min(min_opt_gap,
                               interp_y_at_x(curve_high, x) - interp_y_at_x(curve_low, x));
    }
    passed = passed && min_opt_gap > 0.0;
    std::ostringstream detail;
    detail << "eta=0.9 curve above eta=0.8: universal margin " << format_dev(min_gap)
           << ", optimised (Omega=1) margin " << format_dev(min_opt_gap);
    return finish_check("eta_degradation", passed, std::min(min_gap, min_opt_gap), detail.str());
}

CheckResult check_monotone_tradeoff(const ValidationTolerances& tol) {
    (void)tol;
    std::vector<CurveSpec> specs;
    for (double eta : {0.8, 1.0}) {
        for (double omega : {1.0, 5.0}) {
            specs.push_back({CurveKind::IdCoherent, eta, GaussianCoherentEnsemble{omega}, 40, false});
            specs.push_back({CurveKind::EdCoherent, eta, GaussianCoherentEnsemble{omega}, 40, false});
        }
    }
    specs.push_back({CurveKind::IdCoherent, 0.9, GaussianCoherentEnsemble{1.0}, 40, true});
    specs.push_back({CurveKind::EdCoherent, 0.9, GaussianCoherentEnsemble{1.0}, 40, true});
    specs.push_back({CurveKind::EdFock, 0.9, InputState{FockState{1}}, 8, false});
    specs.push_back({CurveKind::EdThermal, 0.9, ThermalFockEnsemble{1.0, 0}, 6, false});
    double worst = 0.0;
    for (const auto& spec : specs) {
        const bool numeric =
            spec.curve == CurveKind::EdFock || spec.curve == CurveKind::EdThermal;
        const double slack = numeric ? 1e-6 : 1e-9;
        const auto curve = generate_curve(spec);
        for (std::size_t i = 1; i < curve.size(); ++i) {
            worst = std::max(worst, curve[i - 1].x_fid - curve[i].x_fid);
            worst = std::max(worst, curve[i].y_fid - curve[i - 1].y_fid);
            if (curve[i].x_fid < curve[i - 1].x_fid - slack ||
                curve[i].y_fid > curve[i - 1].y_fid + slack) {
                std::ostringstream detail;
                detail << "monotonicity broken for " << curve_kind_name(spec.curve) << " at phi "
                       << curve[i].phi;
                return finish_check("monotone_tradeoff", false, worst, detail.str());
            }
        }
    }
    std::ostringstream detail;
    detail << specs.size() << " curves monotone; worst excursion " << format_dev(worst);
    return finish_check("monotone_tradeoff", true, worst, detail.str());
}

CheckResult check_fock_nonuniversality(const ValidationTolerances& tol) {
    (void)tol;
    const double eta = 1.0, phi = kPi / 3;
    const auto h_of = [&](int n, double kappa) {
        SchemeParams p{eta, phi, kappa, 0.0};
        return oracle_fidelity(FidelityKind::Estimation, FockState{n}, p);
    };
    const auto k_of = [&](int n, double gain) {
        SchemeParams p{eta, phi, 1.0, gain};
        return oracle_fidelity(FidelityKind::Distortion, FockState{n}, p);
    };
    const MaxResult h0 = maximize_1d([&](double k) { return h_of(0, k); }, Bracket{}, 1e-6);
    const MaxResult h1 = maximize_1d([&](double k) { return h_of(1, k); }, Bracket{}, 1e-6);
    const MaxResult k0 = maximize_1d([&](double g) { return k_of(0, g); }, Bracket{}, 1e-6);
    const MaxResult k1 = maximize_1d([&](double g) { return k_of(1, g); }, Bracket{}, 1e-6);

    bool passed = true;
    // Independently computed references for the n = 1 optima.
    passed &= std::abs(h0.arg - 1.0) <= 1e-3 && std::abs(h0.value - 1.0) <= 1e-6;
    passed &= std::abs(h1.arg - 1.063875) <= 2e-3 && std::abs(h1.value - 0.992123) <= 5e-4;
    passed &= k0.arg <= 1e-3 && k0.value >= 1.0 - 1e-4;
    passed &= std::abs(k1.arg - 0.497646) <= 2e-3 && std::abs(k1.value - 0.988578) <= 5e-4;
    // Distinct optima.
    passed &= std::abs(h0.arg - h1.arg) >= 0.02 && std::abs(h0.value - h1.value) >= 1e-3;
    passed &= std::abs(k0.arg - k1.arg) >= 0.05 && std::abs(k0.value - k1.value) >= 1e-3;
    // No intersection near either maximum (+-25% of the argmax).
    double min_gap = std::numeric_limits<double>::infinity();
    const auto scan_gap = [&](double center, auto&& f0, auto&& f1) {
        const double lo = center > 0.05 ? 0.75 * center : 0.0;
        const double hi = center > 0.05 ? 1.25 * center : 0.05;
        for (int i = 0; i <= 10; ++i) {
            const double x = lo + (hi - lo) * i / 10.0;
            min_gap = std::min(min_gap, std::abs(f0(x) - f1(x)));
        }
    };
    scan_gap(h0.arg, [&](double k) { return h_of(0, k); }, [&](double k) { return h_of(1, k); });
    scan_gap(h1.arg, [&](double k) { return h_of(0, k); }, [&](double k) { return h_of(1, k); });
    scan_gap(k0.arg, [&](double g) { return k_of(0, g); }, [&](double g) { return k_of(1, g); });
    scan_gap(k1.arg, [&](double g) { return k_of(0, g); }, [&](double g) { return k_of(1, g); });
    passed &= min_gap >= 1e-3;

    std::ostringstream detail;
    detail << "kappa* = " << h0.arg << " vs " << h1.arg << ", H = " << h0.value << " vs "
           << h1.value << "; g* = " << k0.arg << " vs " << k1.arg << ", K = " << k0.value
           << " vs " << k1.value << "; min curve gap near maxima " << format_dev(min_gap);
    return finish_check("fock_nonuniversality", passed, min_gap, detail.str());
}

CheckResult check_thermal_convergence(const ValidationTolerances& tol) {
    bool passed = true;
    double worst_change = 0.0;
    // Truncation stability at fixed parameters.
    for (double nbar : {0.5, 1.0, 2.0}) {
        SchemeParams p{0.9, kPi / 3, 1.0, 0.5};
        const int trunc = auto_thermal_truncation(nbar);
        const FidelityPair base = thermal_avg_ed(p, nbar, trunc);
        const FidelityPair doubled = thermal_avg_ed(p, nbar, 2 * trunc);
        worst_change = std::max({worst_change, std::abs(base.x - doubled.x),
                                 std::abs(base.y - doubled.y)});
    }
    if (worst_change > 1e-6) passed = false;
    // Right-to-left ordering of the optimised curves at matched distortion.
    std::vector<std::vector<TradeoffPoint>> curves;
    for (double nbar : {0.5, 1.0, 2.0}) {
        curves.push_back(
            generate_curve({CurveKind::EdThermal, 0.9, ThermalFockEnsemble{nbar, 0}, 6, false}));
    }
    double y_lo = 0.0, y_hi = 1.0;
    for (const auto& curve : curves) {
        double lo = 1.0, hi = 0.0;
        for (const auto& pt : curve) {
            lo = std::min(lo, pt.y_fid);
            hi = std::max(hi, pt.y_fid);
        }
        y_lo = std::max(y_lo, lo);
        y_hi = std::min(y_hi, hi);
    }
    double min_order_gap = std::numeric_limits<double>::infinity();
    for (int i = 1; i <= 8; ++i) {
        const double y = y_lo + (y_hi - y_lo) * i / 9.0;
        const double x_half = interp_x_at_y(curves[0], y);
        const double x_one = interp_x_at_y(curves[1], y);
        const double x_two = interp_x_at_y(curves[2], y);
        min_order_gap = std::min({min_order_gap, x_half - x_one, x_one - x_two});
    }
    if (min_order_gap < 1e-4) passed = false;
    (void)tol;
    std::ostringstream detail;
    detail << "truncation-doubling change " << format_dev(worst_change)
           << "; right-to-left ordering margin " << format_dev(min_order_gap);
    return finish_check("thermal_convergence", passed, worst_change, detail.str());
}

CheckResult check_montecarlo_consistency(std::uint64_t trials, std::uint64_t seed) {
    struct Point {
        double eta, phi, kappa, gain;
    };
    const std::vector<Point> grid{
        {0.8, kPi / 6, 0.7, 0.5}, {0.8, kPi / 3, 0.7, 0.5}, {0.8, kPi / 2, 0.7, 0.5},
        {1.0, kPi / 6, 0.7, 0.5}, {1.0, kPi / 3, 0.7, 0.5}, {1.0, kPi / 2, 0.7, 0.5},
        {0.9, kPi / 2, 1.0, 1.0}, {1.0, kPi / 2, 1.0, 1.0}, {0.8, kPi / 4, 1.2, 0.8},
        {1.0, kPi / 3, 0.5, 1.2}};
    const Complex beta(0.8, 0.4);
    int within = 0;
    int comparisons = 0;
    double worst_sigma = 0.0;
    for (std::size_t i = 0; i < grid.size(); ++i) {
        const auto& pt = grid[i];
        SchemeParams p{pt.eta, pt.phi, pt.kappa, pt.gain};
        RunConfig cfg{trials, seed + i, 1};
        const IdFidelityEstimates est = empirical_id_fidelities(beta, p, cfg);
        const double g_ref = info_fidelity_coherent(p, beta);
        const double f_ref = disturbance_fidelity_coherent(p, beta);
        const double g_sigma = std::abs(est.info.mean - g_ref) / est.info.std_error;
        const double f_sigma = std::abs(est.disturbance.mean - f_ref) / est.disturbance.std_error;
        within += g_sigma <= 4.0 ? 1 : 0;
        within += f_sigma <= 4.0 ? 1 : 0;
        comparisons += 2;
        worst_sigma = std::max({worst_sigma, g_sigma, f_sigma});
    }
    // Bit-exact reproducibility across worker counts.
    SchemeParams p{0.9, kPi / 3, 0.8, 0.6};
    const RunConfig serial{trials, seed, 1};
    const RunConfig parallel{trials, seed, 4};
    const IdFidelityEstimates a = empirical_id_fidelities(beta, p, serial);
    const IdFidelityEstimates b = empirical_id_fidelities(beta, p, parallel);
    const bool bit_exact = a.info.mean == b.info.mean && a.info.std_error == b.info.std_error &&
                           a.disturbance.mean == b.disturbance.mean &&
                           a.disturbance.std_error == b.disturbance.std_error;
    // Ensemble average reproduces the optimised spot (2/3, 2/3).
    SchemeParams spot{1.0, kPi / 2, 0.5, 0.5};
    const IdFidelityEstimates ens =
        empirical_id_fidelities_gaussian(1.0, spot, RunConfig{trials, seed + 99, 1});
    const bool ensemble_ok =
        std::abs(ens.info.mean - 2.0 / 3.0) <= 4.0 * ens.info.std_error &&
        std::abs(ens.disturbance.mean - 2.0 / 3.0) <= 4.0 * ens.disturbance.std_error;

    const bool passed = within >= comparisons - 1 && bit_exact && ensemble_ok;
    std::ostringstream detail;
    detail << within << "/" << comparisons << " estimates within 4 sigma (worst "
           << format_dev(worst_sigma) << " sigma); bit-exact across workers: "
           << (bit_exact ? "yes" : "no") << "; ensemble spot within 4 sigma: "
           << (ensemble_ok ? "yes" : "no");
    return finish_check("montecarlo_consistency", passed, worst_sigma, detail.str());
}

ValidationReport run_validation(const ValidationTolerances& tol) {
    ValidationReport report;
    report.checks.push_back(check_closed_form_vs_oracle(tol));
    report.checks.push_back(check_average_vs_oracle(tol));
    report.checks.push_back(check_sign_adjudication(tol));
    report.checks.push_back(check_universal_tradeoff_identity(tol));
    report.checks.push_back(check_universality(tol));
    report.checks.push_back(check_normalization(tol));
    report.checks.push_back(check_smoothing_consistency(tol));
    report.checks.push_back(check_optimizer_argmax(tol));
    report.checks.push_back(check_universal_limit(tol));
    report.checks.push_back(check_nonuniversal_dominance(tol));
    report.checks.push_back(check_fgnu_discrepancy(tol));
    report.checks.push_back(check_eta_degradation(tol));
    report.checks.push_back(check_monotone_tradeoff(tol));
    report.checks.push_back(check_fock_nonuniversality(tol));
    report.checks.push_back(check_thermal_convergence(tol));
    return report;
}

}  // namespace homodyne
