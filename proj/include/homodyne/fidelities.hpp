#pragma once

#include <variant>

#include "homodyne/scheme.hpp"

namespace homodyne {

enum class FidelityKind { Information, Disturbance, Estimation, Distortion };

enum class TradeoffKind { InfoDisturbance, EstimationDistortion };

struct FidelityPair {
    double x = 0.0;  // information or estimation fidelity
    double y = 0.0;  // disturbance or distortion fidelity
    TradeoffKind label = TradeoffKind::InfoDisturbance;
};

/// Coherent amplitudes beta drawn from (1/(pi Omega^2)) exp(-|beta|^2/Omega^2).
struct GaussianCoherentEnsemble {
    double width = 1.0;  // Omega
};

/// Number states weighted by p_n = N^n / (1+N)^(n+1).
struct ThermalFockEnsemble {
    double mean_photons = 1.0;  // N
    int n_trunc = 0;            // 0 = choose automatically
};

using Ensemble = std::variant<GaussianCoherentEnsemble, ThermalFockEnsemble, InputState>;

/// p_n = N^n / (1+N)^(n+1).
double thermal_weight(double mean_photons, int n);

/// Smallest truncation M with tail mass sum_{n>M} p_n < 1e-8.
int auto_thermal_truncation(double mean_photons);

// --- per-coherent-state closed forms -------------------------------------

/// G = eta/(eta+kappa^2) exp(-eta (1-kappa sin phi)^2 |beta|^2 / (eta+kappa^2)).
double info_fidelity_coherent(const SchemeParams& p, Complex beta);

/// F = eta/(eta+g^2) exp(-eta (1-cos phi-g sin phi)^2 |beta|^2 / (eta+g^2)).
double disturbance_fidelity_coherent(const SchemeParams& p, Complex beta);

/// H = 2 kappa sqrt(eta)/(eta+kappa^2)
///       * exp(-eta (1-kappa sin phi)^2 |beta|^2 / (2(eta+kappa^2))).
double est_fidelity_coherent(const SchemeParams& p, Complex beta);

/// K = 2 sqrt(eta(eta+g^2))/(2 eta+g^2)
///       * exp(-eta (1-cos phi-g sin phi)^2 |beta|^2 / (2(2 eta+g^2))).
double distortion_fidelity_coherent(const SchemeParams& p, Complex beta);

// --- universal protocols (kappa = 1/sin phi, g = (1-cos phi)/sin phi) -----

/// (G, F) of the amplitude-independent protocol at the given splitter angle.
FidelityPair universal_id_fidelities(double eta, double phi);

/// Universal disturbance fidelity at a given information fidelity:
///   F = G / { G + (1-G) [1 - sqrt(1 - G/(eta(1-G)))]^2 }.
/// Throws OutOfRange when info exceeds the reachable maximum eta/(1+eta).
double universal_id_tradeoff(double eta, double info);

/// (H, K) of the amplitude-independent protocol.
FidelityPair universal_ed_fidelities(double eta, double phi);

// --- Gaussian-ensemble averages -------------------------------------------

/// (Gbar, Fbar) for amplitude width Omega at the given kappa and gain.
FidelityPair avg_id_fidelities(double eta, double phi, double omega, double kappa, double gain);

/// (Hbar, Kbar) for amplitude width Omega at the given kappa and gain.
FidelityPair avg_ed_fidelities(double eta, double phi, double omega, double kappa, double gain);

/// Gaussian-weighted radial average of a fidelity that depends on |beta| only.
double gaussian_ensemble_average(const std::function<double(double)>& fidelity_of_amplitude,
                                 double omega, const QuadratureSpec& spec = {});

// --- quadrature oracles ----------------------------------------------------

/// Evaluates the defining integral of the requested fidelity directly:
///   Information:  Int T(z) <kz|rho|kz> d^2z            (coherent inputs)
///   Disturbance:  Int P_out(xi) |<beta|xi>|^2 d^2xi    (coherent inputs)
///   Estimation:   Int sqrt(Q_in(z) S(z)) d^2z,  S(z) = T(z/kappa)/kappa^2
///   Distortion:   Int sqrt(Q_in(z) Q_out(z)) d^2z
/// Fock inputs use the radial reduction; information/disturbance for Fock
/// inputs are unsupported.
double oracle_fidelity(FidelityKind kind, const InputState& state, const SchemeParams& p,
                       const QuadratureSpec& spec = {});

/// (H, K) for the number state |n> at the scheme's kappa and gain.
FidelityPair fock_ed_fidelities(int n, const SchemeParams& p, const QuadratureSpec& spec = {});

/// Thermal averages (Hbar, Kbar) = sum_n p_n (H_n, K_n) truncated at n_trunc.
/// Throws TruncationInsufficient when the tail mass cannot be bounded by 1e-8.
FidelityPair thermal_avg_ed(const SchemeParams& p, double mean_photons, int n_trunc,
                            const QuadratureSpec& spec = {});

}  // namespace homodyne
