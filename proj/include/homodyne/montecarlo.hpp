#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "homodyne/scheme.hpp"

namespace homodyne {

struct RunConfig {
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;
};

struct EstimateWithError {
    double mean = 0.0;
    double std_error = 0.0;  // sample standard deviation / sqrt(trials)
    std::uint64_t trials = 0;
};

/// Deterministic generator: a fully specified engine plus fixed bit-to-double
/// mappings, so identical seeds reproduce identical streams on any platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next_u64() { return engine_(); }

    /// Uniform draw in (0, 1].
    double uniform() { return (static_cast<double>(next_u64() >> 11) + 1.0) * 0x1.0p-53; }

    /// Standard normal via Box-Muller; the spare draw is cached.
    double normal();

private:
    std::mt19937_64 engine_;
    double spare_ = 0.0;
    bool have_spare_ = false;
};

/// Stream seed for a trial block, derived from the master seed by a
/// splitmix-style mix so the block's stream never depends on the worker count.
std::uint64_t block_seed(std::uint64_t master, std::uint64_t block);

/// Draws outcomes distributed per outcome_density. Coherent inputs sample the
/// Gaussian law directly; Fock inputs use rejection against a Gaussian
/// envelope with per-axis variance (n+1)/(2 eta). Construct once, then draw.
class OutcomeSampler {
public:
    OutcomeSampler(const InputState& state, const SchemeParams& p);

    Complex operator()(Rng& rng) const;

    /// Envelope bound M; mean acceptance rate of the rejection loop is 1/M.
    double envelope_bound() const { return bound_; }

private:
    SchemeParams params_;
    InputState state_;
    bool direct_ = true;       // Gaussian sampling, no rejection
    Complex mean_{0.0, 0.0};
    double sigma_ = 1.0;       // per-axis deviation (direct or envelope)
    double bound_ = 1.0;
};

/// Single outcome draw; convenience wrapper that builds the sampler per call.
Complex sample_outcome(const InputState& state, const SchemeParams& p, Rng& rng);

struct IdFidelityEstimates {
    EstimateWithError info;
    EstimateWithError disturbance;
};

/// Per trial: draw z, score the inferred-state overlap exp(-|kappa z - beta|^2)
/// and the output-state overlap exp(-|beta(1-cos phi) - g z|^2).
IdFidelityEstimates empirical_id_fidelities(Complex beta, const SchemeParams& p,
                                            const RunConfig& cfg);

/// Same scores with beta redrawn each trial from the Gaussian ensemble of
/// width omega; estimates the averaged fidelities (Gbar, Fbar).
IdFidelityEstimates empirical_id_fidelities_gaussian(double omega, const SchemeParams& p,
                                                     const RunConfig& cfg);

struct HistogramSpec {
    int bins = 64;             // per axis
    double half_extent = 0.0;  // 0 = 5 + amplitude scale of the input
};

struct EstimateHistogram {
    int bins = 0;
    double half_extent = 0.0;
    std::vector<double> density;  // normalised bin probabilities, row-major
    std::uint64_t total = 0;      // samples inside the grid
    double bhattacharyya = 0.0;   // overlap statistic against the input Q-function
};

/// Histogram of the rescaled outcomes kappa*z and its Bhattacharyya overlap
/// with the input Q-function - the empirical counterpart of the estimation
/// fidelity.
EstimateHistogram empirical_estimate_distribution(const InputState& state, const SchemeParams& p,
                                                  const RunConfig& cfg,
                                                  const HistogramSpec& spec = {});

}  // namespace homodyne
