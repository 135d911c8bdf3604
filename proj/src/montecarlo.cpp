#include "homodyne/montecarlo.hpp"

#include <cmath>
#include <numbers>
#include <thread>

#include "homodyne/quadrature.hpp"

namespace homodyne {

namespace {

constexpr std::uint64_t kBlockTrials = 8192;
constexpr int kRejectionWindow = 100000;

// Accumulators merged across blocks in index order, so results are identical
// for every worker count.
struct BlockSums {
    double g = 0.0, g2 = 0.0;
    double f = 0.0, f2 = 0.0;
};

BlockSums merge(const BlockSums& a, const BlockSums& b) {
    return {a.g + b.g, a.g2 + b.g2, a.f + b.f, a.f2 + b.f2};
}

// Pairwise reduction over the block array (deterministic tree order).
BlockSums pairwise_merge(const std::vector<BlockSums>& blocks, std::size_t lo, std::size_t hi) {
    if (hi - lo == 1) return blocks[lo];
    const std::size_t mid = lo + (hi - lo) / 2;
    return merge(pairwise_merge(blocks, lo, mid), pairwise_merge(blocks, mid, hi));
}

EstimateWithError finish(double sum, double sum_sq, std::uint64_t n) {
    EstimateWithError est;
    est.trials = n;
    est.mean = sum / static_cast<double>(n);
    const double var =
        n > 1 ? std::max(0.0, (sum_sq - sum * sum / static_cast<double>(n)) /
                                  static_cast<double>(n - 1))
              : 0.0;
    est.std_error = std::sqrt(var / static_cast<double>(n));
    return est;
}

// Runs `body(block_index, rng, trials_in_block)` over all blocks, partitioned
// round-robin across workers.
template <typename Body>
void run_blocks(const RunConfig& cfg, Body&& body) {
    const std::uint64_t n_blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
    const int workers = std::max(1, cfg.workers);
    auto worker_loop = [&](int w) {
        for (std::uint64_t b = w; b < n_blocks; b += workers) {
            Rng rng(block_seed(cfg.seed, b));
            const std::uint64_t count =
                std::min<std::uint64_t>(kBlockTrials, cfg.trials - b * kBlockTrials);
            body(b, rng, count);
        }
    };
    if (workers == 1) {
        worker_loop(0);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int w = 0; w < workers; ++w) pool.emplace_back(worker_loop, w);
    for (auto& t : pool) t.join();
}

}  // namespace

double Rng::normal() {
    if (have_spare_) {
        have_spare_ = false;
        return spare_;
    }
    const double u1 = uniform();
    const double u2 = uniform();
    const double radius = std::sqrt(-2.0 * std::log(u1));
    const double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    have_spare_ = true;
    return radius * std::cos(angle);
}

std::uint64_t block_seed(std::uint64_t master, std::uint64_t block) {
    // splitmix64 step applied to the master seed jumped by the block index.
    std::uint64_t z = master + (block + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

OutcomeSampler::OutcomeSampler(const InputState& state, const SchemeParams& p)
    : params_(p), state_(state) {
    p.check();
    const double sin_phi = std::sin(p.phi);
    if (const auto* coh = std::get_if<CoherentState>(&state)) {
        mean_ = coh->amplitude * sin_phi;
        sigma_ = std::sqrt(1.0 / (2.0 * p.eta));
        return;
    }
    const int n = std::get<FockState>(state).n;
    if (n == 0 || sin_phi == 0.0) {
        // Vacuum statistics either way.
        sigma_ = std::sqrt(1.0 / (2.0 * p.eta));
        return;
    }
    direct_ = false;
    sigma_ = std::sqrt((n + 1) / (2.0 * p.eta));
    // Numerical majorant of target/envelope over the radial profile.
    const double scan_max = 10.0 + 8.0 * sigma_;
    double bound = 0.0;
    constexpr int kScan = 4096;
    for (int i = 0; i <= kScan; ++i) {
        const double r = scan_max * i / kScan;
        const double target = outcome_density(state_, params_, Complex(r, 0.0));
        const double envelope =
            std::exp(-r * r / (2.0 * sigma_ * sigma_)) / (2.0 * std::numbers::pi * sigma_ * sigma_);
        bound = std::max(bound, target / envelope);
    }
    bound_ = bound * 1.02;
}

Complex OutcomeSampler::operator()(Rng& rng) const {
    if (direct_) {
        return mean_ + Complex(sigma_ * rng.normal(), sigma_ * rng.normal());
    }
    const double inv_norm = 2.0 * std::numbers::pi * sigma_ * sigma_;
    for (int attempts = 0; attempts < kRejectionWindow; ++attempts) {
        const Complex z(sigma_ * rng.normal(), sigma_ * rng.normal());
        const double envelope = std::exp(-std::norm(z) / (2.0 * sigma_ * sigma_)) / inv_norm;
        if (rng.uniform() * bound_ * envelope <= outcome_density(state_, params_, z)) {
            return z;
        }
    }
    throw RejectionStall("no acceptance within the rejection window");
}

Complex sample_outcome(const InputState& state, const SchemeParams& p, Rng& rng) {
    return OutcomeSampler(state, p)(rng);
}

IdFidelityEstimates empirical_id_fidelities(Complex beta, const SchemeParams& p,
                                            const RunConfig& cfg) {
    p.check();
    if (cfg.trials == 0) throw std::invalid_argument("empirical_id_fidelities: trials >= 1");
    const OutcomeSampler sampler(InputState{CoherentState{beta}}, p);
    const double transmitted = 1.0 - std::cos(p.phi);
    const std::uint64_t n_blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<BlockSums> blocks(n_blocks);
    run_blocks(cfg, [&](std::uint64_t b, Rng& rng, std::uint64_t count) {
        BlockSums sums;
        for (std::uint64_t i = 0; i < count; ++i) {
            const Complex z = sampler(rng);
            const double g_trial = std::exp(-std::norm(p.kappa * z - beta));
            const double f_trial = std::exp(-std::norm(beta * transmitted - p.gain * z));
            sums.g += g_trial;
            sums.g2 += g_trial * g_trial;
            sums.f += f_trial;
            sums.f2 += f_trial * f_trial;
        }
        blocks[b] = sums;
    });
    const BlockSums total = pairwise_merge(blocks, 0, blocks.size());
    return {finish(total.g, total.g2, cfg.trials), finish(total.f, total.f2, cfg.trials)};
}

IdFidelityEstimates empirical_id_fidelities_gaussian(double omega, const SchemeParams& p,
                                                     const RunConfig& cfg) {
    p.check();
    if (!(omega > 0.0)) throw std::invalid_argument("requires Omega > 0");
    if (cfg.trials == 0) throw std::invalid_argument("trials >= 1");
    const double beta_sigma = omega / std::numbers::sqrt2;
    const double outcome_sigma = std::sqrt(1.0 / (2.0 * p.eta));
    const double sin_phi = std::sin(p.phi);
    const double transmitted = 1.0 - std::cos(p.phi);
    const std::uint64_t n_blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<BlockSums> blocks(n_blocks);
    run_blocks(cfg, [&](std::uint64_t b, Rng& rng, std::uint64_t count) {
        BlockSums sums;
        for (std::uint64_t i = 0; i < count; ++i) {
            const Complex beta(beta_sigma * rng.normal(), beta_sigma * rng.normal());
            const Complex z = beta * sin_phi +
                              Complex(outcome_sigma * rng.normal(), outcome_sigma * rng.normal());
            const double g_trial = std::exp(-std::norm(p.kappa * z - beta));
            const double f_trial = std::exp(-std::norm(beta * transmitted - p.gain * z));
            sums.g += g_trial;
            sums.g2 += g_trial * g_trial;
            sums.f += f_trial;
            sums.f2 += f_trial * f_trial;
        }
        blocks[b] = sums;
    });
    const BlockSums total = pairwise_merge(blocks, 0, blocks.size());
    return {finish(total.g, total.g2, cfg.trials), finish(total.f, total.f2, cfg.trials)};
}

EstimateHistogram empirical_estimate_distribution(const InputState& state, const SchemeParams& p,
                                                  const RunConfig& cfg,
                                                  const HistogramSpec& spec) {
    p.check();
    if (cfg.trials == 0) throw std::invalid_argument("trials >= 1");
    if (spec.bins < 2) throw std::invalid_argument("at least 2 bins per axis");
    double amplitude_scale = 0.0;
    if (const auto* coh = std::get_if<CoherentState>(&state)) {
        amplitude_scale = std::abs(coh->amplitude);
    } else {
        amplitude_scale = std::sqrt(static_cast<double>(std::get<FockState>(state).n));
    }
    EstimateHistogram hist;
    hist.bins = spec.bins;
    hist.half_extent = spec.half_extent > 0.0 ? spec.half_extent : 5.0 + amplitude_scale;

    const OutcomeSampler sampler(state, p);
    const double cell = 2.0 * hist.half_extent / spec.bins;
    const std::uint64_t n_blocks = (cfg.trials + kBlockTrials - 1) / kBlockTrials;
    std::vector<std::vector<std::uint64_t>> block_counts(n_blocks);
    run_blocks(cfg, [&](std::uint64_t b, Rng& rng, std::uint64_t count) {
        std::vector<std::uint64_t> counts(spec.bins * spec.bins, 0);
        for (std::uint64_t i = 0; i < count; ++i) {
            const Complex scaled = p.kappa * sampler(rng);
            const int ix = static_cast<int>(std::floor((scaled.real() + hist.half_extent) / cell));
            const int iy = static_cast<int>(std::floor((scaled.imag() + hist.half_extent) / cell));
            if (ix < 0 || ix >= spec.bins || iy < 0 || iy >= spec.bins) continue;
            ++counts[iy * spec.bins + ix];
        }
        block_counts[b] = std::move(counts);
    });

    std::vector<std::uint64_t> counts(spec.bins * spec.bins, 0);
    for (const auto& blk : block_counts) {
        for (std::size_t i = 0; i < counts.size(); ++i) counts[i] += blk[i];
    }
    hist.total = 0;
    for (const auto c : counts) hist.total += c;

    hist.density.resize(counts.size());
    double overlap = 0.0;
    for (int iy = 0; iy < spec.bins; ++iy) {
        for (int ix = 0; ix < spec.bins; ++ix) {
            const double px = counts[iy * spec.bins + ix] / static_cast<double>(cfg.trials);
            hist.density[iy * spec.bins + ix] = px;
            const Complex center(-hist.half_extent + (ix + 0.5) * cell,
                                 -hist.half_extent + (iy + 0.5) * cell);
            const double q_mass = q_function(state, center) * cell * cell;
            overlap += std::sqrt(px * q_mass);
        }
    }
    hist.bhattacharyya = overlap;
    return hist;
}

}  // namespace homodyne
