#include <cmath>
#include <numbers>
#include <vector>

#include <doctest.h>

#include "homodyne/fidelities.hpp"
#include "homodyne/montecarlo.hpp"

using namespace homodyne;
namespace {
constexpr double kPi = std::numbers::pi;
}

TEST_SUITE_BEGIN("montecarlo");

TEST_CASE("block seeds decorrelate and stay reproducible") {
    CHECK(block_seed(1, 0) != block_seed(1, 1));
    CHECK(block_seed(1, 0) != block_seed(2, 0));
    CHECK(block_seed(42, 7) == block_seed(42, 7));
}

TEST_CASE("coherent outcomes reproduce the gaussian law") {
    SchemeParams p{1.0, kPi / 2, 1.0, 0.0};
    const Complex beta(2.0, 0.0);
    const OutcomeSampler sampler(CoherentState{beta}, p);
    Rng rng(99);
    const int n = 100000;
    double sx = 0, sy = 0, sxx = 0;
    for (int i = 0; i < n; ++i) {
        const Complex z = sampler(rng);
        sx += z.real();
        sy += z.imag();
        sxx += (z.real() - 2.0) * (z.real() - 2.0);
    }
    const double sigma = std::sqrt(0.5 / n);  // per-axis variance 1/(2 eta)
    CHECK(std::abs(sx / n - 2.0) < 4.0 * sigma);
    CHECK(std::abs(sy / n - 0.0) < 4.0 * sigma);
    CHECK(sxx / n == doctest::Approx(0.5).epsilon(0.05));
}

TEST_CASE("vacuum fock input is a plain gaussian") {
    SchemeParams p{0.8, kPi / 3, 1.0, 0.0};
    const OutcomeSampler sampler(FockState{0}, p);
    CHECK(sampler.envelope_bound() == doctest::Approx(1.0));
    Rng rng(3);
    double sxx = 0;
    const int n = 50000;
    for (int i = 0; i < n; ++i) sxx += std::norm(sampler(rng));
    // E|z|^2 = 2 * 1/(2 eta) = 1/eta.
    CHECK(sxx / n == doctest::Approx(1.0 / 0.8).epsilon(0.05));
}

TEST_CASE("fock rejection sampler matches the radial law") {
    // T for |1> at full reflection and ideal detection: Q-function of |1>,
    // radial density 2 r^3 exp(-r^2) after integrating the angle.
    SchemeParams p{1.0, kPi / 2, 1.0, 0.0};
    const OutcomeSampler sampler(FockState{1}, p);
    CHECK(1.0 / sampler.envelope_bound() > 0.1);
    Rng rng(2024);
    const int n = 200000;
    const int bins = 20;
    const double r_max = 4.0;
    std::vector<double> counts(bins, 0.0);
    for (int i = 0; i < n; ++i) {
        const double r = std::abs(sampler(rng));
        const int bin = static_cast<int>(r / r_max * bins);
        if (bin < bins) counts[bin] += 1.0;
    }
    double chi2 = 0.0;
    int dof = 0;
    for (int b = 0; b < bins; ++b) {
        const double lo = r_max * b / bins, hi = r_max * (b + 1) / bins;
        // integral of 2 r^3 e^{-r^2}: -(r^2+1) e^{-r^2}
        const auto cdf = [](double r) { return -(r * r + 1.0) * std::exp(-r * r); };
        const double expect = n * (cdf(hi) - cdf(lo));
        if (expect < 10.0) continue;
        chi2 += (counts[b] - expect) * (counts[b] - expect) / expect;
        ++dof;
    }
    // chi^2 with ~19 dof: 5-sigma-ish ceiling.
    CHECK(chi2 < dof + 6.0 * std::sqrt(2.0 * dof));
}

TEST_CASE("acceptance stays practical for n up to 10") {
    for (int n : {2, 5, 10}) {
        for (double phi : {kPi / 6, kPi / 3, kPi / 2}) {
            const OutcomeSampler sampler(FockState{n}, SchemeParams{0.8, phi, 1.0, 0.0});
            CAPTURE(n); CAPTURE(phi);
            CHECK(1.0 / sampler.envelope_bound() > 0.1);
        }
    }
}

TEST_CASE("empirical fidelities agree with the closed forms") {
    SchemeParams p{1.0, kPi / 2, 1.0, 1.0};
    const Complex beta(1.0, 0.0);
    const RunConfig cfg{100000, 11, 1};
    const IdFidelityEstimates est = empirical_id_fidelities(beta, p, cfg);
    CHECK(std::abs(est.info.mean - 0.5) < 3.0 * est.info.std_error);
    CHECK(std::abs(est.disturbance.mean - 0.5) < 3.0 * est.disturbance.std_error);
    CHECK(est.info.trials == 100000);
}

TEST_CASE("degenerate estimate has zero variance") {
    SchemeParams p{1.0, kPi / 2, 0.0, 0.0};
    const IdFidelityEstimates est = empirical_id_fidelities({0, 0}, p, {5000, 5, 1});
    CHECK(est.info.mean == doctest::Approx(1.0));
    CHECK(est.info.std_error == doctest::Approx(0.0));
}

TEST_CASE("identical seeds are bit-exact across worker counts") {
    SchemeParams p{0.9, kPi / 3, 0.7, 0.5};
    const Complex beta(1.2, -0.3);
    const IdFidelityEstimates one = empirical_id_fidelities(beta, p, {60000, 123, 1});
    const IdFidelityEstimates four = empirical_id_fidelities(beta, p, {60000, 123, 4});
    const IdFidelityEstimates three = empirical_id_fidelities(beta, p, {60000, 123, 3});
    CHECK(one.info.mean == four.info.mean);
    CHECK(one.info.std_error == four.info.std_error);
    CHECK(one.disturbance.mean == four.disturbance.mean);
    CHECK(one.disturbance.mean == three.disturbance.mean);
    // And a different seed genuinely changes the result.
    const IdFidelityEstimates other = empirical_id_fidelities(beta, p, {60000, 124, 1});
    CHECK(one.info.mean != other.info.mean);
}

TEST_CASE("standard error scales as one over sqrt trials") {
    SchemeParams p{0.9, kPi / 3, 0.7, 0.5};
    const Complex beta(1.0, 0.0);
    std::vector<double> log_trials, log_se;
    for (std::uint64_t trials : {1000ULL, 10000ULL, 100000ULL, 1000000ULL}) {
        const IdFidelityEstimates est = empirical_id_fidelities(beta, p, {trials, 9, 2});
        log_trials.push_back(std::log10(static_cast<double>(trials)));
        log_se.push_back(std::log10(est.info.std_error));
    }
    // Least-squares slope over the four points.
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        mx += log_trials[i] / 4;
        my += log_se[i] / 4;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < 4; ++i) {
        sxy += (log_trials[i] - mx) * (log_se[i] - my);
        sxx += (log_trials[i] - mx) * (log_trials[i] - mx);
    }
    CHECK(sxy / sxx == doctest::Approx(-0.5).epsilon(0.1));
}

TEST_CASE("gaussian-ensemble run reproduces the averaged optimum") {
    SchemeParams p{1.0, kPi / 2, 0.5, 0.5};
    const IdFidelityEstimates est = empirical_id_fidelities_gaussian(1.0, p, {200000, 31, 2});
    CHECK(std::abs(est.info.mean - 2.0 / 3.0) < 3.0 * est.info.std_error);
    CHECK(std::abs(est.disturbance.mean - 2.0 / 3.0) < 3.0 * est.disturbance.std_error);
}

TEST_CASE("estimate histogram approaches the input Q-function") {
    // S = Q exactly at full reflection, ideal detection, kappa = 1.
    SchemeParams p{1.0, kPi / 2, 1.0, 0.0};
    const EstimateHistogram coarse =
        empirical_estimate_distribution(CoherentState{{0, 0}}, p, {20000, 17, 1});
    const EstimateHistogram fine =
        empirical_estimate_distribution(CoherentState{{0, 0}}, p, {400000, 17, 2});
    CHECK(fine.bhattacharyya > coarse.bhattacharyya - 0.005);
    CHECK(fine.bhattacharyya > 0.98);
    CHECK(fine.bhattacharyya <= 1.0 + 1e-9);
}

TEST_CASE("histogram statistic tracks the estimation fidelity for fock input") {
    const double kappa_opt = 1.0639;  // argmax of H for |1> at phi = pi/3, eta = 1
    SchemeParams p{1.0, kPi / 3, kappa_opt, 0.0};
    const InputState state = FockState{1};
    const double h_exact = oracle_fidelity(FidelityKind::Estimation, state, p);
    const EstimateHistogram hist = empirical_estimate_distribution(state, p, {1000000, 4, 4});
    CHECK(std::abs(hist.bhattacharyya - h_exact) < 0.02);
    // A detuned rescaling scores lower.
    SchemeParams detuned = p;
    detuned.kappa = 0.5;
    const EstimateHistogram worse = empirical_estimate_distribution(state, detuned, {200000, 4, 4});
    CHECK(worse.bhattacharyya < hist.bhattacharyya);
}

TEST_SUITE_END();
