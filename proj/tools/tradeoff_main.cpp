// Command-line front end: optimised trade-off curve sweeps, the validation
// battery, and Monte Carlo consistency runs, exported as CSV or JSON.
//
// Exit codes: 0 success, 1 validation failure, 2 usage error, 3 numerical
// failure.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "homodyne/montecarlo.hpp"
#include "homodyne/validation.hpp"

namespace {

namespace fs = std::filesystem;
using namespace homodyne;

std::string format_value(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%g", value);
    return buffer;
}

int run_curve(const std::string& curve_name, double eta, double omega,
              const std::vector<double>& nbars, const std::vector<int>& fock_ns, bool universal,
              int steps, const std::string& format, const std::string& out) {
    CurveSpec spec;
    spec.eta = eta;
    spec.phi_steps = steps;
    spec.universal = universal;

    struct Job {
        CurveSpec spec;
        fs::path path;
    };
    std::vector<Job> jobs;
    const std::string extension = format == "json" ? ".json" : ".csv";

    const auto batch_path = [&](const std::string& stem) {
        fs::path dir(out);
        fs::create_directories(dir);
        return dir / (stem + extension);
    };

    if (curve_name == "id-coherent" || curve_name == "ed-coherent") {
        spec.curve = curve_name == "id-coherent" ? CurveKind::IdCoherent : CurveKind::EdCoherent;
        spec.ensemble = GaussianCoherentEnsemble{omega};
        jobs.push_back({spec, fs::path(out)});
    } else if (curve_name == "ed-fock") {
        if (fock_ns.empty()) {
            std::cerr << "ed-fock requires --fock-n\n";
            return 2;
        }
        spec.curve = CurveKind::EdFock;
        for (int n : fock_ns) {
            spec.ensemble = InputState{FockState{n}};
            const fs::path path =
                fock_ns.size() == 1
                    ? fs::path(out)
                    : batch_path("ed_fock_n" + std::to_string(n) + "_eta" + format_value(eta));
            jobs.push_back({spec, path});
        }
    } else if (curve_name == "ed-thermal") {
        if (nbars.empty()) {
            std::cerr << "ed-thermal requires --nbar\n";
            return 2;
        }
        spec.curve = CurveKind::EdThermal;
        for (double nbar : nbars) {
            spec.ensemble = ThermalFockEnsemble{nbar, 0};
            const fs::path path =
                nbars.size() == 1
                    ? fs::path(out)
                    : batch_path("ed_thermal_N" + format_value(nbar) + "_eta" + format_value(eta));
            jobs.push_back({spec, path});
        }
    } else {
        std::cerr << "unknown curve '" << curve_name << "'\n";
        return 2;
    }

    for (const auto& job : jobs) {
        const auto points = generate_curve(job.spec);
        if (format == "json") {
            write_json(points, job.spec, job.path);
        } else {
            write_csv(points, job.path);
        }
        std::cout << curve_kind_name(job.spec.curve) << ": " << points.size() << " points -> "
                  << job.path.string() << "\n";
    }
    return 0;
}

int run_validate() {
    const ValidationReport report = run_validation();
    for (const auto& check : report.checks) {
        std::cout << (check.passed ? "PASS" : "FAIL") << "  " << check.name << "  ["
                  << check.detail << "]\n";
    }
    if (!report.all_passed()) {
        std::cout << "validation FAILED\n";
        return 1;
    }
    std::cout << "all checks passed\n";
    return 0;
}

int run_mc(std::uint64_t trials, std::uint64_t seed, int workers, double omega) {
    SchemeParams p{1.0, std::numbers::pi / 2, 0.5, 0.5};
    const CheckResult mc = check_montecarlo_consistency(trials, seed);
    std::cout << (mc.passed ? "PASS" : "FAIL") << "  " << mc.name << "  [" << mc.detail << "]\n";

    if (omega > 0.0) {
        p.kappa = optimal_kappa_info(1.0, p.phi, omega);
        p.gain = optimal_g_disturbance(1.0, p.phi, omega);
        const RunConfig cfg{trials, seed, workers};
        const IdFidelityEstimates est = empirical_id_fidelities_gaussian(omega, p, cfg);
        const FidelityPair exact = avg_id_fidelities(1.0, p.phi, omega, p.kappa, p.gain);
        std::printf("ensemble run (Omega=%g): Gbar = %.6f +- %.6f (analytic %.6f), "
                    "Fbar = %.6f +- %.6f (analytic %.6f)\n",
                    omega, est.info.mean, est.info.std_error, exact.x, est.disturbance.mean,
                    est.disturbance.std_error, exact.y);
    }
    return mc.passed ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Trade-off curves for conditional double-homodyne measurement with feed-forward"};
    app.require_subcommand(1);

    std::string curve_name = "id-coherent";
    double eta = 1.0;
    double omega = 1.0;
    std::vector<double> nbars;
    std::vector<int> fock_ns;
    bool universal = false;
    int steps = 200;
    std::string format = "csv";
    std::string out = "curve.csv";
    std::uint64_t trials = 100000;
    std::uint64_t seed = 1;
    int workers = 1;

    auto* curve = app.add_subcommand("curve", "generate an optimised trade-off curve");
    curve->add_option("--curve", curve_name,
                      "id-coherent | ed-coherent | ed-fock | ed-thermal");
    curve->add_option("--eta", eta, "detector quantum efficiency in (0, 1]");
    curve->add_option("--omega", omega, "width of the Gaussian coherent ensemble");
    curve->add_option("--nbar", nbars, "thermal mean photon number (repeatable)");
    curve->add_option("--fock-n", fock_ns, "number-state input (repeatable)");
    curve->add_flag("--universal", universal, "use the amplitude-independent protocol");
    curve->add_option("--steps", steps, "number of phi grid points");
    curve->add_option("--format", format, "csv | json")
        ->check(CLI::IsMember({"csv", "json"}));
    curve->add_option("--out", out, "output file (or directory for batches)");

    auto* validate = app.add_subcommand("validate", "run the analytic validation battery");
    (void)validate;

    auto* mc = app.add_subcommand("mc", "Monte Carlo consistency battery");
    mc->add_option("--trials", trials, "trials per grid point");
    mc->add_option("--seed", seed, "master RNG seed");
    mc->add_option("--workers", workers, "worker threads");
    mc->add_option("--omega", omega, "also run a Gaussian-ensemble estimate");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (app.got_subcommand("curve")) {
            return run_curve(curve_name, eta, omega, nbars, fock_ns, universal, steps, format, out);
        }
        if (app.got_subcommand("validate")) {
            return run_validate();
        }
        if (app.got_subcommand("mc")) {
            return run_mc(trials, seed, workers, mc->count("--omega") ? omega : 0.0);
        }
    } catch (const QuadratureFailure& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const NoRealRootInRange& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const TruncationInsufficient& e) {
        std::cerr << "numerical failure: " << e.what() << "\n";
        return 3;
    } catch (const std::invalid_argument& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
