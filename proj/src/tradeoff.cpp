#include "homodyne/tradeoff.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>

#include <json.hpp>

namespace homodyne {

namespace {

constexpr double kPi = std::numbers::pi;

// (kappa*, g*) and the fidelity pair at one angle, per curve family.
TradeoffPoint evaluate_point(const CurveSpec& spec, double phi) {
    TradeoffPoint pt;
    pt.phi = phi;
    const double eta = spec.eta;
    if (spec.universal) {
        pt.kappa_opt = 1.0 / std::sin(phi);
        pt.g_opt = (1.0 - std::cos(phi)) / std::sin(phi);
        const FidelityPair pair = spec.curve == CurveKind::IdCoherent
                                      ? universal_id_fidelities(eta, phi)
                                      : universal_ed_fidelities(eta, phi);
        pt.x_fid = pair.x;
        pt.y_fid = pair.y;
        return pt;
    }
    switch (spec.curve) {
        case CurveKind::IdCoherent: {
            const double omega = std::get<GaussianCoherentEnsemble>(spec.ensemble).width;
            pt.kappa_opt = optimal_kappa_info(eta, phi, omega);
            pt.g_opt = optimal_g_disturbance(eta, phi, omega);
            const FidelityPair pair = avg_id_fidelities(eta, phi, omega, pt.kappa_opt, pt.g_opt);
            pt.x_fid = pair.x;
            pt.y_fid = pair.y;
            return pt;
        }
        case CurveKind::EdCoherent: {
            const double omega = std::get<GaussianCoherentEnsemble>(spec.ensemble).width;
            pt.kappa_opt = optimal_kappa_estimation(eta, phi, omega);
            pt.g_opt = optimal_g_distortion(eta, phi, omega);
            const FidelityPair pair = avg_ed_fidelities(eta, phi, omega, pt.kappa_opt, pt.g_opt);
            pt.x_fid = pair.x;
            pt.y_fid = pair.y;
            return pt;
        }
        case CurveKind::EdFock: {
            const int n = std::get<FockState>(std::get<InputState>(spec.ensemble)).n;
            SchemeParams p{eta, phi, 1.0, 0.0};
            const auto h_max = maximize_1d(
                [&](double kappa) {
                    SchemeParams q = p;
                    q.kappa = kappa;
                    return oracle_fidelity(FidelityKind::Estimation, FockState{n}, q);
                },
                Bracket{});
            const auto k_max = maximize_1d(
                [&](double gain) {
                    SchemeParams q = p;
                    q.gain = gain;
                    return oracle_fidelity(FidelityKind::Distortion, FockState{n}, q);
                },
                Bracket{});
            pt.kappa_opt = h_max.arg;
            pt.g_opt = k_max.arg;
            pt.x_fid = h_max.value;
            pt.y_fid = k_max.value;
            return pt;
        }
        case CurveKind::EdThermal: {
            const auto thermal = std::get<ThermalFockEnsemble>(spec.ensemble);
            const double nbar = thermal.mean_photons;
            const int trunc =
                thermal.n_trunc > 0 ? thermal.n_trunc : auto_thermal_truncation(nbar);
            if (trunc > kMaxFock || trunc < auto_thermal_truncation(nbar)) {
                std::ostringstream msg;
                msg << "thermal truncation " << trunc << " invalid for N = " << nbar;
                throw TruncationInsufficient(msg.str());
            }
            SchemeParams p{eta, phi, 1.0, 0.0};
            const auto thermal_sum = [&](FidelityKind kind, double value) {
                SchemeParams q = p;
                (kind == FidelityKind::Estimation ? q.kappa : q.gain) = value;
                double sum = 0.0;
                for (int n = 0; n <= trunc; ++n) {
                    sum += thermal_weight(nbar, n) * oracle_fidelity(kind, FockState{n}, q);
                }
                return sum;
            };
            const auto h_max = maximize_1d(
                [&](double kappa) { return thermal_sum(FidelityKind::Estimation, kappa); },
                Bracket{});
            const auto k_max = maximize_1d(
                [&](double gain) { return thermal_sum(FidelityKind::Distortion, gain); },
                Bracket{});
            pt.kappa_opt = h_max.arg;
            pt.g_opt = k_max.arg;
            pt.x_fid = h_max.value;
            pt.y_fid = k_max.value;
            return pt;
        }
    }
    throw std::logic_error("unreachable curve kind");
}

std::string format_digits(double value) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.12g", value);
    return buffer;
}

}  // namespace

std::string curve_kind_name(CurveKind kind) {
    switch (kind) {
        case CurveKind::IdCoherent: return "id-coherent";
        case CurveKind::EdCoherent: return "ed-coherent";
        case CurveKind::EdFock: return "ed-fock";
        case CurveKind::EdThermal: return "ed-thermal";
    }
    return "unknown";
}

std::vector<TradeoffPoint> generate_curve(const CurveSpec& spec) {
    if (spec.phi_steps < 2) {
        throw std::invalid_argument("phi_steps must be >= 2");
    }
    if (spec.universal &&
        (spec.curve == CurveKind::EdFock || spec.curve == CurveKind::EdThermal)) {
        throw std::invalid_argument("no universal protocol exists for number-state inputs");
    }
    std::vector<TradeoffPoint> points;
    points.reserve(spec.phi_steps + 1);
    const int start = spec.universal ? 1 : 0;  // universal kappa diverges at phi = 0
    for (int k = start; k <= spec.phi_steps; ++k) {
        const double phi = kPi / 2.0 * k / spec.phi_steps;
        try {
            points.push_back(evaluate_point(spec, phi));
        } catch (const QuadratureFailure& e) {
            std::ostringstream msg;
            msg << e.what() << " (while evaluating phi = " << phi << ")";
            throw QuadratureFailure(msg.str());
        } catch (const NoRealRootInRange& e) {
            std::ostringstream msg;
            msg << e.what() << " (while evaluating phi = " << phi << ")";
            throw NoRealRootInRange(msg.str());
        }
    }
    return points;
}

void write_csv(const std::vector<TradeoffPoint>& points, const std::filesystem::path& path) {
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << "phi,x_fid,y_fid,kappa_opt,g_opt\n";
    for (const auto& pt : points) {
        out << format_digits(pt.phi) << ',' << format_digits(pt.x_fid) << ','
            << format_digits(pt.y_fid) << ',' << format_digits(pt.kappa_opt) << ','
            << format_digits(pt.g_opt) << '\n';
    }
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

void write_json(const std::vector<TradeoffPoint>& points, const CurveSpec& spec,
                const std::filesystem::path& path) {
    nlohmann::json meta;
    meta["tool"] = "tradeoff";
    meta["version"] = "1.0.0";
    meta["curve"] = curve_kind_name(spec.curve);
    meta["eta"] = spec.eta;
    meta["phi_steps"] = spec.phi_steps;
    meta["universal"] = spec.universal;
    if (const auto* gc = std::get_if<GaussianCoherentEnsemble>(&spec.ensemble)) {
        meta["ensemble"] = {{"kind", "gaussian-coherent"}, {"omega", gc->width}};
    } else if (const auto* th = std::get_if<ThermalFockEnsemble>(&spec.ensemble)) {
        meta["ensemble"] = {{"kind", "thermal-fock"},
                            {"nbar", th->mean_photons},
                            {"n_trunc", th->n_trunc}};
    } else {
        const auto& state = std::get<InputState>(spec.ensemble);
        if (const auto* coh = std::get_if<CoherentState>(&state)) {
            meta["ensemble"] = {{"kind", "coherent"},
                                {"re", coh->amplitude.real()},
                                {"im", coh->amplitude.imag()}};
        } else {
            meta["ensemble"] = {{"kind", "fock"}, {"n", std::get<FockState>(state).n}};
        }
    }
    nlohmann::json root;
    root["metadata"] = meta;
    auto& arr = root["points"] = nlohmann::json::array();
    for (const auto& pt : points) {
        arr.push_back({{"phi", pt.phi},
                       {"x_fid", pt.x_fid},
                       {"y_fid", pt.y_fid},
                       {"kappa_opt", pt.kappa_opt},
                       {"g_opt", pt.g_opt}});
    }
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot open for writing: " + path.string());
    out << root.dump(2) << '\n';
    if (!out) throw std::runtime_error("write failed: " + path.string());
}

std::vector<TradeoffPoint> read_points_json(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot open for reading: " + path.string());
    nlohmann::json root;
    in >> root;
    std::vector<TradeoffPoint> points;
    for (const auto& item : root.at("points")) {
        TradeoffPoint pt;
        pt.phi = item.at("phi").get<double>();
        pt.x_fid = item.at("x_fid").get<double>();
        pt.y_fid = item.at("y_fid").get<double>();
        pt.kappa_opt = item.at("kappa_opt").get<double>();
        pt.g_opt = item.at("g_opt").get<double>();
        points.push_back(pt);
    }
    return points;
}

}  // namespace homodyne
