#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include "homodyne/fidelities.hpp"
#include "homodyne/optimize.hpp"

namespace homodyne {

enum class CurveKind { IdCoherent, EdCoherent, EdFock, EdThermal };

std::string curve_kind_name(CurveKind kind);

struct CurveSpec {
    CurveKind curve = CurveKind::IdCoherent;
    double eta = 1.0;
    Ensemble ensemble = GaussianCoherentEnsemble{1.0};
    int phi_steps = 200;
    bool universal = false;
};

struct TradeoffPoint {
    double phi = 0.0;
    double x_fid = 0.0;
    double y_fid = 0.0;
    double kappa_opt = 0.0;
    double g_opt = 0.0;
};

/// Sweeps phi over a uniform grid up to pi/2 (phi_min = (pi/2)/phi_steps) and
/// evaluates the optimised - or universal - fidelity pair at each angle.
/// Non-universal curves are prepended with the analytic phi = 0 limit row;
/// universal protocols diverge there (kappa -> inf) and start at phi_min.
/// Numerical failures are rethrown with the offending phi attached.
std::vector<TradeoffPoint> generate_curve(const CurveSpec& spec);

/// Columns `phi,x_fid,y_fid,kappa_opt,g_opt`, 12 significant digits.
void write_csv(const std::vector<TradeoffPoint>& points, const std::filesystem::path& path);

/// Same fields plus a metadata header echoing the curve spec.
void write_json(const std::vector<TradeoffPoint>& points, const CurveSpec& spec,
                const std::filesystem::path& path);

/// Parses a file produced by write_json; round-trips bit-exactly.
std::vector<TradeoffPoint> read_points_json(const std::filesystem::path& path);

}  // namespace homodyne
