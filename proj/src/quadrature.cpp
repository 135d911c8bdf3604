#include "homodyne/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>
#include <sstream>

namespace homodyne {

namespace {

constexpr int kMaxRadialNodes = 1 << 13;
constexpr int kMaxAngularNodes = 1 << 12;

GaussLegendreRule make_rule(int n) {
    GaussLegendreRule rule;
    rule.abscissas.resize(n);
    rule.weights.resize(n);
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        // Newton iteration on the Legendre polynomial, standard recurrence.
        double z = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double pp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p1 = 1.0, p2 = 0.0;
            for (int j = 0; j < n; ++j) {
                const double p3 = p2;
                p2 = p1;
                p1 = ((2 * j + 1) * z * p2 - j * p3) / (j + 1);
            }
            pp = n * (z * p1 - p2) / (z * z - 1.0);
            const double z1 = z;
            z = z1 - p1 / pp;
            if (std::abs(z - z1) < 1e-15) break;
        }
        rule.abscissas[i] = -z;
        rule.abscissas[n - 1 - i] = z;
        rule.weights[i] = 2.0 / ((1.0 - z * z) * pp * pp);
        rule.weights[n - 1 - i] = rule.weights[i];
    }
    return rule;
}

}  // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    static std::mutex mutex;
    static std::map<int, GaussLegendreRule> cache;
    std::lock_guard lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, make_rule(n)).first;
    return it->second;
}

double gauss_legendre_integrate(const std::function<double(double)>& f, double a, double b, int n) {
    const auto& rule = gauss_legendre(n);
    const double mid = 0.5 * (a + b);
    const double halfwidth = 0.5 * (b - a);
    double sum = 0.0;
    for (int i = 0; i < n; ++i) {
        sum += rule.weights[i] * f(mid + halfwidth * rule.abscissas[i]);
    }
    return sum * halfwidth;
}

double integrate_radial(const std::function<double(double)>& f, double radius,
                        const QuadratureSpec& spec) {
    const double cutoff = spec.radius > 0.0 ? spec.radius : radius;
    const auto weighted = [&f](double r) { return f(r) * r; };
    double previous = 0.0;
    bool have_previous = false;
    for (int n = std::max(spec.nodes, 4); n <= kMaxRadialNodes; n *= 2) {
        const double value = 2.0 * std::numbers::pi * gauss_legendre_integrate(weighted, 0.0, cutoff, n);
        if (have_previous &&
            std::abs(value - previous) <= spec.tolerance * std::max(1.0, std::abs(value))) {
            return value;
        }
        previous = value;
        have_previous = true;
    }
    std::ostringstream msg;
    msg << "radial quadrature did not converge to " << spec.tolerance << " within "
        << kMaxRadialNodes << " nodes (cutoff " << cutoff << ")";
    throw QuadratureFailure(msg.str());
}

double integrate_plane(const std::function<double(Complex)>& f, Complex center, double radius,
                       const QuadratureSpec& spec) {
    const double cutoff = spec.radius > 0.0 ? spec.radius : radius;
    const auto level_value = [&](int n_radial, int n_angular) {
        const auto& rule = gauss_legendre(n_radial);
        const double dtheta = 2.0 * std::numbers::pi / n_angular;
        double sum = 0.0;
        for (int i = 0; i < n_radial; ++i) {
            const double r = 0.5 * cutoff * (rule.abscissas[i] + 1.0);
            const double wr = 0.5 * cutoff * rule.weights[i] * r;
            double ring = 0.0;
            for (int j = 0; j < n_angular; ++j) {
                const double theta = dtheta * (j + 0.5);
                ring += f(center + Complex(r * std::cos(theta), r * std::sin(theta)));
            }
            sum += wr * ring * dtheta;
        }
        return sum;
    };

    int n_radial = std::max(spec.nodes, 8);
    int n_angular = std::max(spec.nodes, 32);
    double previous = level_value(n_radial, n_angular);
    while (n_radial < kMaxRadialNodes && n_angular < kMaxAngularNodes) {
        n_radial *= 2;
        n_angular *= 2;
        const double value = level_value(n_radial, n_angular);
        if (std::abs(value - previous) <= spec.tolerance * std::max(1.0, std::abs(value))) {
            return value;
        }
        previous = value;
    }
    std::ostringstream msg;
    msg << "plane quadrature did not converge to " << spec.tolerance << " (cutoff " << cutoff
        << ", center " << center.real() << "+" << center.imag() << "i)";
    throw QuadratureFailure(msg.str());
}

}  // namespace homodyne
