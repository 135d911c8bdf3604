#pragma once

#include "homodyne/phase_space.hpp"

namespace homodyne {

/// Parameters of the conditional double-homodyne scheme with feed-forward.
///   eta   - detector quantum efficiency, in (0, 1]
///   phi   - beam-splitter angle, in [0, pi/2]; transmissivity tau = cos^2(phi)
///   kappa - inference rescaling applied to the raw outcome, >= 0
///   gain  - feed-forward gain g multiplying the outcome before displacement, >= 0
struct SchemeParams {
    double eta = 1.0;
    double phi = 0.0;
    double kappa = 1.0;
    double gain = 0.0;

    /// Throws std::invalid_argument when a field is out of range.
    void check() const;
};

/// cos(phi) + g sin(phi): the amplitude rescaling between input and output plane.
double feedforward_scale(const SchemeParams& p);

/// Ordering parameters of the three phase-space maps realised by the scheme:
///   s1 for the outcome distribution, s2 for the output P-density, s3 for the
///   output Q-function. Always s1 <= -1, s2 <= 1 (= 1 iff g = 0), s3 <= -1.
struct OrderingTriple {
    double s1;
    double s2;
    double s3;
};

/// s1 = 1 - 2/(eta sin^2 phi)          (-inf at phi = 0)
/// s2 = 1 - 2 g^2 / (eta c^2)          with c = cos(phi) + g sin(phi)
/// s3 = 1 - 2 (eta + g^2) / (eta c^2)  (= s2 - 2/c^2)
/// Throws DegenerateGeometry when c = 0 (phi = pi/2 with g = 0).
OrderingTriple ordering_params(const SchemeParams& p);

/// Probability density of the raw complex outcome z. For phi > 0 this is
/// (1/sin^2 phi) W_{s1}(z / sin phi); at phi = 0 only reflected vacuum is
/// measured and the density is the heterodyne law (eta/pi) exp(-eta |z|^2).
double outcome_density(const InputState& state, const SchemeParams& p, Complex z);

/// Glauber P-density of the averaged output state:
/// (1/c^2) W_{s2}(xi / c). Throws DistributionalP when s2 >= 1 (g = 0), where
/// the P-function is a delta or worse, and DegenerateGeometry when c = 0.
double output_p_density(const InputState& state, const SchemeParams& p, Complex xi);

/// Q-function of the averaged output state: (1/c^2) W_{s3}(z / c).
/// Nonnegative and normalised. At c = 0 (full reflection, no feed-forward)
/// the output is vacuum and the vacuum Q-function is returned.
double output_q(const InputState& state, const SchemeParams& p, Complex z);

}  // namespace homodyne
