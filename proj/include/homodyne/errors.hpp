#pragma once

#include <stdexcept>
#include <string>

namespace homodyne {

/// Requested an s-ordered quasi-probability at or beyond the singular
/// P-ordering (s >= 1), where no pointwise density exists.
struct OrderingOutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

/// The adaptive quadrature did not converge within the configured limits.
struct QuadratureFailure : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// cos(phi) + g*sin(phi) = 0: the output-plane rescaling collapses and the
/// s2/s3 ordering parameters are undefined.
struct DegenerateGeometry : std::domain_error {
    using std::domain_error::domain_error;
};

/// The output P-function is a delta or worse (s2 >= 1, i.e. g = 0); callers
/// must use the output Q-function instead.
struct DistributionalP : std::domain_error {
    using std::domain_error::domain_error;
};

struct BracketInvalid : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Thermal tail mass beyond the configured truncation exceeds the budget.
struct TruncationInsufficient : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Rejection sampler acceptance collapsed below the stall threshold.
struct RejectionStall : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NoRealRootInRange : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Argument outside the reachable range of a trade-off relation.
struct OutOfRange : std::domain_error {
    using std::domain_error::domain_error;
};

}  // namespace homodyne
