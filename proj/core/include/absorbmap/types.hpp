#ifndef ABSORBMAP_TYPES_HPP
#define ABSORBMAP_TYPES_HPP

#include <Eigen/Dense>
#include <stdexcept>
#include <string>

namespace absorbmap {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Markov time t is too large for the linearized transition matrix to be
/// column-stochastic with non-negative entries.
struct InfeasibleMarkovTime : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The chain has no unique stationary distribution (more than one closed
/// communicating class, or none reachable).
struct NotRegular : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct NotStronglyConnected : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// A linear system that must be solvable (e.g. I - Q for a proper absorbing
/// chain) is numerically singular.
struct NonConvergent : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// rank(X) != rank(X^2); the group inverse does not exist.
struct RankDeficiencyMismatch : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct SpectralRadiusTooLarge : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// The staged schedule ran out of eligible community bridges.
struct ExhaustedBridges : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Bad experiment name or malformed command configuration.
struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

} // namespace absorbmap

#endif
