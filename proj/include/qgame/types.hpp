#ifndef QGAME_TYPES_HPP
#define QGAME_TYPES_HPP

#include <Eigen/Dense>
#include <complex>

namespace qgame {

using Complex = std::complex<double>;

/// Dense square complex matrix; the universal carrier for every operator
/// in the engine. Dimension is rows() == cols(); operations validate
/// squareness and finiteness rather than wrapping the type.
using OperatorMatrix = Eigen::MatrixXcd;

using StateVector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;

/// Absolute tolerance for algebraic identities at desk scale.
inline constexpr double kAlgebraTol = 1e-12;

/// Relative tolerance for decomposition residuals.
inline constexpr double kDecompositionTol = 1e-10;

/// Amplitude threshold above which a state is considered to leak onto
/// the truncation boundary.
inline constexpr double kBoundaryLeakTol = 1e-12;

} // namespace qgame

#endif
