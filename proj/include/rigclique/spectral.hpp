#pragma once

#include <vector>

#include <Eigen/Core>

#include "rigclique/vertex_set.hpp"

namespace rigclique {

inline constexpr double kDefaultEigenTolerance = 1e-8;

/// Two algebraically largest eigenvalues of a symmetric matrix and a unit
/// eigenvector for the second one.
struct SpectralResult {
  double lambda1 = 0.0;
  double lambda2 = 0.0;
  Eigen::VectorXd x2;
  /// ||A x2 - lambda2 x2||_2
  double residual = 0.0;
};

/// Computes lambda1 >= lambda2 (counting multiplicity) and an eigenvector x2
/// with ||A x2 - lambda2 x2|| <= tol.
///
/// The matrix is reduced to tridiagonal form, the tridiagonal spectrum is
/// found by implicit QR, and x2 comes from inverse iteration on the
/// tridiagonal system (kept orthogonal to the lambda1 direction, so a repeated
/// top eigenvalue still yields a valid second vector). If the refined vector
/// misses the tolerance the full eigendecomposition is used instead.
///
/// Throws InputError for non-square, asymmetric or d < 2 input, and
/// NumericError (carrying the best residual seen) when no path converges.
SpectralResult second_eigenpair(const Eigen::MatrixXd& a, double tol = kDefaultEigenTolerance);

/// Local vertex ids sorted by |x2[i]| descending, ascending id on ties.
std::vector<Vertex> rank_by_x2(const SpectralResult& result);
std::vector<Vertex> rank_by_magnitude(const Eigen::VectorXd& x);

}  // namespace rigclique
