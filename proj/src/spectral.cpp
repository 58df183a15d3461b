#include "rigclique/spectral.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include <Eigen/Eigenvalues>

#include "rigclique/errors.hpp"

namespace rigclique {

namespace {

using Eigen::Index;
using Eigen::VectorXd;

// LU factorization with partial pivoting of (T - shift I) for a symmetric
// tridiagonal T, laid out as in LAPACK's dgttrf. Pivots smaller than `tiny`
// are nudged to +-tiny so the near-singular shifted system stays solvable,
// which is exactly what inverse iteration wants.
class ShiftedTridiagonalLU {
 public:
  ShiftedTridiagonalLU(const VectorXd& diag, const VectorXd& off, double shift, double tiny)
      : n_(diag.size()), dl_(off), d_(diag.array() - shift), du_(off), du2_(VectorXd::Zero(n_)),
        pivot_(static_cast<std::size_t>(n_), false) {
    auto guard = [tiny](double& x) {
      if (std::abs(x) < tiny) x = std::copysign(tiny, x);
    };
    for (Index i = 0; i + 1 < n_; ++i) {
      if (std::abs(d_[i]) >= std::abs(dl_[i])) {
        guard(d_[i]);
        const double fact = dl_[i] / d_[i];
        dl_[i] = fact;
        d_[i + 1] -= fact * du_[i];
      } else {
        const double fact = d_[i] / dl_[i];
        d_[i] = dl_[i];
        dl_[i] = fact;
        const double temp = du_[i];
        du_[i] = d_[i + 1];
        d_[i + 1] = temp - fact * d_[i + 1];
        if (i + 2 < n_) {
          du2_[i] = du_[i + 1];
          du_[i + 1] = -fact * du_[i + 1];
        }
        pivot_[static_cast<std::size_t>(i)] = true;
      }
    }
    guard(d_[n_ - 1]);
  }

  void solve_in_place(VectorXd& b) const {
    for (Index i = 0; i + 1 < n_; ++i) {
      if (!pivot_[static_cast<std::size_t>(i)]) {
        b[i + 1] -= dl_[i] * b[i];
      } else {
        const double temp = b[i];
        b[i] = b[i + 1];
        b[i + 1] = temp - dl_[i] * b[i];
      }
    }
    b[n_ - 1] /= d_[n_ - 1];
    if (n_ > 1) b[n_ - 2] = (b[n_ - 2] - du_[n_ - 2] * b[n_ - 1]) / d_[n_ - 2];
    for (Index i = n_ - 3; i >= 0; --i) b[i] = (b[i] - du_[i] * b[i + 1] - du2_[i] * b[i + 2]) / d_[i];
  }

 private:
  Index n_;
  VectorXd dl_, d_, du_, du2_;
  std::vector<bool> pivot_;
};

VectorXd tridiagonal_times(const VectorXd& diag, const VectorXd& off, const VectorXd& y) {
  const Index n = diag.size();
  VectorXd out = diag.cwiseProduct(y);
  for (Index i = 0; i + 1 < n; ++i) {
    out[i] += off[i] * y[i + 1];
    out[i + 1] += off[i] * y[i];
  }
  return out;
}

// Deterministic start vector with no special structure (SplitMix64 stream).
VectorXd start_vector(Index n) {
  VectorXd v(n);
  std::uint64_t state = 0x9E3779B97F4A7C15ULL;
  for (Index i = 0; i < n; ++i) {
    state += 0x9E3779B97F4A7C15ULL;
    std::uint64_t z = state;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    z ^= z >> 31;
    v[i] = 0.5 + static_cast<double>(z >> 11) * 0x1.0p-53;
  }
  return v;
}

void project_out(VectorXd& y, const VectorXd* against) {
  if (against) y -= against->dot(y) * *against;
}

// Inverse iteration for the eigenvector of the tridiagonal (diag, off) at a
// known eigenvalue, optionally orthogonal to `against` (unit vector).
VectorXd tridiagonal_eigenvector(const VectorXd& diag, const VectorXd& off, double lambda,
                                 const VectorXd* against, double scale, std::size_t max_iters) {
  const Index n = diag.size();
  const double eps = std::numeric_limits<double>::epsilon();
  const ShiftedTridiagonalLU lu(diag, off, lambda, eps * scale);
  VectorXd y = start_vector(n);
  project_out(y, against);
  y.normalize();
  const double target = 4.0 * eps * scale * std::sqrt(static_cast<double>(n));
  for (std::size_t it = 0; it < max_iters; ++it) {
    lu.solve_in_place(y);
    project_out(y, against);
    const double norm = y.norm();
    if (!(norm > 0.0) || !std::isfinite(norm)) break;
    y /= norm;
    const double res = (tridiagonal_times(diag, off, y) - lambda * y).norm();
    if (res <= target && it >= 1) break;
  }
  return y;
}

double residual_of(const Eigen::MatrixXd& a, const VectorXd& x, double lambda) {
  return (a * x - lambda * x).norm();
}

SpectralResult full_decomposition(const Eigen::MatrixXd& a) {
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(a, Eigen::ComputeEigenvectors);
  if (solver.info() != Eigen::Success)
    throw NumericError("symmetric eigensolver did not converge",
                       std::numeric_limits<double>::infinity());
  const Index d = a.rows();
  SpectralResult r;
  r.lambda1 = solver.eigenvalues()[d - 1];
  r.lambda2 = solver.eigenvalues()[d - 2];
  r.x2 = solver.eigenvectors().col(d - 2).normalized();
  r.residual = residual_of(a, r.x2, r.lambda2);
  return r;
}

}  // namespace

SpectralResult second_eigenpair(const Eigen::MatrixXd& a, double tol) {
  if (a.rows() != a.cols()) throw InputError("second_eigenpair: matrix is not square");
  const Index d = a.rows();
  if (d < 2) throw InputError("second_eigenpair: dimension must be >= 2, got " + std::to_string(d));
  if (!(tol > 0.0)) throw InputError("second_eigenpair: tolerance must be positive");
  for (Index j = 0; j < d; ++j)
    for (Index i = j + 1; i < d; ++i)
      if (a(i, j) != a(j, i)) throw InputError("second_eigenpair: matrix is not symmetric");

  // Budget for the tridiagonal inverse iteration; in practice it converges in
  // two or three sweeps.
  const auto budget = static_cast<std::size_t>(300 * d);
  double best_residual = std::numeric_limits<double>::infinity();

  Eigen::Tridiagonalization<Eigen::MatrixXd> tri(a);
  const VectorXd diag = tri.diagonal();
  const VectorXd off = tri.subDiagonal();
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> values;
  values.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
  if (values.info() == Eigen::Success) {
    SpectralResult r;
    r.lambda1 = values.eigenvalues()[d - 1];
    r.lambda2 = values.eigenvalues()[d - 2];
    const double scale = std::max({1.0, std::abs(r.lambda1), std::abs(values.eigenvalues()[0])});
    const std::size_t iters = std::min<std::size_t>(budget, 8);
    const VectorXd y1 = tridiagonal_eigenvector(diag, off, r.lambda1, nullptr, scale, iters);
    const VectorXd y2 = tridiagonal_eigenvector(diag, off, r.lambda2, &y1, scale, iters);
    r.x2 = (tri.matrixQ() * y2).normalized();
    r.residual = residual_of(a, r.x2, r.lambda2);
    if (r.residual <= tol) return r;
    best_residual = r.residual;
  }

  SpectralResult r = full_decomposition(a);
  if (r.residual <= tol) return r;
  best_residual = std::min(best_residual, r.residual);
  throw NumericError("second eigenpair residual " + std::to_string(best_residual) +
                         " exceeds tolerance " + std::to_string(tol),
                     best_residual);
}

std::vector<Vertex> rank_by_magnitude(const VectorXd& x) {
  std::vector<Vertex> order(static_cast<std::size_t>(x.size()));
  std::iota(order.begin(), order.end(), Vertex{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](Vertex a, Vertex b) { return std::abs(x[a]) > std::abs(x[b]); });
  return order;
}

std::vector<Vertex> rank_by_x2(const SpectralResult& result) { return rank_by_magnitude(result.x2); }

}  // namespace rigclique
