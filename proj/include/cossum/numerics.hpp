#pragma once

// Dense linear-algebra kernels shared by the solvers. Thin wrappers over Eigen
// that fix the conventions the algorithms rely on: descending singular values,
// minimum-norm least squares, and explicit handling of infinite generalized
// eigenvalues.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <span>
#include <stdexcept>
#include <vector>

#include <Eigen/Dense>
#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace cossum {

using Matrix = Eigen::MatrixXd;
using Vector = Eigen::VectorXd;
using Complex = std::complex<double>;

struct SvdResult {
  Matrix u;      // left singular vectors (columns)
  Vector sigma;  // descending, min(rows, cols) entries
  Matrix v;      // right singular vectors (columns); A = U diag(sigma) V^T
};

enum class SvdVectors { full, thin, none };

namespace detail {

inline void require_finite(const Matrix& a, const char* who) {
  if (!a.allFinite()) throw std::invalid_argument(std::string(who) + ": non-finite entries");
}

}  // namespace detail

/// SVD with descending singular values. Narrow matrices (at most 64 columns or
/// rows) go through one-sided Jacobi, which resolves tiny singular values to
/// high relative accuracy; larger ones use divide and conquer.
inline SvdResult svd(const Matrix& a, SvdVectors vectors = SvdVectors::full) {
  detail::require_finite(a, "svd");
  unsigned int options = 0;
  if (vectors == SvdVectors::full) options = Eigen::ComputeFullU | Eigen::ComputeFullV;
  if (vectors == SvdVectors::thin) options = Eigen::ComputeThinU | Eigen::ComputeThinV;
  SvdResult out;
  if (std::min(a.rows(), a.cols()) <= 64) {
    Eigen::JacobiSVD<Matrix, Eigen::ColPivHouseholderQRPreconditioner> solver(a, options);
    out.sigma = solver.singularValues();
    if (vectors != SvdVectors::none) {
      out.u = solver.matrixU();
      out.v = solver.matrixV();
    }
  } else {
    Eigen::BDCSVD<Matrix> solver(a, options);
    out.sigma = solver.singularValues();
    if (vectors != SvdVectors::none) {
      out.u = solver.matrixU();
      out.v = solver.matrixV();
    }
  }
  return out;
}

/// Left singular vectors only (thin), for callers that need just the column space.
inline SvdResult svd_left(const Matrix& a) {
  detail::require_finite(a, "svd");
  SvdResult out;
  if (std::min(a.rows(), a.cols()) <= 64) {
    Eigen::JacobiSVD<Matrix, Eigen::ColPivHouseholderQRPreconditioner> solver(a,
                                                                             Eigen::ComputeThinU);
    out.sigma = solver.singularValues();
    out.u = solver.matrixU();
  } else {
    Eigen::BDCSVD<Matrix> solver(a, Eigen::ComputeThinU);
    out.sigma = solver.singularValues();
    out.u = solver.matrixU();
  }
  return out;
}

/// Minimum-norm least-squares solution of A x = b.
inline Vector least_squares(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("least_squares: dimension mismatch");
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("least_squares: empty system");
  return a.completeOrthogonalDecomposition().solve(b);
}

/// Minimum-norm least-squares solution of A X = B (column by column), i.e. pinv(A) B.
inline Matrix least_squares(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("least_squares: dimension mismatch");
  if (a.rows() == 0 || a.cols() == 0) throw std::invalid_argument("least_squares: empty system");
  return a.completeOrthogonalDecomposition().solve(b);
}

/// All eigenvalues of a square matrix, with multiplicity.
inline std::vector<Complex> eig_dense(const Matrix& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("eig_dense: matrix is not square");
  detail::require_finite(a, "eig_dense");
  if (a.rows() == 0) return {};
  Eigen::EigenSolver<Matrix> solver(a, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_dense: no convergence");
  const auto& values = solver.eigenvalues();
  return {values.data(), values.data() + values.size()};
}

struct PencilOptions {
  double beta_tol = 1e-12;         // |beta| <= beta_tol (|alpha| + |beta|) means infinite
  double magnitude_limit = 1e12;   // |alpha / beta| above this also counts as infinite
};

struct PencilSpectrum {
  std::vector<Complex> finite;
  std::size_t infinite = 0;
};

/// Generalized eigenvalues of A v = lambda B v, split into finite values and
/// a count of infinite ones.
inline PencilSpectrum eig_pencil(const Matrix& a, const Matrix& b, PencilOptions options = {}) {
  if (a.rows() != a.cols() || b.rows() != b.cols() || a.rows() != b.rows())
    throw std::invalid_argument("eig_pencil: size mismatch");
  detail::require_finite(a, "eig_pencil");
  detail::require_finite(b, "eig_pencil");
  PencilSpectrum out;
  if (a.rows() == 0) return out;
  Eigen::GeneralizedEigenSolver<Matrix> solver(a, b, false);
  if (solver.info() != Eigen::Success) throw std::runtime_error("eig_pencil: no convergence");
  const auto& alphas = solver.alphas();
  const auto& betas = solver.betas();
  for (Eigen::Index i = 0; i < alphas.size(); ++i) {
    const double abs_alpha = std::abs(alphas(i));
    const double abs_beta = std::abs(betas(i));
    if (abs_beta <= options.beta_tol * (abs_alpha + abs_beta) ||
        abs_alpha > options.magnitude_limit * abs_beta) {
      ++out.infinite;
      continue;
    }
    out.finite.push_back(alphas(i) / betas(i));
  }
  return out;
}

/// Smallest M with sigma_{M+1} < eps sigma_1 (1-based); the length if none.
inline std::size_t numerical_rank(std::span<const double> sigma, double eps) {
  if (sigma.empty() || sigma[0] == 0.0) return 0;
  for (std::size_t m = 1; m < sigma.size(); ++m)
    if (sigma[m] < eps * sigma[0]) return m;
  return sigma.size();
}

inline std::size_t numerical_rank(const Vector& sigma, double eps) {
  return numerical_rank(std::span<const double>(sigma.data(), static_cast<std::size_t>(sigma.size())), eps);
}

}  // namespace cossum
