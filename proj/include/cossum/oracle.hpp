#pragma once

// Direct Prony-type reconstruction for exact data with known order M. The
// characteristic polynomial p(z) = prod_j (z - cos(phi_j h)) is expanded in the
// Chebyshev basis; its coefficients solve a Toeplitz+Hankel system built from
// the first 2M samples and its roots come from the colleague matrix.
//
// Numerically this is the least stable of the solvers. It serves as an
// independent reference for the subspace and rational methods.

#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cossum/error.hpp"
#include "cossum/model.hpp"
#include "cossum/numerics.hpp"
#include "cossum/recovery.hpp"

namespace cossum {

/// p(z) = sum_l coeffs[l] T_l(z).
struct ChebyshevPoly {
  std::vector<double> coeffs;

  std::size_t degree() const noexcept { return coeffs.empty() ? 0 : coeffs.size() - 1; }
};

/// Clenshaw recurrence.
inline double chebyshev_eval(const ChebyshevPoly& p, double z) {
  double b1 = 0.0, b2 = 0.0;
  for (std::size_t l = p.coeffs.size(); l-- > 1;) {
    const double b0 = p.coeffs[l] + 2.0 * z * b1 - b2;
    b2 = b1;
    b1 = b0;
  }
  const double c0 = p.coeffs.empty() ? 0.0 : p.coeffs[0];
  return c0 + z * b1 - b2;
}

/// Monic prod_j (z - r_j) in the T basis, built with z T_0 = T_1 and
/// z T_l = (T_{l+1} + T_{l-1}) / 2. The leading coefficient is 2^{1-M}.
inline ChebyshevPoly chebyshev_from_roots(const std::vector<double>& roots) {
  std::vector<double> c{1.0};
  for (double r : roots) {
    std::vector<double> next(c.size() + 1, 0.0);
    for (std::size_t l = 0; l < c.size(); ++l) {
      if (l == 0) {
        next[1] += c[0];
      } else {
        next[l + 1] += 0.5 * c[l];
        next[l - 1] += 0.5 * c[l];
      }
      next[l] -= r * c[l];
    }
    c = std::move(next);
  }
  return {std::move(c)};
}

/// Colleague matrix C with det(zI - C) = p(z) / 2^{M-1}. Column l holds the
/// T-coefficients of z T_l reduced modulo p.
inline Matrix chebyshev_companion(const ChebyshevPoly& p) {
  const std::size_t m = p.degree();
  if (m < 1) throw std::invalid_argument("chebyshev_companion: degree must be at least 1");
  const double lead = p.coeffs[m];
  if (lead == 0.0) throw std::invalid_argument("chebyshev_companion: leading coefficient is zero");
  const auto n = static_cast<Eigen::Index>(m);
  Matrix c = Matrix::Zero(n, n);
  if (m == 1) {
    c(0, 0) = -p.coeffs[0] / lead;
    return c;
  }
  c(1, 0) = 1.0;
  for (Eigen::Index l = 1; l < n; ++l) {
    c(l - 1, l) += 0.5;
    if (l + 1 < n) c(l + 1, l) += 0.5;
  }
  for (Eigen::Index i = 0; i < n; ++i) c(i, n - 1) -= p.coeffs[static_cast<std::size_t>(i)] / (2.0 * lead);
  return c;
}

/// Symmetrized sample matrix (f_{m+l+shift} + f_{m-l+shift})_{m,l < order}
/// using the even extension of the samples.
inline Matrix prony_matrix(const SampleVector& samples, std::size_t order, std::ptrdiff_t shift = 0) {
  const auto n = static_cast<Eigen::Index>(order);
  Matrix a(n, n);
  for (Eigen::Index m = 0; m < n; ++m)
    for (Eigen::Index l = 0; l < n; ++l)
      a(m, l) = samples.at(m + l + shift) + samples.at(m - l + shift);
  return a;
}

/// Chebyshev coefficients p_0..p_M of the characteristic polynomial from the
/// system sum_l p_l (f_{m+l} + f_{m-l}) = 0, m < M, with p_M = 2^{1-M}.
inline ChebyshevPoly prony_polynomial(const SampleVector& samples, std::size_t order) {
  if (order < 1) throw std::invalid_argument("prony: order must be at least 1");
  if (samples.size() < 2 * order) throw std::invalid_argument("prony: need N >= 2M samples");
  const auto n = static_cast<Eigen::Index>(order);
  const double lead = std::ldexp(1.0, 1 - static_cast<int>(order));
  const Matrix a = prony_matrix(samples, order);
  Vector rhs(n);
  for (Eigen::Index m = 0; m < n; ++m) rhs(m) = -lead * (samples.at(m + n) + samples.at(m - n));
  // Rejects systems that are singular to working precision; solving them
  // anyway returns roots that are pure rounding noise.
  Eigen::FullPivLU<Matrix> lu(a);
  if (!(lu.rcond() > std::numeric_limits<double>::epsilon()))
    throw SolverError("prony: Toeplitz+Hankel matrix is numerically singular");
  const Vector p = lu.solve(rhs);
  ChebyshevPoly poly;
  poly.coeffs.assign(p.data(), p.data() + p.size());
  poly.coeffs.push_back(lead);
  return poly;
}

/// Recovers an M-term cosine sum from exact samples (N >= 2M).
inline CosineSum prony_solve(const SampleVector& samples, std::size_t order) {
  const auto poly = prony_polynomial(samples, order);
  std::vector<std::string> ignored;
  const auto cosines =
      admissible_cosines(eig_dense(chebyshev_companion(poly)), PolePolicy{.noisy = false, .imag_tol = 1e-8}, ignored);
  CosineSum out;
  out.phi = frequencies_from_cosines(cosines, samples.grid().step());

  // Coefficients from the first 2M samples.
  const std::size_t rows = 2 * order;
  const SampleVector head(
      std::vector<double>(samples.values().begin(), samples.values().begin() + static_cast<std::ptrdiff_t>(rows)),
      SamplingGrid(rows, samples.grid().bound()));
  out.gamma = vandermonde_coefficients(out.phi, head);
  return sorted_by_frequency(out);
}

}  // namespace cossum
