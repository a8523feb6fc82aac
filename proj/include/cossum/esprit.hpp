#pragma once

// ESPRIT for cosine sums. The values cos(phi_j h) are the eigenvalues of the
// pencil z M0 - (M_{-1} + M_1)/2 built from three row-shifted slices of a
// Toeplitz+Hankel sample matrix. The SVD of the stacked matrix reduces the
// pencil to an M x M eigenproblem on slices of its left singular vectors.

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cossum/error.hpp"
#include "cossum/model.hpp"
#include "cossum/numerics.hpp"
#include "cossum/recovery.hpp"

namespace cossum {

struct EspritConfig {
  std::size_t upper_bound = 0;  // L; 0 selects N/2
  double eps = 1e-10;           // numerical-rank threshold (exact data)
  std::optional<std::size_t> fixed_m;  // known order; skips rank detection
};

/// M_{N-L+2,L} = (1/2)(f_{l+m-1} + f_{m-l-1}), m <= N-L+1, l < L, with the
/// even extension f_{-k-1} = f_k.
inline Matrix build_toeplitz_hankel(const SampleVector& samples, std::size_t upper_bound) {
  const std::size_t n = samples.size();
  if (upper_bound < 1 || 2 * upper_bound > n)
    throw std::invalid_argument("build_toeplitz_hankel: need 1 <= L <= N/2");
  const auto rows = static_cast<Eigen::Index>(n - upper_bound + 2);
  const auto cols = static_cast<Eigen::Index>(upper_bound);
  Matrix a(rows, cols);
  for (Eigen::Index m = 0; m < rows; ++m)
    for (Eigen::Index l = 0; l < cols; ++l)
      a(m, l) = 0.5 * (samples.at(l + m - 1) + samples.at(m - l - 1));
  return a;
}

inline Recovery esprit_recover(const SampleVector& samples, const EspritConfig& config = {}) {
  const std::size_t n = samples.size();
  const std::size_t upper = config.upper_bound == 0 ? n / 2 : config.upper_bound;
  const Matrix stacked = build_toeplitz_hankel(samples, upper);
  const SvdResult dec = svd_left(stacked);

  Recovery out;
  std::size_t order = 0;
  if (config.fixed_m) {
    order = *config.fixed_m;
    if (order < 1 || order > upper) throw std::invalid_argument("esprit: need 1 <= M <= L");
  } else {
    order = numerical_rank(dec.sigma, config.eps);
    if (order == 0) throw SolverError("esprit: sample matrix has rank zero");
  }

  const auto rows = static_cast<Eigen::Index>(n - upper);
  const auto m = static_cast<Eigen::Index>(order);
  const Matrix lower = dec.u.block(0, 0, rows, m);   // rows 1..N-L
  const Matrix middle = dec.u.block(1, 0, rows, m);  // rows 2..N-L+1
  const Matrix upper_slice = dec.u.block(2, 0, rows, m);  // rows 3..N-L+2
  const Matrix reduced = least_squares(middle, Matrix(lower + upper_slice));

  std::vector<Complex> halves = eig_dense(reduced);
  for (auto& z : halves) z *= 0.5;
  const PolePolicy policy{.noisy = config.fixed_m.has_value()};
  const auto cosines = admissible_cosines(halves, policy, out.diagnostics);
  const auto h = samples.grid().step();
  out.sum.phi =
      distinct_frequencies(frequencies_from_cosines(cosines, h), samples.grid().bound(), out.diagnostics);
  if (out.sum.phi.empty()) throw SolverError("esprit: no admissible frequencies");
  out.sum.gamma = vandermonde_coefficients(out.sum.phi, samples);
  return out;
}

}  // namespace cossum
