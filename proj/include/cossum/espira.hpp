#pragma once

// ESPIRA: recovery through rational structure of the DCT-II data.
//
// For phi_j h N not a multiple of pi the transformed data satisfy
//   g_k = sum_j a_j / (z_k - b_j),  a_j = gamma_j sin(phi_j h/2) sin(phi_j h N),
//   b_j = cos(phi_j h),
// so ESPIRA-I fits a rational interpolant with AAA and reads off poles and
// residues, while ESPIRA-II takes the poles from the Loewner pencil (L0, L1)
// directly. Frequencies on the grid (pi / hN) Z break the rational form at a
// single node each; ESPIRA-I finds them afterwards from the DCT residual,
// ESPIRA-II picks them up as ordinary pencil eigenvalues.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <numbers>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "cossum/aaa.hpp"
#include "cossum/error.hpp"
#include "cossum/model.hpp"
#include "cossum/numerics.hpp"
#include "cossum/recovery.hpp"
#include "cossum/transforms.hpp"

namespace cossum {

/// r(z) = sum_j a_j / (z - b_j).
struct PartialFraction {
  std::vector<double> a;
  std::vector<double> b;

  std::size_t size() const noexcept { return b.size(); }
};

inline double evaluate(const PartialFraction& r, double z) {
  double s = 0.0;
  for (std::size_t j = 0; j < r.b.size(); ++j) s += r.a[j] / (z - r.b[j]);
  return s;
}

struct GridFrequency {
  std::size_t k = 0;
  double phi = 0.0;  // k pi / (h N)
  double gamma = 0.0;
};

struct GridFrequencyReport {
  std::vector<GridFrequency> entries;
  std::vector<double> residual;  // DCT of the part not explained by the rational fit
};

struct EspiraOptions {
  double tol = 1e-13;                 // relative; see espira1_recover / espira2_recover
  std::optional<std::size_t> fixed_m;  // known order; switches to noisy mode
  std::optional<bool> half_spectrum;   // default: on in noisy mode only
  double weight_tol = 1e-8;           // |w_k| below this marks an unachievable point
  double residue_tol = 1e-8;          // exact mode: |a_j| <= residue_tol max|a| marks a spurious pole
  std::optional<double> grid_threshold;  // see detect_grid_frequencies
};

/// Cauchy matrix C(k, j) = 1 / (z_k - b_j) over the given rows.
inline Matrix cauchy_matrix(const TransformedData& data, const std::vector<std::size_t>& rows,
                            const std::vector<double>& poles) {
  Matrix c(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(poles.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < poles.size(); ++j)
      c(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = 1.0 / (data.z[rows[i]] - poles[j]);
  return c;
}

/// Residues a for fixed poles by least squares on the Cauchy system, skipping
/// the indices in `excluded`.
inline std::vector<double> cauchy_residues(const TransformedData& data, const std::vector<double>& poles,
                                           const std::vector<std::size_t>& excluded = {}) {
  if (poles.empty()) return {};
  std::vector<std::size_t> rows;
  for (std::size_t k = 0; k < data.count(); ++k)
    if (std::find(excluded.begin(), excluded.end(), k) == excluded.end()) rows.push_back(k);
  Vector rhs(static_cast<Eigen::Index>(rows.size()));
  for (std::size_t i = 0; i < rows.size(); ++i) rhs(static_cast<Eigen::Index>(i)) = data.g[rows[i]];
  const Vector a = least_squares(cauchy_matrix(data, rows, poles), rhs);
  return {a.data(), a.data() + a.size()};
}

/// Poles of the barycentric interpolant from the (M+2) x (M+2) pencil
///   [0 w^T; 1 diag(z_S)] v = z diag(0, 1, ..., 1) v,
/// which has two infinite eigenvalues; residues from the Cauchy system.
inline PartialFraction partial_fractions(const AaaResult& aaa, const TransformedData& data,
                                         const PolePolicy& policy, std::vector<std::string>& diagnostics,
                                         const std::vector<std::size_t>& excluded = {}) {
  const std::size_t m = aaa.degree;
  if (m < 1) throw std::invalid_argument("partial_fractions: need M >= 1");
  if (aaa.support.size() != m + 1 || aaa.weights.size() != m + 1)
    throw std::invalid_argument("partial_fractions: support size must be M + 1");
  const auto n = static_cast<Eigen::Index>(m + 2);
  Matrix a = Matrix::Zero(n, n);
  Matrix b = Matrix::Zero(n, n);
  for (Eigen::Index i = 1; i < n; ++i) {
    const auto s = static_cast<std::size_t>(i - 1);
    a(0, i) = aaa.weights[s];
    a(i, 0) = 1.0;
    a(i, i) = data.z[aaa.support[s]];
    b(i, i) = 1.0;
  }
  const PencilSpectrum spectrum = eig_pencil(a, b);
  if (spectrum.finite.size() != m) {
    std::ostringstream msg;
    msg << "partial_fractions: expected " << m << " finite poles, found " << spectrum.finite.size();
    throw SolverError(msg.str());
  }
  PartialFraction out;
  out.b = admissible_cosines(spectrum.finite, policy, diagnostics);
  std::sort(out.b.begin(), out.b.end());
  out.a = cauchy_residues(data, out.b, excluded);
  return out;
}

inline PartialFraction partial_fractions(const AaaResult& aaa, const TransformedData& data) {
  std::vector<std::string> ignored;
  return partial_fractions(aaa, data, PolePolicy{}, ignored);
}

/// gamma_j = a_j / (sin(phi_j h/2) sin(phi_j hN)). If any denominator is at or
/// below 1e-8 in magnitude (a frequency on or near the grid) all gammas come
/// from the Vandermonde least-squares system instead.
inline std::vector<double> gamma_from_residues(const std::vector<double>& a, const std::vector<double>& phi,
                                               const SamplingGrid& grid, const SampleVector& samples) {
  if (a.size() != phi.size()) throw std::invalid_argument("gamma_from_residues: length mismatch");
  const double h = grid.step();
  const auto n = static_cast<double>(grid.size());
  std::vector<double> gamma(phi.size());
  for (std::size_t j = 0; j < phi.size(); ++j) {
    const double d = std::sin(phi[j] * h / 2.0) * std::sin(phi[j] * h * n);
    if (std::abs(d) <= 1e-8) return vandermonde_coefficients(phi, samples);
    gamma[j] = a[j] / d;
  }
  return gamma;
}

/// Post-processing for frequencies on the grid (pi / hN) Z. The rational part
/// predicts hf1_k = (-1)^k cos(pi k / 2N) r(z_k); wherever the residual
/// hf2 = hf - hf1 exceeds threshold * N in magnitude there is a grid term with
/// phi = k pi / (hN) and gamma = 2 hf2_k / N (k >= 1) or hf2_0 / N (k = 0).
/// A threshold <= 0 selects 1e-6 max|hf| / N.
inline GridFrequencyReport detect_grid_frequencies(const DctVector& dct, const PartialFraction& recovered,
                                                   const SamplingGrid& grid, double threshold = 0.0) {
  const std::size_t n = dct.values.size();
  if (n != grid.size()) throw std::invalid_argument("detect_grid_frequencies: size mismatch");
  const auto nd = static_cast<double>(n);
  if (threshold <= 0.0) {
    double peak = 0.0;
    for (double v : dct.values) peak = std::max(peak, std::abs(v));
    threshold = 1e-6 * peak / nd;
  }
  GridFrequencyReport report;
  report.residual.resize(n);
  for (std::size_t k = 0; k < n; ++k) {
    const double z = std::cos(std::numbers::pi * static_cast<double>(k) / nd);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    const double hf1 =
        recovered.size() == 0
            ? 0.0
            : sign * std::cos(std::numbers::pi * static_cast<double>(k) / (2.0 * nd)) * evaluate(recovered, z);
    report.residual[k] = dct.values[k] - hf1;
    if (std::abs(report.residual[k]) > threshold * nd) {
      GridFrequency entry;
      entry.k = k;
      entry.phi = static_cast<double>(k) * std::numbers::pi / (grid.step() * nd);
      entry.gamma = (k == 0 ? 1.0 : 2.0) * report.residual[k] / nd;
      report.entries.push_back(entry);
    }
  }
  return report;
}

struct Espira1Result {
  Recovery recovery;
  GridFrequencyReport grid;
  AaaResult aaa;
  PartialFraction fraction;
  std::vector<std::size_t> unachievable;  // support indices with vanishing weight
};

namespace detail {

inline double max_abs(const std::vector<double>& v) {
  double m = 0.0;
  for (double x : v) m = std::max(m, std::abs(x));
  return m;
}

inline bool use_half_spectrum(const EspiraOptions& options) {
  return options.half_spectrum.value_or(options.fixed_m.has_value());
}

inline void check_order(const EspiraOptions& options, std::size_t count) {
  if (options.fixed_m && (*options.fixed_m < 1 || 2 * (*options.fixed_m + 1) >= count))
    throw std::invalid_argument("espira: fixed M too large for the number of data points");
}

}  // namespace detail

/// ESPIRA-I. Exact mode (no fixed M): AAA with absolute tolerance
/// tol * max|g| and as many iterations as the data allow, pruning of
/// unachievable points and spurious poles, then grid-frequency post-processing. Noisy mode
/// (fixed M): exactly M + 1 AAA steps on the first half of the spectrum.
inline Espira1Result espira1_recover(const SampleVector& samples, const EspiraOptions& options = {}) {
  const bool noisy = options.fixed_m.has_value();
  const DctVector dct = dct2(samples);
  const TransformedData data = g_vector(dct, detail::use_half_spectrum(options));
  detail::check_order(options, data.count());
  if (data.count() < 3) throw std::invalid_argument("espira1: need at least three data points");

  Espira1Result out;
  auto& diag = out.recovery.diagnostics;
  const double scale = detail::max_abs(data.g);
  if (scale == 0.0) throw SolverError("espira1: transformed data vanish");

  if (noisy) {
    out.aaa = aaa_interpolate(data, 0.0, *options.fixed_m + 1);
  } else {
    out.aaa = aaa_interpolate(data, options.tol * scale, (data.count() - 1) / 2);
    if (!out.aaa.converged) {
      out.recovery.converged = false;
      diag.push_back("aaa did not reach the tolerance; result is the last iterate");
    }
  }

  // Unachievable points carry (numerically) zero weight. In exact mode they
  // are grid-frequency nodes and are removed before the pole computation.
  AaaResult fit;
  for (std::size_t s = 0; s < out.aaa.support.size(); ++s) {
    const std::size_t k = out.aaa.support[s];
    if (std::abs(out.aaa.weights[s]) < options.weight_tol) {
      std::ostringstream msg;
      msg << "near-zero weight at k=" << k << " (frequency close to the grid pi/(hN) Z)";
      diag.push_back(msg.str());
      if (!noisy) {
        out.unachievable.push_back(k);
        continue;
      }
    }
    fit.support.push_back(k);
    fit.values.push_back(out.aaa.values[s]);
    fit.weights.push_back(out.aaa.weights[s]);
  }
  fit.degree = fit.support.empty() ? 0 : fit.support.size() - 1;

  // A non-converged fit is only an approximation, so its poles are filtered
  // like noisy ones and the caller sees converged = false.
  const PolePolicy policy{.noisy = noisy || !out.aaa.converged};
  if (fit.degree >= 1) out.fraction = partial_fractions(fit, data, policy, diag, out.unachievable);

  // An extra AAA step can leave a pole-zero pair (Froissart doublet) whose
  // residue is at rounding level. Drop it and refit the remaining residues.
  if (!noisy && out.fraction.size() > 1) {
    const double peak = detail::max_abs(out.fraction.a);
    PartialFraction kept;
    for (std::size_t j = 0; j < out.fraction.size(); ++j) {
      if (std::abs(out.fraction.a[j]) <= options.residue_tol * peak) {
        std::ostringstream msg;
        msg << "spurious pole " << out.fraction.b[j] << " with residue " << out.fraction.a[j] << " removed";
        diag.push_back(msg.str());
        continue;
      }
      kept.b.push_back(out.fraction.b[j]);
    }
    if (kept.b.size() != out.fraction.size()) {
      kept.a = cauchy_residues(data, kept.b, out.unachievable);
      out.fraction = std::move(kept);
    }
  }

  const double h = samples.grid().step();
  CosineSum sum;
  sum.phi = frequencies_from_cosines(out.fraction.b, h);
  sum.gamma = gamma_from_residues(out.fraction.a, sum.phi, samples.grid(), samples);

  if (!noisy) {
    out.grid = detect_grid_frequencies(dct, out.fraction, samples.grid(), options.grid_threshold.value_or(0.0));
    for (const auto& e : out.grid.entries) {
      sum.phi.push_back(e.phi);
      sum.gamma.push_back(e.gamma);
    }
  }
  if (sum.phi.empty()) throw SolverError("espira1: no frequencies recovered");
  out.recovery.sum = sorted_by_frequency(sum);
  return out;
}

/// L0 = ((g_l - g_k) / (z_l - z_k)), L1 = ((g_l z_l - g_k z_k) / (z_l - z_k)),
/// rows l in Gamma, columns k in S.
struct LoewnerPair {
  Matrix l0;
  Matrix l1;
};

inline LoewnerPair build_loewner_pair(const TransformedData& data, const std::vector<std::size_t>& support,
                                      const std::vector<std::size_t>& candidates) {
  for (auto k : support) {
    if (k >= data.count()) throw std::invalid_argument("build_loewner_pair: index out of range");
    if (std::find(candidates.begin(), candidates.end(), k) != candidates.end())
      throw std::invalid_argument("build_loewner_pair: S and Gamma overlap");
  }
  for (auto l : candidates)
    if (l >= data.count()) throw std::invalid_argument("build_loewner_pair: index out of range");
  LoewnerPair out;
  out.l0 = loewner_matrix(data, candidates, support);
  out.l1.resize(out.l0.rows(), out.l0.cols());
  for (std::size_t i = 0; i < candidates.size(); ++i)
    for (std::size_t j = 0; j < support.size(); ++j) {
      const std::size_t l = candidates[i], k = support[j];
      out.l1(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (data.g[l] * data.z[l] - data.g[k] * data.z[k]) / (data.z[l] - data.z[k]);
    }
  return out;
}

/// Eigenvalues of the Loewner pencil for order m. The right singular vectors
/// W of [L0 L1] span the row space of [C_S^T, diag(b) C_S^T], so with W_m the
/// leading m of them, split into upper and lower m-row blocks,
/// pinv(upper) * lower is similar to diag(b).
inline std::vector<Complex> loewner_pencil_eigenvalues(const LoewnerPair& pair, std::size_t m) {
  const Eigen::Index cols = pair.l0.cols();
  if (m < 1 || static_cast<Eigen::Index>(m) > cols || pair.l1.cols() != cols || pair.l1.rows() != pair.l0.rows())
    throw std::invalid_argument("loewner_pencil_eigenvalues: bad order or shapes");
  Matrix joined(pair.l0.rows(), 2 * cols);
  joined << pair.l0, pair.l1;
  const SvdResult dec = svd(joined, SvdVectors::full);
  const auto mm = static_cast<Eigen::Index>(m);
  const Matrix wm = dec.v.leftCols(mm);
  const Matrix reduced = least_squares(Matrix(wm.topRows(cols)), Matrix(wm.bottomRows(cols)));
  return eig_dense(reduced);
}

struct SupportSelection {
  std::vector<std::size_t> support;
  std::vector<std::size_t> candidates;
  std::size_t order = 0;
  bool converged = true;
  std::vector<std::vector<double>> singular_values;  // per greedy step
};

/// AAA-style greedy choice of S. Exact mode (no fixed M) stops at the first
/// step j with sigma_j < tol sigma_1 and returns that last index to Gamma, so
/// |S| = j - 1 = M. With a fixed M the loop simply runs M steps.
inline SupportSelection greedy_support(const TransformedData& data, double tol,
                                       std::optional<std::size_t> fixed_m) {
  GreedyPartition partition(data);
  SupportSelection out;
  const std::size_t jmax = fixed_m ? *fixed_m : (data.count() - 1) / 2;
  out.converged = fixed_m.has_value();
  for (std::size_t j = 1; j <= jmax; ++j) {
    partition.select();
    const SvdResult dec = svd(partition.loewner(), SvdVectors::thin);
    out.singular_values.emplace_back(dec.sigma.data(), dec.sigma.data() + dec.sigma.size());
    if (!fixed_m && dec.sigma(static_cast<Eigen::Index>(j - 1)) < tol * dec.sigma(0)) {
      partition.unselect_last();
      out.converged = true;
      break;
    }
    if (dec.sigma(0) == 0.0) {
      // g constant on the grid; nothing left to fit.
      out.converged = true;
      break;
    }
    Vector w = dec.v.col(dec.v.cols() - 1);
    detail::normalize_sign(w);
    partition.update_residual(w);
  }
  out.support = partition.support();
  out.candidates = partition.candidates();
  out.order = out.support.size();
  return out;
}

/// ESPIRA-II. Exact mode stops the greedy selection on the relative singular
/// value test with `tol`; noisy mode takes |S| = fixed M on the first half of
/// the spectrum.
inline Recovery espira2_recover(const SampleVector& samples, const EspiraOptions& options = {}) {
  const bool noisy = options.fixed_m.has_value();
  const DctVector dct = dct2(samples);
  const TransformedData data = g_vector(dct, detail::use_half_spectrum(options));
  detail::check_order(options, data.count());
  if (data.count() < 3) throw std::invalid_argument("espira2: need at least three data points");
  if (detail::max_abs(data.g) == 0.0) throw SolverError("espira2: transformed data vanish");

  Recovery out;
  const SupportSelection sel = greedy_support(data, options.tol, options.fixed_m);
  if (!sel.converged) {
    out.converged = false;
    out.diagnostics.push_back("preconditioning did not meet the singular value test");
  }
  if (sel.order == 0) throw SolverError("espira2: empty support");

  const LoewnerPair pair = build_loewner_pair(data, sel.support, sel.candidates);
  const PolePolicy policy{.noisy = noisy};
  std::vector<double> poles =
      admissible_cosines(loewner_pencil_eigenvalues(pair, sel.order), policy, out.diagnostics);
  std::sort(poles.begin(), poles.end());

  const double h = samples.grid().step();
  const auto n = static_cast<double>(samples.size());
  out.sum.phi = frequencies_from_cosines(poles, h);

  // A pole on a node (grid frequency) makes the Cauchy system singular; the
  // Vandermonde system is equivalent there and stays well posed.
  bool cauchy_ok = true;
  for (std::size_t j = 0; j < poles.size(); ++j) {
    const double d = std::sin(out.sum.phi[j] * h / 2.0) * std::sin(out.sum.phi[j] * h * n);
    if (std::abs(d) <= 1e-8) cauchy_ok = false;
    for (double z : data.z)
      if (std::abs(z - poles[j]) <= 1e-13) cauchy_ok = false;
  }
  if (cauchy_ok) {
    out.sum.gamma = gamma_from_residues(cauchy_residues(data, poles), out.sum.phi, samples.grid(), samples);
  } else {
    out.sum.gamma = vandermonde_coefficients(out.sum.phi, samples);
  }
  if (out.sum.phi.empty()) throw SolverError("espira2: no frequencies recovered");
  out.sum = sorted_by_frequency(out.sum);
  return out;
}

}  // namespace cossum
