#pragma once

// Greedy barycentric rational interpolation (AAA) on the cosine grid
// z_k = cos(pi k / N). Each step moves the worst-fitting index from the
// candidate set Gamma to the support set S and takes the weights as the right
// singular vector of the smallest singular value of the Loewner matrix
// ((g_l - g_k) / (z_l - z_k))_{l in Gamma, k in S}.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <stdexcept>
#include <vector>

#include "cossum/numerics.hpp"
#include "cossum/transforms.hpp"

namespace cossum {

struct AaaIteration {
  double max_residual = 0.0;          // ||r - g_Gamma||_inf after this step
  std::vector<double> singular_values;  // of the Loewner matrix, descending
};

struct AaaResult {
  std::vector<std::size_t> support;  // S, in selection order
  std::vector<double> values;        // g_S
  std::vector<double> weights;       // w_S, unit 2-norm
  std::size_t degree = 0;            // M; the interpolant has type (M, M)
  bool converged = false;
  std::vector<AaaIteration> history;
};

struct BarycentricRational {
  std::vector<double> nodes;
  std::vector<double> values;
  std::vector<double> weights;
};

/// p(z)/q(z) with p = sum w_k g_k/(z - z_k), q = sum w_k/(z - z_k). At a
/// support node the stored value is returned.
inline double barycentric_eval(const BarycentricRational& r, double z) {
  double num = 0.0, den = 0.0;
  for (std::size_t k = 0; k < r.nodes.size(); ++k) {
    if (z == r.nodes[k]) return r.values[k];
    const double c = r.weights[k] / (z - r.nodes[k]);
    num += c * r.values[k];
    den += c;
  }
  return num / den;
}

inline BarycentricRational to_rational(const AaaResult& result, const TransformedData& data) {
  BarycentricRational r;
  for (auto k : result.support) r.nodes.push_back(data.z[k]);
  r.values = result.values;
  r.weights = result.weights;
  return r;
}

/// Loewner matrix ((g_l - g_k) / (z_l - z_k)) for rows l in `rows`, columns k in `cols`.
inline Matrix loewner_matrix(const TransformedData& data, const std::vector<std::size_t>& rows,
                             const std::vector<std::size_t>& cols) {
  Matrix l(static_cast<Eigen::Index>(rows.size()), static_cast<Eigen::Index>(cols.size()));
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < cols.size(); ++j)
      l(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
          (data.g[rows[i]] - data.g[cols[j]]) / (data.z[rows[i]] - data.z[cols[j]]);
  return l;
}

namespace detail {

// Index (position in `candidates`) of the largest |values|; first one on ties,
// which is the smallest grid index because candidates stay sorted.
inline std::size_t argmax_abs(const std::vector<double>& values) {
  std::size_t best = 0;
  for (std::size_t i = 1; i < values.size(); ++i)
    if (std::abs(values[i]) > std::abs(values[best]) || std::isnan(values[i])) {
      if (std::isnan(values[best])) continue;
      best = i;
    }
  return best;
}

// Fixes the sign of a singular vector so that runs are reproducible.
inline void normalize_sign(Vector& w) {
  for (Eigen::Index i = 0; i < w.size(); ++i) {
    if (w(i) != 0.0) {
      if (w(i) < 0.0) w = -w;
      return;
    }
  }
}

}  // namespace detail

/// State of the greedy partition shared by AAA and the ESPIRA-II preconditioner.
class GreedyPartition {
 public:
  explicit GreedyPartition(const TransformedData& data) : data_(&data), residual_(data.g) {
    candidates_.resize(data.count());
    for (std::size_t k = 0; k < candidates_.size(); ++k) candidates_[k] = k;
  }

  /// Moves the candidate with the largest current residual into S.
  std::size_t select() {
    std::vector<double> score(candidates_.size());
    for (std::size_t i = 0; i < candidates_.size(); ++i) score[i] = residual_[i];
    const std::size_t pos = detail::argmax_abs(score);
    const std::size_t k = candidates_[pos];
    candidates_.erase(candidates_.begin() + static_cast<std::ptrdiff_t>(pos));
    residual_.erase(residual_.begin() + static_cast<std::ptrdiff_t>(pos));
    support_.push_back(k);
    return k;
  }

  /// Returns the last support index to the candidate set (keeps it sorted).
  void unselect_last() {
    const std::size_t k = support_.back();
    support_.pop_back();
    const auto it = std::lower_bound(candidates_.begin(), candidates_.end(), k);
    const auto pos = it - candidates_.begin();
    candidates_.insert(it, k);
    residual_.insert(residual_.begin() + pos, 0.0);
  }

  Matrix loewner() const { return loewner_matrix(*data_, candidates_, support_); }

  /// Evaluates the barycentric interpolant with weights w on the candidates,
  /// stores r - g there and returns its sup norm.
  double update_residual(const Vector& w) {
    double worst = 0.0;
    for (std::size_t i = 0; i < candidates_.size(); ++i) {
      const std::size_t l = candidates_[i];
      double num = 0.0, den = 0.0;
      for (std::size_t j = 0; j < support_.size(); ++j) {
        const std::size_t k = support_[j];
        const double c = w(static_cast<Eigen::Index>(j)) / (data_->z[l] - data_->z[k]);
        num += c * data_->g[k];
        den += c;
      }
      residual_[i] = num / den - data_->g[l];
      const double a = std::abs(residual_[i]);
      if (!(a <= worst)) worst = a;  // NaN propagates
    }
    return worst;
  }

  const std::vector<std::size_t>& support() const noexcept { return support_; }
  const std::vector<std::size_t>& candidates() const noexcept { return candidates_; }

 private:
  const TransformedData* data_;
  std::vector<std::size_t> support_;
  std::vector<std::size_t> candidates_;
  std::vector<double> residual_;  // r_l - g_l on candidates (initially -g, r = 0)
};

/// Runs at most jmax steps; stops once the residual on Gamma is below the
/// absolute tolerance `tol`. Without convergence the last iterate is returned
/// with `converged == false` and degree jmax - 1.
inline AaaResult aaa_interpolate(const TransformedData& data, double tol, std::size_t jmax) {
  if (data.count() < 2) throw std::invalid_argument("aaa: need at least two data points");
  if (jmax < 1 || 2 * jmax >= data.count())
    throw std::invalid_argument("aaa: need 1 <= jmax < count / 2");
  GreedyPartition partition(data);
  AaaResult result;
  Vector w;
  for (std::size_t j = 1; j <= jmax; ++j) {
    partition.select();
    const SvdResult dec = svd(partition.loewner(), SvdVectors::thin);
    w = dec.v.col(dec.v.cols() - 1);
    detail::normalize_sign(w);
    AaaIteration step;
    step.singular_values.assign(dec.sigma.data(), dec.sigma.data() + dec.sigma.size());
    step.max_residual = partition.update_residual(w);
    result.history.push_back(std::move(step));
    result.degree = j - 1;
    if (result.history.back().max_residual < tol) {
      result.converged = true;
      break;
    }
  }
  result.support = partition.support();
  for (auto k : result.support) result.values.push_back(data.g[k]);
  result.weights.assign(w.data(), w.data() + w.size());
  return result;
}

}  // namespace cossum
