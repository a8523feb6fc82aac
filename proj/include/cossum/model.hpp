#pragma once

// Signal model f(t) = sum_j gamma_j cos(phi_j t), sampling grids,
// noise injection and the error metrics used throughout the experiments.

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <numbers>
#include <numeric>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace cossum {

/// A cosine sum: parallel lists of coefficients and frequencies.
struct CosineSum {
  std::vector<double> gamma;
  std::vector<double> phi;

  std::size_t size() const noexcept { return phi.size(); }
  bool empty() const noexcept { return phi.empty(); }
};

/// Checks the model invariants: equal lengths, nonzero coefficients,
/// pairwise distinct frequencies and, when a bound is given, phi in [0, K).
inline void validate(const CosineSum& sum, std::optional<double> bound = std::nullopt) {
  if (sum.gamma.size() != sum.phi.size())
    throw std::invalid_argument("cosine sum: gamma and phi differ in length");
  if (sum.empty()) throw std::invalid_argument("cosine sum: no terms");
  for (std::size_t j = 0; j < sum.size(); ++j) {
    if (!std::isfinite(sum.gamma[j]) || !std::isfinite(sum.phi[j]))
      throw std::invalid_argument("cosine sum: non-finite parameter");
    if (sum.gamma[j] == 0.0)
      throw std::invalid_argument("cosine sum: coefficient " + std::to_string(j) + " is zero");
    if (bound && (sum.phi[j] < 0.0 || sum.phi[j] >= *bound))
      throw std::invalid_argument("cosine sum: frequency " + std::to_string(j) +
                                  " outside [0, K)");
    for (std::size_t i = 0; i < j; ++i)
      if (sum.phi[i] == sum.phi[j])
        throw std::invalid_argument("cosine sum: duplicate frequency");
  }
}

/// Returns a copy with terms ordered by ascending frequency.
inline CosineSum sorted_by_frequency(const CosineSum& sum) {
  std::vector<std::size_t> order(sum.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return sum.phi[a] < sum.phi[b]; });
  CosineSum out;
  out.gamma.reserve(order.size());
  out.phi.reserve(order.size());
  for (auto j : order) {
    out.gamma.push_back(sum.gamma[j]);
    out.phi.push_back(sum.phi[j]);
  }
  return out;
}

/// N samples at t_k = h(2k+1)/2 with h = pi/K.
class SamplingGrid {
 public:
  SamplingGrid(std::size_t n, double bound) : n_(n), bound_(bound), step_(std::numbers::pi / bound) {
    if (n == 0) throw std::invalid_argument("sampling grid: N must be positive");
    if (!(bound > 0.0) || !std::isfinite(bound))
      throw std::invalid_argument("sampling grid: K must be positive");
  }

  std::size_t size() const noexcept { return n_; }
  double bound() const noexcept { return bound_; }
  double step() const noexcept { return step_; }
  double node(std::ptrdiff_t k) const noexcept {
    return step_ * (2.0 * static_cast<double>(k) + 1.0) / 2.0;
  }

 private:
  std::size_t n_;
  double bound_;
  double step_;
};

/// Samples of an even signal on a SamplingGrid.
class SampleVector {
 public:
  SampleVector(std::vector<double> values, SamplingGrid grid)
      : values_(std::move(values)), grid_(grid) {
    if (values_.size() != grid_.size())
      throw std::invalid_argument("sample vector: length does not match grid");
  }

  std::size_t size() const noexcept { return values_.size(); }
  const SamplingGrid& grid() const noexcept { return grid_; }
  const std::vector<double>& values() const noexcept { return values_; }
  double operator[](std::size_t k) const noexcept { return values_[k]; }

  /// Sample with even extension f_{-k-1} = f_k; valid for -N <= k < N.
  double at(std::ptrdiff_t k) const {
    const auto n = static_cast<std::ptrdiff_t>(values_.size());
    if (k < -n || k >= n) throw std::out_of_range("sample vector: index out of range");
    return k >= 0 ? values_[static_cast<std::size_t>(k)]
                  : values_[static_cast<std::size_t>(-k - 1)];
  }

 private:
  std::vector<double> values_;
  SamplingGrid grid_;
};

inline double evaluate(const CosineSum& sum, double t) {
  double acc = 0.0;
  for (std::size_t j = 0; j < sum.size(); ++j) acc += sum.gamma[j] * std::cos(sum.phi[j] * t);
  return acc;
}

inline SampleVector sample(const CosineSum& sum, const SamplingGrid& grid) {
  std::vector<double> values(grid.size());
  for (std::size_t k = 0; k < values.size(); ++k)
    values[k] = evaluate(sum, grid.node(static_cast<std::ptrdiff_t>(k)));
  return SampleVector(std::move(values), grid);
}

namespace detail {

// Uniform double in [0, 1) from the top 53 bits; identical on every platform,
// unlike std::uniform_real_distribution.
inline double unit_uniform(std::mt19937_64& engine) {
  return static_cast<double>(engine() >> 11) * 0x1.0p-53;
}

}  // namespace detail

/// Adds i.i.d. noise uniform on [-amplitude, amplitude]; reproducible per seed.
inline SampleVector add_noise(const SampleVector& samples, double amplitude, std::uint64_t seed) {
  if (!(amplitude > 0.0)) throw std::invalid_argument("add_noise: amplitude must be positive");
  std::mt19937_64 engine(seed);
  std::vector<double> values(samples.values());
  for (auto& v : values) v += amplitude * (2.0 * detail::unit_uniform(engine) - 1.0);
  return SampleVector(std::move(values), samples.grid());
}

/// Adds i.i.d. zero-mean Gaussian noise with the given standard deviation (Box-Muller).
inline SampleVector add_gaussian_noise(const SampleVector& samples, double sigma,
                                       std::uint64_t seed) {
  if (!(sigma > 0.0)) throw std::invalid_argument("add_gaussian_noise: sigma must be positive");
  std::mt19937_64 engine(seed);
  std::vector<double> values(samples.values());
  for (auto& v : values) {
    const double u1 = 1.0 - detail::unit_uniform(engine);  // (0, 1]
    const double u2 = detail::unit_uniform(engine);
    v += sigma * std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  return SampleVector(std::move(values), samples.grid());
}

struct SignalToNoise {
  double snr_db = 0.0;
  double psnr_db = 0.0;
};

/// SNR = 10 log10(sum f^2 / sum eps^2), PSNR = 10 log10(N max f^2 / sum eps^2).
inline SignalToNoise snr_psnr(const SampleVector& clean, const SampleVector& noisy) {
  if (clean.size() != noisy.size()) throw std::invalid_argument("snr_psnr: length mismatch");
  double signal = 0.0, noise = 0.0, peak = 0.0;
  for (std::size_t k = 0; k < clean.size(); ++k) {
    const double e = noisy[k] - clean[k];
    signal += clean[k] * clean[k];
    noise += e * e;
    peak = std::max(peak, clean[k] * clean[k]);
  }
  if (noise == 0.0) throw std::invalid_argument("snr_psnr: zero noise power");
  const double n = static_cast<double>(clean.size());
  return {10.0 * std::log10(signal / noise), 10.0 * std::log10(n * peak / noise)};
}

struct ErrorReport {
  double e_f = 0.0;
  std::optional<double> e_phi;
  std::optional<double> e_gamma;
};

/// Maximum of |target(t) - approx(t)| over t = 0, step, 2 step, ... <= end.
template <class Target>
double max_deviation(const Target& target, const CosineSum& approx, double end,
                     double step = 1e-3) {
  const auto count = static_cast<std::size_t>(std::floor(end / step + 1e-9));
  double worst = 0.0;
  for (std::size_t i = 0; i <= count; ++i) {
    const double t = static_cast<double>(i) * step;
    worst = std::max(worst, std::abs(target(t) - evaluate(approx, t)));
  }
  return worst;
}

/// Relative errors e(f), e(phi), e(gamma). e(f) is the sup-norm ratio over the
/// equidistant points of [0, interval_end] with the given step. Parameter errors
/// match terms by rank after sorting both sums by frequency and are absent when
/// the orders differ. A zero denominator falls back to the absolute error.
inline ErrorReport relative_errors(const CosineSum& truth, const CosineSum& estimate,
                                   double interval_end, double step = 1e-3) {
  ErrorReport report;
  const auto count = static_cast<std::size_t>(std::floor(interval_end / step + 1e-9));
  double num = 0.0, den = 0.0;
  for (std::size_t i = 0; i <= count; ++i) {
    const double t = static_cast<double>(i) * step;
    const double f = evaluate(truth, t);
    num = std::max(num, std::abs(f - evaluate(estimate, t)));
    den = std::max(den, std::abs(f));
  }
  report.e_f = den > 0.0 ? num / den : num;

  if (truth.size() == estimate.size() && !truth.empty()) {
    const auto a = sorted_by_frequency(truth);
    const auto b = sorted_by_frequency(estimate);
    double dphi = 0.0, dgamma = 0.0, mphi = 0.0, mgamma = 0.0;
    for (std::size_t j = 0; j < a.size(); ++j) {
      dphi = std::max(dphi, std::abs(a.phi[j] - b.phi[j]));
      dgamma = std::max(dgamma, std::abs(a.gamma[j] - b.gamma[j]));
      mphi = std::max(mphi, std::abs(a.phi[j]));
      mgamma = std::max(mgamma, std::abs(a.gamma[j]));
    }
    report.e_phi = mphi > 0.0 ? dphi / mphi : dphi;
    report.e_gamma = mgamma > 0.0 ? dgamma / mgamma : dgamma;
  }
  return report;
}

/// Default e(f) interval end pi N / K, i.e. the sampled range.
inline double default_error_interval(const SamplingGrid& grid) {
  return std::numbers::pi * static_cast<double>(grid.size()) / grid.bound();
}

}  // namespace cossum
