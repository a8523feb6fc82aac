#pragma once

// Bessel functions of the first kind J_n(t), n >= 0, t >= 0, and the target
// J_n(B, t) = (B / t) J_n(t) on [0, B]. Small arguments use the ascending
// series; elsewhere Miller's backward recurrence normalized with
// J_0 + 2 sum_k J_2k = 1.

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

namespace cossum {

struct BesselSpec {
  int n = 3;
  double B = 126.0;
};

namespace detail {

inline double bessel_series(int n, double t) {
  const long double x = static_cast<long double>(t) / 2.0L;
  long double term = 1.0L;
  for (int i = 1; i <= n; ++i) term *= x / static_cast<long double>(i);
  long double sum = term;
  const long double x2 = x * x;
  for (int k = 1; k < 200; ++k) {
    term *= -x2 / (static_cast<long double>(k) * static_cast<long double>(k + n));
    sum += term;
    if (std::abs(term) <= 1e-21L * std::abs(sum)) break;
  }
  return static_cast<double>(sum);
}

}  // namespace detail

/// J_0 .. J_nmax at t > 0 from the backward recurrence started at `start`.
/// Exposed so that the start depth can be checked independently.
inline std::vector<double> bessel_j_miller(int nmax, double t, int start) {
  if (t <= 0.0) throw std::invalid_argument("bessel_j_miller: need t > 0");
  if (start < nmax + 2) start = nmax + 2;
  std::vector<double> j(static_cast<std::size_t>(nmax) + 1, 0.0);
  double next = 0.0, cur = 1e-300, norm = 0.0;
  for (int k = start; k >= 1; --k) {
    const double prev = 2.0 * k / t * cur - next;  // J_{k-1}
    next = cur;
    cur = prev;
    if (k - 1 <= nmax) j[static_cast<std::size_t>(k - 1)] = cur;
    if ((k - 1) % 2 == 0 && k - 1 > 0) norm += 2.0 * cur;
    if (std::abs(cur) > 1e250) {
      cur *= 1e-250;
      next *= 1e-250;
      norm *= 1e-250;
      for (auto& v : j) v *= 1e-250;
    }
  }
  norm += cur;  // J_0
  for (auto& v : j) v /= norm;
  return j;
}

inline double bessel_j(int n, double t) {
  if (n < 0) throw std::invalid_argument("bessel_j: negative order");
  if (t < 0.0 || !std::isfinite(t)) throw std::invalid_argument("bessel_j: need finite t >= 0");
  if (t == 0.0) return n == 0 ? 1.0 : 0.0;
  if (t <= 12.0) return detail::bessel_series(n, t);
  const int start = n + static_cast<int>(std::ceil(1.5 * t)) + 40;
  return bessel_j_miller(n, t, start)[static_cast<std::size_t>(n)];
}

/// (B / t) J_n(t); at t = 0 the limit, B/2 for n = 1 and 0 for n >= 2.
inline double bessel_mod(const BesselSpec& spec, double t) {
  if (spec.n < 1) throw std::invalid_argument("bessel_mod: need n >= 1");
  if (!(spec.B > 0.0)) throw std::invalid_argument("bessel_mod: need B > 0");
  if (t < 0.0 || t > spec.B) throw std::invalid_argument("bessel_mod: t outside [0, B]");
  if (t == 0.0) return spec.n == 1 ? spec.B / 2.0 : 0.0;
  return spec.B / t * bessel_j(spec.n, t);
}

}  // namespace cossum
