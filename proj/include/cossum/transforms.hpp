#pragma once

// DCT-II of a sample vector and the transformed data (g_k, z_k) on which
// the rational-interpolation and Loewner-pencil solvers operate.
//
// The DCT uses Makhoul's reordering onto a single complex FFT of length N.
// Power-of-two lengths use an iterative radix-2 FFT; other lengths go through
// Bluestein's chirp-z convolution. Both run in O(N log N).

#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "cossum/model.hpp"

namespace cossum {

namespace detail {

template <class Real>
using Complex = std::complex<Real>;

inline bool is_power_of_two(std::size_t n) { return n != 0 && (n & (n - 1)) == 0; }

inline std::size_t next_power_of_two(std::size_t n) {
  std::size_t m = 1;
  while (m < n) m <<= 1;
  return m;
}

// In-place radix-2 FFT, forward sign exp(-2 pi i jk/n). Twiddles come from a
// table evaluated directly (no angle recurrence) to keep the error at O(eps log n).
template <class Real>
void fft_radix2(std::vector<Complex<Real>>& a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return;
  for (std::size_t i = 1, j = 0; i < n; ++i) {
    std::size_t bit = n >> 1;
    for (; j & bit; bit >>= 1) j ^= bit;
    j ^= bit;
    if (i < j) std::swap(a[i], a[j]);
  }
  std::vector<Complex<Real>> twiddle(n / 2);
  const Real sign = inverse ? Real(1) : Real(-1);
  for (std::size_t j = 0; j < n / 2; ++j) {
    const Real angle = Real(2) * std::numbers::pi_v<Real> * Real(j) / Real(n);
    twiddle[j] = {std::cos(angle), sign * std::sin(angle)};
  }
  for (std::size_t len = 2; len <= n; len <<= 1) {
    const std::size_t stride = n / len;
    for (std::size_t start = 0; start < n; start += len) {
      for (std::size_t j = 0; j < len / 2; ++j) {
        const auto u = a[start + j];
        const auto v = a[start + j + len / 2] * twiddle[j * stride];
        a[start + j] = u + v;
        a[start + j + len / 2] = u - v;
      }
    }
  }
}

// Unnormalized DFT of arbitrary length. The inverse flag flips the exponent
// sign only; callers divide by n themselves.
template <class Real>
std::vector<Complex<Real>> dft(std::vector<Complex<Real>> a, bool inverse) {
  const std::size_t n = a.size();
  if (n <= 1) return a;
  if (is_power_of_two(n)) {
    fft_radix2(a, inverse);
    return a;
  }
  // Bluestein: jk = (j^2 + k^2 - (k-j)^2)/2.
  const std::size_t m = next_power_of_two(2 * n - 1);
  const Real sign = inverse ? Real(1) : Real(-1);
  std::vector<Complex<Real>> chirp(n);
  for (std::size_t k = 0; k < n; ++k) {
    // k^2 mod 2n keeps the angle argument small and exact.
    const auto sq = static_cast<std::uint64_t>(k) * k % (2 * static_cast<std::uint64_t>(n));
    const Real angle = std::numbers::pi_v<Real> * Real(sq) / Real(n);
    chirp[k] = {std::cos(angle), sign * std::sin(angle)};
  }
  std::vector<Complex<Real>> x(m), y(m);
  for (std::size_t k = 0; k < n; ++k) x[k] = a[k] * chirp[k];
  y[0] = std::conj(chirp[0]);
  for (std::size_t k = 1; k < n; ++k) y[k] = y[m - k] = std::conj(chirp[k]);
  fft_radix2(x, false);
  fft_radix2(y, false);
  for (std::size_t k = 0; k < m; ++k) x[k] *= y[k];
  fft_radix2(x, true);
  const Real scale = Real(1) / Real(m);
  for (std::size_t k = 0; k < n; ++k) a[k] = x[k] * scale * chirp[k];
  return a;
}

}  // namespace detail

/// Unnormalized DCT-II: X_k = sum_l x_l cos(pi k (2l+1) / 2N).
template <class Real = double>
std::vector<Real> dct2(const std::vector<Real>& x) {
  const std::size_t n = x.size();
  if (n == 0) throw std::invalid_argument("dct2: empty input");
  std::vector<detail::Complex<Real>> v(n);
  for (std::size_t i = 0; 2 * i < n; ++i) v[i] = x[2 * i];
  for (std::size_t i = 0; 2 * i + 1 < n; ++i) v[n - 1 - i] = x[2 * i + 1];
  v = detail::dft(std::move(v), false);
  std::vector<Real> out(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real angle = -std::numbers::pi_v<Real> * Real(k) / (Real(2) * Real(n));
    out[k] = (v[k] * detail::Complex<Real>(std::cos(angle), std::sin(angle))).real();
  }
  return out;
}

/// Exact inverse of dct2 (a scaled DCT-III):
/// x_l = X_0/N + (2/N) sum_{k>=1} X_k cos(pi k (2l+1) / 2N).
template <class Real = double>
std::vector<Real> idct2(const std::vector<Real>& coeffs) {
  const std::size_t n = coeffs.size();
  if (n == 0) throw std::invalid_argument("idct2: empty input");
  std::vector<detail::Complex<Real>> v(n);
  for (std::size_t k = 0; k < n; ++k) {
    const Real mirrored = k == 0 ? Real(0) : coeffs[n - k];
    const Real angle = std::numbers::pi_v<Real> * Real(k) / (Real(2) * Real(n));
    v[k] = detail::Complex<Real>(coeffs[k], -mirrored) *
           detail::Complex<Real>(std::cos(angle), std::sin(angle));
  }
  v = detail::dft(std::move(v), true);
  std::vector<Real> out(n);
  const Real scale = Real(1) / Real(n);
  for (std::size_t i = 0; 2 * i < n; ++i) out[2 * i] = v[i].real() * scale;
  for (std::size_t i = 0; 2 * i + 1 < n; ++i) out[2 * i + 1] = v[n - 1 - i].real() * scale;
  return out;
}

/// DCT-II coefficients of a sample vector.
struct DctVector {
  std::vector<double> values;

  std::size_t size() const noexcept { return values.size(); }
  double operator[](std::size_t k) const noexcept { return values[k]; }
};

inline DctVector dct2(const SampleVector& samples) { return {dct2(samples.values())}; }

/// Interpolation data g_k = (-1)^k fhat_k / cos(pi k / 2N) on the nodes
/// z_k = cos(pi k / N), restricted to the first `count` indices.
struct TransformedData {
  std::vector<double> g;
  std::vector<double> z;
  std::size_t n_samples = 0;  // N of the underlying transform

  std::size_t count() const noexcept { return g.size(); }
};

/// Builds (g_k, z_k). With `half` only k < floor(N/2) is retained, which
/// avoids amplifying noise by the factor 1/cos(pi k / 2N) near k = N.
inline TransformedData g_vector(const DctVector& dct, bool half = false) {
  const std::size_t n = dct.size();
  if (n < 2) throw std::invalid_argument("g_vector: N must be at least 2");
  const std::size_t count = half ? n / 2 : n;
  TransformedData data;
  data.n_samples = n;
  data.g.resize(count);
  data.z.resize(count);
  const double dn = static_cast<double>(n);
  for (std::size_t k = 0; k < count; ++k) {
    const double dk = static_cast<double>(k);
    const double sign = (k % 2 == 0) ? 1.0 : -1.0;
    data.g[k] = sign * dct[k] / std::cos(std::numbers::pi * dk / (2.0 * dn));
    data.z[k] = std::cos(std::numbers::pi * dk / dn);
  }
  return data;
}

}  // namespace cossum
