#pragma once

// Pieces shared by the ESPRIT and ESPIRA solvers: the result type, the policy
// that turns computed eigenvalues into admissible cosines cos(phi h), and the
// Vandermonde least-squares solve for the coefficients.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <sstream>
#include <string>
#include <vector>

#include "cossum/error.hpp"
#include "cossum/model.hpp"
#include "cossum/numerics.hpp"

namespace cossum {

struct Recovery {
  CosineSum sum;
  std::vector<std::string> diagnostics;
  bool converged = true;
};

/// How eigenvalues that should equal cos(phi_j h) are mapped to the real line.
/// Values with |imag| <= imag_tol (1 + |real|) keep their real part; real parts
/// within domain_tol of [-1, 1] are clamped into it. Anything else is an error
/// in exact mode and is dropped with a diagnostic in noisy mode.
struct PolePolicy {
  bool noisy = false;
  double imag_tol = 1e-6;
  double domain_tol = 1e-8;
};

inline std::vector<double> admissible_cosines(const std::vector<Complex>& values,
                                              const PolePolicy& policy,
                                              std::vector<std::string>& diagnostics) {
  std::vector<double> out;
  out.reserve(values.size());
  for (const auto& v : values) {
    std::ostringstream msg;
    msg.precision(17);
    if (std::abs(v.imag()) > policy.imag_tol * (1.0 + std::abs(v.real()))) {
      msg << "complex eigenvalue " << v.real() << (v.imag() < 0 ? "" : "+") << v.imag() << "i";
      if (!policy.noisy) throw SolverError(msg.str() + " in exact mode");
      diagnostics.push_back(msg.str() + " dropped");
      continue;
    }
    double c = v.real();
    if (c > 1.0 + policy.domain_tol || c < -1.0 - policy.domain_tol) {
      msg << "eigenvalue " << c << " outside [-1, 1]";
      if (!policy.noisy) throw SolverError(msg.str() + " in exact mode");
      diagnostics.push_back(msg.str() + " dropped");
      continue;
    }
    if (c > 1.0 || c < -1.0) {
      msg << "eigenvalue " << c << " clamped into [-1, 1]";
      diagnostics.push_back(msg.str());
      c = std::clamp(c, -1.0, 1.0);
    }
    out.push_back(c);
  }
  return out;
}

/// phi_j = arccos(c_j) / h.
inline std::vector<double> frequencies_from_cosines(const std::vector<double>& cosines, double h) {
  std::vector<double> phi(cosines.size());
  for (std::size_t j = 0; j < cosines.size(); ++j) phi[j] = std::acos(cosines[j]) / h;
  return phi;
}

/// Generalized Vandermonde matrix V(k, j) = cos(phi_j h (2k+1)/2), k < N.
inline Matrix cosine_vandermonde(const std::vector<double>& phi, const SamplingGrid& grid) {
  Matrix v(static_cast<Eigen::Index>(grid.size()), static_cast<Eigen::Index>(phi.size()));
  for (Eigen::Index k = 0; k < v.rows(); ++k)
    for (Eigen::Index j = 0; j < v.cols(); ++j)
      v(k, j) = std::cos(phi[static_cast<std::size_t>(j)] * grid.node(k));
  return v;
}

/// Least-squares coefficients gamma for fixed frequencies.
inline std::vector<double> vandermonde_coefficients(const std::vector<double>& phi,
                                                    const SampleVector& samples) {
  if (phi.empty()) return {};
  const Vector rhs = Eigen::Map<const Vector>(samples.values().data(),
                                              static_cast<Eigen::Index>(samples.size()));
  const Vector gamma = least_squares(cosine_vandermonde(phi, samples.grid()), rhs);
  return {gamma.data(), gamma.data() + gamma.size()};
}

/// Sorts frequencies and removes near-duplicates (|phi_i - phi_j| < rel_tol K),
/// keeping the first of each cluster.
inline std::vector<double> distinct_frequencies(std::vector<double> phi, double bound,
                                                std::vector<std::string>& diagnostics,
                                                double rel_tol = 1e-8) {
  std::sort(phi.begin(), phi.end());
  std::vector<double> out;
  for (double p : phi) {
    if (!out.empty() && std::abs(p - out.back()) < rel_tol * bound) {
      std::ostringstream msg;
      msg.precision(17);
      msg << "duplicate frequency " << p << " merged";
      diagnostics.push_back(msg.str());
      continue;
    }
    out.push_back(p);
  }
  return out;
}

}  // namespace cossum
