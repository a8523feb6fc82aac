#pragma once

#include <stdexcept>
#include <string>

namespace cossum {

/// Raised when a recovery algorithm cannot produce a valid parameter set
/// (rank-zero data, poles outside the admissible domain in exact mode,
/// an eigenproblem with the wrong number of finite eigenvalues, ...).
class SolverError : public std::runtime_error {
 public:
  explicit SolverError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace cossum
