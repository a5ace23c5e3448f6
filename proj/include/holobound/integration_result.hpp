#pragma once

#include <cstddef>
#include <string>

namespace holobound {

/// Outcome of one numerical integral.
///
/// error is a rule-doubling difference for deterministic rules and a sample
/// standard error for Monte Carlo. converged implies error <= tol * |value|
/// for the tolerance of the method that produced it.
struct IntegrationResult {
  double value = 0.0;
  double error = 0.0;
  std::string method;
  std::size_t budget_used = 0;
  bool converged = false;

  double relative_error() const;
};

}  // namespace holobound
