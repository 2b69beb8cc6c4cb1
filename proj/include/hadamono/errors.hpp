#pragma once

#include <stdexcept>
#include <string>

namespace hadamono {

/// Malformed or inconsistent input (bad point, space mismatch, unresolvable
/// name, parameter out of range). The CLI maps this to exit code 2.
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

/// A documented precondition was violated (e.g. maximality queried for a
/// non-monotone set).
class ContractError : public std::logic_error {
 public:
  explicit ContractError(const std::string& what) : std::logic_error(what) {}
};

/// A configured size limit was exceeded (exhaustive enumeration guards).
class LimitError : public std::runtime_error {
 public:
  explicit LimitError(const std::string& what) : std::runtime_error(what) {}
};

/// Numerical procedure detected a diagnosable failure mode (e.g. an
/// objective that keeps decreasing at every expanded bracket boundary).
class DiagnosticError : public std::runtime_error {
 public:
  explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hadamono
