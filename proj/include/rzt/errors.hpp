#pragma once

#include <stdexcept>
#include <string>

namespace rzt {

/// Point lies outside the grid domain [-L, L)^n.
class DomainError : public std::runtime_error {
public:
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

/// Gamma evaluated at a nonpositive integer; carries the offending integer.
class GammaPoleError : public std::domain_error {
public:
  explicit GammaPoleError(long long pole)
      : std::domain_error("gamma pole at z = " + std::to_string(pole)), pole_(pole) {}
  long long pole() const noexcept { return pole_; }

private:
  long long pole_;
};

/// Operation requested on an exceptional degree lattice; the message names
/// the composite pairing to use instead.
class LatticeError : public std::domain_error {
public:
  explicit LatticeError(const std::string& what) : std::domain_error(what) {}
};

/// Kernel evaluated at a point where it is singular (x = 0 or a zero coordinate).
class SingularPointError : public std::domain_error {
public:
  explicit SingularPointError(const std::string& what) : std::domain_error(what) {}
};

/// Scaled pairing pushed a sampled evaluator outside its grid window.
class WindowError : public std::runtime_error {
public:
  explicit WindowError(const std::string& what) : std::runtime_error(what) {}
};

/// Linear system in a limit-form fit is numerically singular.
class ConditioningError : public std::runtime_error {
public:
  explicit ConditioningError(const std::string& what) : std::runtime_error(what) {}
};

/// Degenerate construction parameters (e.g. a test function that underflows).
class ParameterError : public std::invalid_argument {
public:
  explicit ParameterError(const std::string& what) : std::invalid_argument(what) {}
};

/// Configuration file failed schema validation.
class ConfigError : public std::runtime_error {
public:
  explicit ConfigError(const std::string& what) : std::runtime_error(what) {}
};

} // namespace rzt
