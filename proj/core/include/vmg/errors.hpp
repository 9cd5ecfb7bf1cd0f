#pragma once

#include <stdexcept>
#include <string>

namespace vmg {

/// Argument outside the mathematical domain of the called function.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

/// Argument sits on a pole or branch point where the function value is
/// infinite; callers switch to a limit value instead.
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

/// H_inv was handed a point of the ray L = (-inf, sqrt(3)pi/9]; the inverse
/// there is the real inverse t0_inv, not a point of Theta.
class OnRayError : public DomainError {
 public:
  explicit OnRayError(const std::string& what) : DomainError(what) {}
};

/// Two evaluation routes that must agree did not.
class ConsistencyError : public std::runtime_error {
 public:
  explicit ConsistencyError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace vmg
