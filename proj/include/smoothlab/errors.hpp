#pragma once

#include <stdexcept>
#include <string>

namespace smoothlab {

// Bad input: out-of-regime (p, alpha), negative degree, |t| >= pi, ...
class ValidationError : public std::invalid_argument {
 public:
  explicit ValidationError(const std::string& what) : std::invalid_argument(what) {}
};

// A computation ran but its result cannot be trusted.
class NumericalError : public std::runtime_error {
 public:
  explicit NumericalError(const std::string& what) : std::runtime_error(what) {}
};

[[noreturn]] void fail_validation(const std::string& what);
[[noreturn]] void fail_numerical(const std::string& what);

}  // namespace smoothlab
