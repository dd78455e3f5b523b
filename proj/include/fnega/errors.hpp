#pragma once

#include <stdexcept>
#include <string>

namespace fnega {

// Thrown when a linear-algebra step fails to meet its accuracy contract
// (non-converged eigensolver, singular solve, imaginary residue above
// tolerance, determinant underflow).
class numerical_error : public std::runtime_error {
 public:
  explicit numerical_error(const std::string& msg) : std::runtime_error(msg) {}
};

// Thrown when a brute-force computation would exceed its hard size cap.
class resource_limit_error : public std::runtime_error {
 public:
  explicit resource_limit_error(const std::string& msg) : std::runtime_error(msg) {}
};

class io_error : public std::runtime_error {
 public:
  explicit io_error(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fnega
