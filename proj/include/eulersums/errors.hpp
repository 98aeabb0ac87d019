#pragma once

#include <stdexcept>
#include <string>

namespace eulersums {

// Argument outside the mathematical domain of an operation.
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Argument sits on a pole (nonpositive integer for gamma/psi).
class PoleError : public DomainError {
 public:
  explicit PoleError(const std::string& what) : DomainError(what) {}
};

// Jets combined with different base points or truncation orders,
// or a coefficient requested beyond the truncation order.
class JetMismatch : public std::invalid_argument {
 public:
  explicit JetMismatch(const std::string& what) : std::invalid_argument(what) {}
};

// A series produced a NaN/inf term, or a tail model does not apply.
class SeriesError : public std::runtime_error {
 public:
  explicit SeriesError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace eulersums
