#pragma once

#include <stdexcept>
#include <string>

namespace qriesz {

// Violated mathematical precondition (zero inverse, non-unit axis, shape mismatch, ...).
class DomainError : public std::domain_error {
 public:
  explicit DomainError(const std::string& what) : std::domain_error(what) {}
};

// Parameter at which a closed form has a pole, e.g. csc(pi*alpha/2) at even alpha.
class SingularParameterError : public DomainError {
 public:
  explicit SingularParameterError(const std::string& what) : DomainError(what) {}
};

// Malformed or unreadable PlaneFile / PGM input.
class FormatError : public std::runtime_error {
 public:
  explicit FormatError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace qriesz
