#pragma once

#include <stdexcept>
#include <string>
#include <vector>

namespace lowrank {

// A well-formed request that the mathematics refuses: a violated relation,
// a non-unit divisor, a missing precondition.
class DomainError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// An enumeration would exceed its configured size limit.
class GuardError : public DomainError {
 public:
  using DomainError::DomainError;
};

// Coefficients that break named identities; what() lists them.
class RelationError : public DomainError {
 public:
  explicit RelationError(std::vector<std::string> violated)
      : DomainError(join(violated)), violated_(std::move(violated)) {}

  const std::vector<std::string>& violated() const { return violated_; }

 private:
  static std::string join(const std::vector<std::string>& items) {
    std::string out;
    for (const auto& item : items) out += (out.empty() ? "" : "; ") + item + " violated";
    return out;
  }

  std::vector<std::string> violated_;
};

// Input that cannot be parsed into the expected shape.
class InputError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace lowrank
