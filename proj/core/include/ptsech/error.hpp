#pragma once

#include <stdexcept>
#include <string>

namespace ptsech {

/// Base of every failure raised by the library. `name()` is the short,
/// stable identifier the CLI prints on the diagnostic stream.
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define PTSECH_DEFINE_ERROR(Type)                                     \
  class Type : public Error {                                         \
   public:                                                            \
    explicit Type(const std::string& message) : Error(#Type, message) {} \
  }

/// k = 0: the square roots defining the exponents have no usable branch.
PTSECH_DEFINE_ERROR(BranchPoint);
/// 1/z connection needed with a - b (numerically) an integer.
PTSECH_DEFINE_ERROR(DegenerateConnection);
/// Argument outside the supported domain of an operation.
PTSECH_DEFINE_ERROR(DomainError);
/// Bound-state level index out of range (n = 0 or negative).
PTSECH_DEFINE_ERROR(InvalidLevel);
PTSECH_DEFINE_ERROR(StepUnderflow);
PTSECH_DEFINE_ERROR(Overflow);
PTSECH_DEFINE_ERROR(IllConditioned);
PTSECH_DEFINE_ERROR(MatchFailure);
PTSECH_DEFINE_ERROR(NoDecayingMode);

#undef PTSECH_DEFINE_ERROR

/// Gamma function evaluated at a non-positive integer.
class PoleError : public Error {
 public:
  PoleError(int pole, const std::string& message)
      : Error("PoleError", message), pole_(pole) {}

  /// The non-positive integer that was hit.
  int pole() const noexcept { return pole_; }

 private:
  int pole_;
};

}  // namespace ptsech
