#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace blobcell {

enum class Errc {
  InvalidArgument,
  NonEmptyCore,
  NotOneLine,
  AmbientMismatch,
  IndexOutOfRange,
  SizeMismatch,
  BoundExceeded,
  ShapeMismatch,
  DuplicateLetter,
  NegativeN,
  ConductorOverflow,
  NotInWb,
  SpecializationInvalid,
  WeightOutOfRange,
  TwoNotInvertible,
  ExposureViolation,
  DividedPowerInexact,
  NotUnitriangular,
  SingularWeight,
  NotReachable,
  Overflow,
  NotInvertible,
};

std::string_view errcName(Errc code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errcName(code)) + ": " + what), code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

}  // namespace blobcell
