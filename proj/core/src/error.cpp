#include "blobcell/error.hpp"

namespace blobcell {

std::string_view errcName(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidArgument: return "InvalidArgument";
    case Errc::NonEmptyCore: return "NonEmptyCore";
    case Errc::NotOneLine: return "NotOneLine";
    case Errc::AmbientMismatch: return "AmbientMismatch";
    case Errc::IndexOutOfRange: return "IndexOutOfRange";
    case Errc::SizeMismatch: return "SizeMismatch";
    case Errc::BoundExceeded: return "BoundExceeded";
    case Errc::ShapeMismatch: return "ShapeMismatch";
    case Errc::DuplicateLetter: return "DuplicateLetter";
    case Errc::NegativeN: return "NegativeN";
    case Errc::ConductorOverflow: return "ConductorOverflow";
    case Errc::NotInWb: return "NotInWb";
    case Errc::SpecializationInvalid: return "SpecializationInvalid";
    case Errc::WeightOutOfRange: return "WeightOutOfRange";
    case Errc::TwoNotInvertible: return "TwoNotInvertible";
    case Errc::ExposureViolation: return "ExposureViolation";
    case Errc::DividedPowerInexact: return "DividedPowerInexact";
    case Errc::NotUnitriangular: return "NotUnitriangular";
    case Errc::SingularWeight: return "SingularWeight";
    case Errc::NotReachable: return "NotReachable";
    case Errc::Overflow: return "Overflow";
    case Errc::NotInvertible: return "NotInvertible";
  }
  return "Unknown";
}

}  // namespace blobcell
