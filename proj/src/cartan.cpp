#include "krc/cartan.hpp"

#include "krc/error.hpp"

namespace krc {

CartanType::CartanType(Family f, int rank) : family(f), n(rank) {
  if (rank < 2) {
    throw Error(ErrorCode::InvalidShape, "rank parameter n must be at least 2");
  }
}

std::string CartanType::name() const {
  return (family == Family::A ? "A" : "C") + std::to_string(n);
}

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotIncreasing: return "NotIncreasing";
    case ErrorCode::LetterOutOfRange: return "LetterOutOfRange";
    case ErrorCode::AdmissibilityViolation: return "AdmissibilityViolation";
    case ErrorCode::SplitImpossible: return "SplitImpossible";
    case ErrorCode::InvalidIndex: return "InvalidIndex";
    case ErrorCode::InvalidShape: return "InvalidShape";
    case ErrorCode::ShapeTooLarge: return "ShapeTooLarge";
    case ErrorCode::ComponentCorrupt: return "ComponentCorrupt";
    case ErrorCode::NoMatchingComponent: return "NoMatchingComponent";
    case ErrorCode::TargetUnreachable: return "TargetUnreachable";
    case ErrorCode::NotPartitionContent: return "NotPartitionContent";
    case ErrorCode::HeightsNotSorted: return "HeightsNotSorted";
    case ErrorCode::OddArmSum: return "OddArmSum";
    case ErrorCode::ChargeInvariant: return "ChargeInvariant";
    case ErrorCode::NonDemazureArrow: return "NonDemazureArrow";
    case ErrorCode::BarredResidue: return "BarredResidue";
    case ErrorCode::UnsupportedType: return "UnsupportedType";
    case ErrorCode::WeightMismatch: return "WeightMismatch";
    case ErrorCode::ParseError: return "ParseError";
  }
  return "Unknown";
}

}  // namespace krc
