#include "coxbound/error.hpp"

namespace coxbound {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::AsymmetricMatrix: return "AsymmetricMatrix";
    case ErrorKind::BadDiagonal: return "BadDiagonal";
    case ErrorKind::EntryBelowTwo: return "EntryBelowTwo";
    case ErrorKind::DuplicateLabel: return "DuplicateLabel";
    case ErrorKind::BadLabel: return "BadLabel";
    case ErrorKind::RankMismatch: return "RankMismatch";
    case ErrorKind::RankTooLarge: return "RankTooLarge";
    case ErrorKind::GeneratorOutOfRange: return "GeneratorOutOfRange";
    case ErrorKind::UnknownGenerator: return "UnknownGenerator";
    case ErrorKind::NotRightAngled: return "NotRightAngled";
    case ErrorKind::DescentContainsS0: return "DescentContainsS0";
    case ErrorKind::NotIrreducible: return "NotIrreducible";
    case ErrorKind::ForbiddenCoversS: return "ForbiddenCoversS";
    case ErrorKind::ChainStartsInDescent: return "ChainStartsInDescent";
    case ErrorKind::NoSuchX: return "NoSuchX";
    case ErrorKind::HorizonTooSmall: return "HorizonTooSmall";
    case ErrorKind::InvalidRay: return "InvalidRay";
    case ErrorKind::Unstable: return "Unstable";
    case ErrorKind::DepthTooLarge: return "DepthTooLarge";
    case ErrorKind::OrderNotInfinite: return "OrderNotInfinite";
    case ErrorKind::UnknownRay: return "UnknownRay";
    case ErrorKind::BoundaryTooSmall: return "BoundaryTooSmall";
    case ErrorKind::Parse: return "Parse";
  }
  return "Unknown";
}

}  // namespace coxbound
