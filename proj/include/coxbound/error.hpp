#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace coxbound {

enum class ErrorKind {
  // system construction
  AsymmetricMatrix,
  BadDiagonal,
  EntryBelowTwo,
  DuplicateLabel,
  BadLabel,
  RankMismatch,
  RankTooLarge,
  // words and generators
  GeneratorOutOfRange,
  UnknownGenerator,
  // right-angled machinery
  NotRightAngled,
  DescentContainsS0,
  NotIrreducible,
  ForbiddenCoversS,
  ChainStartsInDescent,
  NoSuchX,
  // simulation
  HorizonTooSmall,
  InvalidRay,
  Unstable,
  DepthTooLarge,
  OrderNotInfinite,
  UnknownRay,
  // decision
  BoundaryTooSmall,
  // file format
  Parse,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library. `kind()` is stable and meant for
/// programmatic dispatch; `what()` is a human-readable diagnostic.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace coxbound
