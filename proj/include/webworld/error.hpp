#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace webworld {

enum class ErrorKind {
  PegOrderViolation,
  HeightNotPermutation,
  DuplicateSlot,
  PegOutOfRange,
  EdgeNotInDiagram,
  ArityMismatch,
  LengthMismatch,
  NotSurjective,
  BadRange,
  WorldTooLarge,
  DifferentWorlds,
  RepeatedBlocks,
  LabelNotOne,
  SeriesTruncationTooSmall,
  BoundsTooLarge,
  DimensionMismatch,
  IsolatedPeg,
  NotTransitive,
  InvalidMatrix,
  ParseError,
};

std::string_view to_string(ErrorKind kind);

class WebError : public std::runtime_error {
 public:
  WebError(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace webworld
