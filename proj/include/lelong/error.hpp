#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lelong {

enum class ErrorCode {
  EqualPoints,
  EqualLines,
  UnsupportedDegree,
  SingularMatrix,
  ReducibleConic,
  ZeroForm,
  WeightExceeded,
  NegativeScale,
  NegativeWeight,
  NonpositiveThreshold,
  IrrationalIntersection,
  AlphaOutOfRange,
  InvalidInstance,
  CollinearPoints,
  BadAlphaPrime,
  NonUnitMass,
  FullWeightLine,
  DegenerateSeed,
  UnknownExample,
  InvalidSpec,
  GridTooLarge,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the CLI in particular) can map it to an exit status.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lelong
