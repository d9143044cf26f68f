#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace modal {

enum class ErrorCode {
  EmptySample,
  NonFiniteValue,
  InvalidArgument,
  KTooLarge,
  AlphaOutOfRange,
  SampleTooSmall,
  DegenerateScale,
  NonPositiveWidth,
  NonPositiveBandwidth,
  NonPositiveBinWidth,
  ZeroSpacing,
  ParameterOrder,
  NonPositiveData,
  NegativeDiscriminant,
  NoHalfCrossing,
  DegenerateInitialScale,
  NonIntegralSplit,
  UnknownEstimator,
  Config,
};

std::string_view to_string(ErrorCode code);

/// Error raised by every estimator and harness routine in this library.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& what) { throw Error(code, what); }

}  // namespace modal
