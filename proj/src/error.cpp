#include "modal/error.hpp"

namespace modal {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptySample: return "EmptySample";
    case ErrorCode::NonFiniteValue: return "NonFiniteValue";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::KTooLarge: return "KTooLarge";
    case ErrorCode::AlphaOutOfRange: return "AlphaOutOfRange";
    case ErrorCode::SampleTooSmall: return "SampleTooSmall";
    case ErrorCode::DegenerateScale: return "DegenerateScale";
    case ErrorCode::NonPositiveWidth: return "NonPositiveWidth";
    case ErrorCode::NonPositiveBandwidth: return "NonPositiveBandwidth";
    case ErrorCode::NonPositiveBinWidth: return "NonPositiveBinWidth";
    case ErrorCode::ZeroSpacing: return "ZeroSpacing";
    case ErrorCode::ParameterOrder: return "ParameterOrder";
    case ErrorCode::NonPositiveData: return "NonPositiveData";
    case ErrorCode::NegativeDiscriminant: return "NegativeDiscriminant";
    case ErrorCode::NoHalfCrossing: return "NoHalfCrossing";
    case ErrorCode::DegenerateInitialScale: return "DegenerateInitialScale";
    case ErrorCode::NonIntegralSplit: return "NonIntegralSplit";
    case ErrorCode::UnknownEstimator: return "UnknownEstimator";
    case ErrorCode::Config: return "Config";
  }
  return "Unknown";
}

}  // namespace modal
