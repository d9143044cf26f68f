#pragma once

#include <cstddef>
#include <optional>
#include <string>

namespace modal {

/// Result of any location (mode) estimator.
struct ModeEstimate {
  double value = 0.0;
  std::string estimator;
  /// Endpoints of the final interval, for interval-based estimators.
  std::optional<double> lower;
  std::optional<double> upper;
  std::size_t iterations = 0;
};

}  // namespace modal
