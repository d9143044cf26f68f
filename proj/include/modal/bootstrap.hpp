#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "modal/order_stats.hpp"
#include "modal/registry.hpp"

namespace modal {

struct BootstrapSummary {
  double estimate = 0.0;
  /// Standard deviation of the replicate estimates.
  double std_error = 0.0;
  double q1 = 0.0;
  double median_q = 0.0;
  double q3 = 0.0;
  std::size_t b = 0;
  /// Replicates dropped because the estimator failed on the resample.
  std::size_t skipped = 0;
  /// Bias-correction constant.
  double z0 = 0.0;
};

/// Bias-corrected percentile quantile of `sorted_reps` at nominal level `alpha`.
double bc_quantile(std::span<const double> sorted_reps, double z0, double alpha);

/// Bias-correction constant from the share of replicates below `estimate`,
/// ties counted half, clamped away from 0 and 1.
double bias_correction(std::span<const double> reps, double estimate);

/// b resamples of size n with replacement; replicate i uses its own
/// substream of `seed`, so the result does not depend on `threads`.
BootstrapSummary bootstrap_summary(std::span<const double> raw, const Estimator& estimator, std::size_t b,
                                   std::uint64_t seed, unsigned threads = 0);

/// 1 - 2 * (#[x == mode]/2 + #[x < mode]) / n, with exact equality.
double modal_skewness(const SortedSample& s, double mode_hat);

}  // namespace modal
