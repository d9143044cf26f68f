#pragma once

#include <cstddef>
#include <span>

#include "modal/estimate.hpp"
#include "modal/order_stats.hpp"

namespace modal {

/// Outcome of the transform-exponent search.
struct PmTransformFit {
  double beta = 1.0;
  /// Location of the transformed data.
  double m = 0.0;
  /// Scale of the transformed data.
  double s = 0.0;
  /// The data are divided by exp(log_scale), their geometric median, before
  /// transforming; m and s describe the rescaled data. Large |beta| would
  /// otherwise push x^beta far from 1 and lose it to cancellation in the
  /// transform, and rescaling keeps the whole fit exactly scale equivariant.
  double log_scale = 0.0;
  /// Normality score reached at `beta`.
  double r_value = 0.0;
  std::size_t evaluations = 0;
};

/// How the transformed data are summarized once beta is chosen.
enum class PmCenter {
  Robust,    // median and normal-consistent MAD
  Classical  // mean and standard deviation ("standard" PM)
};

/// t(x; beta) = (x^beta - 1) / beta, and ln x at beta = 0.
double power_transform(double x, double beta);

/// Pearson correlation between the central half of the transformed order
/// statistics and Blom normal scores Phi^-1((i - 3/8) / (n + 1/4)). All order
/// statistics are used when the central half has fewer than three. Returns
/// -infinity when the transform overflows or the transformed data are constant.
double normality_score(const SortedSample& s, double beta);

/// Exponent search: coarse grid over [-2.9, 4.1] in steps of 0.15, boundary
/// expansion by six steps while the best exponent sits near an edge, halving of
/// the step until the scores at beta -/+ step agree to 1e-4, then the vertex of
/// the parabola through the last three scores.
/// Throws NonPositiveData or DegenerateScale.
PmTransformFit pm_fit(const SortedSample& s, PmCenter center = PmCenter::Robust);

/// Mode of the back-transformed normal density N(m, s^2) for the fitted
/// exponent, times exp(log_scale).
/// Throws NegativeDiscriminant when no positive stationary point exists.
ModeEstimate pm_mode(const PmTransformFit& fit);

/// pm_mode(pm_fit(s)).
ModeEstimate pm(const SortedSample& s);
/// The PM variant that summarizes the transformed data by mean and sd.
ModeEstimate standard_pm(const SortedSample& s);

}  // namespace modal
