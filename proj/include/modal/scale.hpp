#pragma once

#include <string_view>

#include "modal/order_stats.hpp"

namespace modal {

enum class ScaleMethod { Mad, ShorthLength, Hwhm, Sd };

std::string_view to_string(ScaleMethod m);

struct ScaleEstimate {
  double value = 0.0;
  ScaleMethod method = ScaleMethod::Mad;
};

/// Twice the upper standard normal quartile; the shortest half of a unit normal.
inline constexpr double kShorthConsistency = 1.349;
/// Half-width at half-maximum of a unit normal density, sqrt(2 ln 2).
inline constexpr double kHwhmConsistency = 1.1774;

/// 1.4826 * median |x - median|.
ScaleEstimate mad_normal_consistent(const SortedSample& s);

/// Length of the shortest half (the shorth window) divided by 1.349.
/// Throws SampleTooSmall for n < 2.
ScaleEstimate shorth_length(const SortedSample& s);

/// Sample standard deviation.
ScaleEstimate sd_scale(const SortedSample& s);

/// Normal-consistent half-width at half-maximum of the kernel density.
///
/// Starting from the half-sample mode the density is climbed in steps of h/25
/// to the nearest local maximum, which is then polished. From there the walk
/// continues outward on each side until the density falls below half the peak;
/// the crossing is placed by linear interpolation between the last two steps.
/// The two half-widths are averaged and divided by 1.1774.
/// Throws DegenerateScale, or NoHalfCrossing if either walk leaves
/// [x1 - 5h, xn + 5h].
ScaleEstimate hwhm_scale(const SortedSample& s);

ScaleEstimate scale_estimate(const SortedSample& s, ScaleMethod method);

}  // namespace modal
