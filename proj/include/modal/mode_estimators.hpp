#pragma once

#include <span>

#include "modal/density.hpp"
#include "modal/estimate.hpp"
#include "modal/order_stats.hpp"

namespace modal {

/// Half-sample mode.
///
/// n = 1 returns x1; n = 2 the mean; n = 3 the mean of the closer pair, or the
/// middle value when both gaps are equal. For n >= 4 the narrowest window of
/// ceil(n/2) consecutive order statistics (leftmost on ties) replaces the
/// sample and the procedure repeats.
ModeEstimate hsm(const SortedSample& s);

/// Fraction-of-sample mode: the half-sample recursion with windows of
/// ceil(alpha * n) points, capped at n - 1 so that every level shrinks.
/// Throws AlphaOutOfRange unless 0 < alpha < 1.
ModeEstimate fsm(const SortedSample& s, double alpha);

/// Value-only fast path shared by hsm/fsm, for sorted data.
double half_sample_mode(std::span<const double> sorted, double alpha = 0.5);

/// Fraction-of-sample mode with weights.
///
/// Coincident values are merged first, so a doubled weight and a duplicated
/// observation are indistinguishable. Each step keeps the narrowest
/// content-minimal window holding a fraction `p` of the current content,
/// preferring the heavier of equally narrow windows. The loop ends at two or
/// fewer support points (weighted mean), or when no proper sub-window
/// qualifies (weighted mean of what is left). With three equally spaced
/// points and two equally heavy qualifying pairs the middle point is returned,
/// matching hsm's n = 3 rule. Of a final pair, a point holding fraction p of
/// the pair on its own is returned instead of the mean; if both do, the
/// heavier one, and equal weights average.
ModeEstimate fsmw(const WeightedSortedSample& s, double p);

/// Mean of the shortest half: h = floor(n/2), window of h + 1 points. When
/// several windows tie for the shortest width their means are averaged, so a
/// symmetric sample returns its center. lower/upper span all tied windows.
ModeEstimate shorth(const SortedSample& s);

/// Midpoint of the extremes of the shortest half (same windows and tie rule
/// as shorth).
ModeEstimate lms_location(const SortedSample& s);

/// Midpoint of [x_i, x_i + w] for the anchor x_i whose closed interval covers
/// the most observations, leftmost on ties.
ModeEstimate modal_interval_midpoint(const SortedSample& s, double width);

/// Half-range mode. Each step keeps the observations inside the modal interval
/// of width range/2; among intervals covering equally many points the one with
/// the narrowest span of covered points wins, then the leftmost. Stops at two
/// or fewer points and returns their mean.
ModeEstimate hrm(const SortedSample& s);

/// Center of the histogram bin [origin + k*bin, origin + (k+1)*bin) with the
/// largest summed weight, leftmost on ties.
ModeEstimate histmw(const WeightedSortedSample& s, double bin, double origin);

/// Grenander's spacing estimator M*(p, k). Requires 1 < p < k < n
/// (ParameterOrder) and no zero k-spacings (ZeroSpacing).
ModeEstimate grenander(const SortedSample& s, double p, int k);

}  // namespace modal
