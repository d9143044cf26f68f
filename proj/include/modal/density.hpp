#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "modal/estimate.hpp"
#include "modal/order_stats.hpp"

namespace modal {

/// Bandwidth rule h = 0.9 * sigma * n^(-1/5), sigma = min(sd, normal-consistent MAD).
struct KernelDensitySpec {
  double h = 0.0;
  double sigma = 0.0;
  std::size_t n = 0;
};

/// Throws DegenerateScale when sigma is zero.
KernelDensitySpec kernel_density_spec(const SortedSample& s);

/// Gaussian kernel density over sorted, optionally weighted, support points.
///
/// Kernels farther than 10 bandwidths from the evaluation point are skipped;
/// their relative contribution is below 2e-22.
class KernelDensity {
 public:
  KernelDensity(std::span<const double> sorted_values, double h);
  KernelDensity(std::span<const double> sorted_values, std::span<const double> weights, double h);

  double operator()(double x) const;
  /// Sign-faithful multiple of the derivative: sum_i w_i K((x - x_i)/h) (x_i - x).
  double slope(double x) const;

  double bandwidth() const noexcept { return h_; }
  double lowest() const noexcept { return values_.front(); }
  double highest() const noexcept { return values_.back(); }

  /// Global maximizer over [lowest, highest]: the best of the support points
  /// and `uniform_points` evenly spaced points, refined by golden-section
  /// search within one bandwidth and polished by bisection on the slope.
  double argmax(std::size_t uniform_points = 512) const;

  /// Bisection on the slope inside [lo, hi]; requires slope(lo) > 0 > slope(hi).
  double polish_peak(double lo, double hi) const;

  /// Finds a bracket around a near-peak point and polishes it. Returns x
  /// unchanged when no sign change is found within one bandwidth.
  double refine_peak(double x) const;

 private:
  template <typename Fn>
  void for_each_kernel(double x, Fn&& fn) const;

  std::vector<double> values_;
  std::vector<double> weights_;
  double total_ = 0.0;
  double h_ = 0.0;
};

/// Gaussian kernel density estimate with the default bandwidth rule.
double epdf(const SortedSample& s, double x);

/// Global maximizer of the kernel density estimate.
ModeEstimate epdfm(const SortedSample& s);

/// Maximizer of the weighted kernel density with a caller-chosen bandwidth.
ModeEstimate epdfmw(const WeightedSortedSample& s, double h);

}  // namespace modal
