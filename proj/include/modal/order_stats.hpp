#pragma once

#include <cstddef>
#include <span>
#include <vector>

namespace modal {

/// Nondecreasing, finite, nonempty list of observations.
///
/// Every estimator in the library consumes this type, so the ordering and
/// finiteness checks happen exactly once, at construction.
class SortedSample {
 public:
  /// Sorts `raw`. Throws EmptySample or NonFiniteValue.
  explicit SortedSample(std::vector<double> raw);

  /// Adopts data the caller guarantees to be sorted; the order is still checked.
  static SortedSample from_sorted(std::vector<double> sorted);

  std::span<const double> values() const noexcept { return values_; }
  std::size_t size() const noexcept { return values_.size(); }
  double operator[](std::size_t i) const noexcept { return values_[i]; }
  double front() const noexcept { return values_.front(); }
  double back() const noexcept { return values_.back(); }
  double range() const noexcept { return values_.back() - values_.front(); }

 private:
  struct Trusted {};
  SortedSample(std::vector<double> sorted, Trusted) : values_(std::move(sorted)) {}

  std::vector<double> values_;
};

/// Sorted observations with strictly positive weights.
class WeightedSortedSample {
 public:
  /// Sorts (value, weight) pairs by value, stably. Throws EmptySample,
  /// NonFiniteValue, or InvalidArgument (length mismatch, weight <= 0).
  WeightedSortedSample(std::vector<double> values, std::vector<double> weights);

  /// All weights equal to one.
  static WeightedSortedSample unit(const SortedSample& s);

  std::span<const double> values() const noexcept { return values_; }
  std::span<const double> weights() const noexcept { return weights_; }
  std::size_t size() const noexcept { return values_.size(); }
  double total_weight() const noexcept { return total_; }

  /// Merges coincident values, summing their weights.
  WeightedSortedSample coalesced() const;

 private:
  WeightedSortedSample() = default;

  std::vector<double> values_;
  std::vector<double> weights_;
  double total_ = 0.0;
};

SortedSample sort_sample(std::vector<double> raw);

/// Inclusive index range [first, last] into a sorted sample (0-based).
struct Window {
  std::size_t first = 0;
  std::size_t last = 0;

  std::size_t count() const noexcept { return last - first + 1; }
  bool operator==(const Window&) const = default;
};

/// Start index of the narrowest run of `k` consecutive order statistics,
/// leftmost on ties. Requires 1 <= k <= n (KTooLarge / InvalidArgument).
std::size_t shortest_interval(std::span<const double> sorted, std::size_t k);
std::size_t shortest_interval(const SortedSample& s, std::size_t k);

/// Narrowest content-minimal window holding at least `fraction` of the total
/// weight. A window is content-minimal when dropping either endpoint takes it
/// below the threshold. Among equally narrow windows the heavier one wins,
/// then the leftmost.
Window shortest_weighted_interval(std::span<const double> values, std::span<const double> weights,
                                  double fraction);
Window shortest_weighted_interval(const WeightedSortedSample& s, double fraction);

/// True when `w` holds at least `fraction` of the total weight and dropping
/// either endpoint takes it below that threshold.
bool is_content_minimal(std::span<const double> weights, Window w, double fraction);

double median(std::span<const double> sorted);
double median(const SortedSample& s);
double mean(std::span<const double> values);
/// Sample standard deviation (n - 1 denominator); 0 for n = 1.
double standard_deviation(std::span<const double> values);
/// Normal-consistent median absolute deviation from the median.
double normal_mad(std::span<const double> sorted);

}  // namespace modal
