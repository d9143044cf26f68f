#include "modal/order_stats.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>

#include "modal/error.hpp"
#include "modal/normal.hpp"

namespace modal {

namespace {

void require_finite(std::span<const double> values) {
  if (values.empty()) fail(ErrorCode::EmptySample, "sample has no observations");
  for (double v : values) {
    if (!std::isfinite(v)) fail(ErrorCode::NonFiniteValue, "sample contains NaN or infinity");
  }
}

// Relative slack on content thresholds so that equal-weight samples select the
// same windows whatever the common weight is.
constexpr double kContentSlack = 1e-12;

}  // namespace

SortedSample::SortedSample(std::vector<double> raw) : values_(std::move(raw)) {
  require_finite(values_);
  std::stable_sort(values_.begin(), values_.end());
}

SortedSample SortedSample::from_sorted(std::vector<double> sorted) {
  require_finite(sorted);
  if (!std::is_sorted(sorted.begin(), sorted.end())) {
    fail(ErrorCode::InvalidArgument, "values are not in nondecreasing order");
  }
  return SortedSample(std::move(sorted), Trusted{});
}

SortedSample sort_sample(std::vector<double> raw) { return SortedSample(std::move(raw)); }

WeightedSortedSample::WeightedSortedSample(std::vector<double> values, std::vector<double> weights) {
  require_finite(values);
  if (values.size() != weights.size()) {
    fail(ErrorCode::InvalidArgument, "values and weights differ in length");
  }
  for (double w : weights) {
    if (!std::isfinite(w) || !(w > 0.0)) fail(ErrorCode::InvalidArgument, "weights must be positive and finite");
  }
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  values_.reserve(values.size());
  weights_.reserve(values.size());
  for (std::size_t i : order) {
    values_.push_back(values[i]);
    weights_.push_back(weights[i]);
  }
  total_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

WeightedSortedSample WeightedSortedSample::unit(const SortedSample& s) {
  WeightedSortedSample out;
  out.values_.assign(s.values().begin(), s.values().end());
  out.weights_.assign(s.size(), 1.0);
  out.total_ = static_cast<double>(s.size());
  return out;
}

WeightedSortedSample WeightedSortedSample::coalesced() const {
  WeightedSortedSample out;
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!out.values_.empty() && out.values_.back() == values_[i]) {
      out.weights_.back() += weights_[i];
    } else {
      out.values_.push_back(values_[i]);
      out.weights_.push_back(weights_[i]);
    }
  }
  out.total_ = total_;
  return out;
}

std::size_t shortest_interval(std::span<const double> sorted, std::size_t k) {
  const std::size_t n = sorted.size();
  if (n == 0) fail(ErrorCode::EmptySample, "shortest_interval on empty sample");
  if (k == 0) fail(ErrorCode::InvalidArgument, "window must hold at least one point");
  if (k > n) fail(ErrorCode::KTooLarge, "window of " + std::to_string(k) + " points exceeds n = " + std::to_string(n));
  std::size_t best = 0;
  double best_width = sorted[k - 1] - sorted[0];
  for (std::size_t i = 1; i + k <= n; ++i) {
    const double w = sorted[i + k - 1] - sorted[i];
    if (w < best_width) {
      best_width = w;
      best = i;
    }
  }
  return best;
}

std::size_t shortest_interval(const SortedSample& s, std::size_t k) { return shortest_interval(s.values(), k); }

Window shortest_weighted_interval(std::span<const double> values, std::span<const double> weights, double fraction) {
  const std::size_t n = values.size();
  if (n == 0) fail(ErrorCode::EmptySample, "shortest_weighted_interval on empty sample");
  if (weights.size() != n) fail(ErrorCode::InvalidArgument, "values and weights differ in length");
  if (!(fraction > 0.0 && fraction <= 1.0)) fail(ErrorCode::InvalidArgument, "content fraction must lie in (0, 1]");

  std::vector<long double> prefix(n + 1, 0.0L);
  for (std::size_t i = 0; i < n; ++i) prefix[i + 1] = prefix[i] + weights[i];
  const long double threshold = static_cast<long double>(fraction) * prefix[n] * (1.0L - kContentSlack);
  auto content = [&](std::size_t first, std::size_t last) { return prefix[last + 1] - prefix[first]; };

  Window best{0, n - 1};
  double best_width = std::numeric_limits<double>::infinity();
  long double best_content = 0.0L;
  std::size_t end = 0;
  for (std::size_t first = 0; first < n; ++first) {
    if (end < first) end = first;
    while (end < n && content(first, end) < threshold) ++end;
    if (end == n) break;
    // Right-minimal by construction; skip windows whose left endpoint is redundant.
    if (first < end && content(first + 1, end) >= threshold) continue;
    const double width = values[end] - values[first];
    const long double c = content(first, end);
    if (width < best_width || (width == best_width && c > best_content)) {
      best_width = width;
      best_content = c;
      best = Window{first, end};
    }
  }
  return best;
}

Window shortest_weighted_interval(const WeightedSortedSample& s, double fraction) {
  return shortest_weighted_interval(s.values(), s.weights(), fraction);
}

bool is_content_minimal(std::span<const double> weights, Window w, double fraction) {
  long double total = 0.0L;
  for (double x : weights) total += x;
  const long double threshold = static_cast<long double>(fraction) * total * (1.0L - kContentSlack);
  auto content = [&](std::size_t first, std::size_t last) {
    long double c = 0.0L;
    for (std::size_t i = first; i <= last; ++i) c += weights[i];
    return c;
  };
  if (content(w.first, w.last) < threshold) return false;
  if (w.first == w.last) return true;
  return content(w.first + 1, w.last) < threshold && content(w.first, w.last - 1) < threshold;
}

double median(std::span<const double> sorted) {
  const std::size_t n = sorted.size();
  if (n == 0) fail(ErrorCode::EmptySample, "median of empty sample");
  if (n % 2 == 1) return sorted[n / 2];
  return (sorted[n / 2 - 1] + sorted[n / 2]) / 2.0;
}

double median(const SortedSample& s) { return median(s.values()); }

double mean(std::span<const double> values) {
  if (values.empty()) fail(ErrorCode::EmptySample, "mean of empty sample");
  return std::accumulate(values.begin(), values.end(), 0.0) / static_cast<double>(values.size());
}

double standard_deviation(std::span<const double> values) {
  if (values.empty()) fail(ErrorCode::EmptySample, "standard deviation of empty sample");
  if (values.size() == 1) return 0.0;
  const double m = mean(values);
  double ss = 0.0;
  for (double v : values) ss += (v - m) * (v - m);
  return std::sqrt(ss / static_cast<double>(values.size() - 1));
}

double normal_mad(std::span<const double> sorted) {
  const double m = median(sorted);
  std::vector<double> dev(sorted.size());
  std::transform(sorted.begin(), sorted.end(), dev.begin(), [m](double v) { return std::abs(v - m); });
  std::sort(dev.begin(), dev.end());
  return kMadConsistency * median(dev);
}

}  // namespace modal
