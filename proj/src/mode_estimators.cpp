#include "modal/mode_estimators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "modal/error.hpp"

namespace modal {

namespace {

std::size_t window_points(std::size_t n, double alpha) {
  std::size_t k = 0;
  if (alpha == 0.5) {
    k = (n + 1) / 2;
  } else {
    // The small offset keeps products such as (1/3) * 6 from rounding up.
    k = static_cast<std::size_t>(std::ceil(alpha * static_cast<double>(n) - 1e-9));
  }
  return std::clamp<std::size_t>(k, 1, n - 1);
}

struct HalfSampleTrace {
  double value = 0.0;
  std::size_t first = 0;
  std::size_t count = 0;
  std::size_t iterations = 0;
};

HalfSampleTrace trace_half_sample(std::span<const double> x, double alpha) {
  if (x.empty()) fail(ErrorCode::EmptySample, "mode of empty sample");
  std::size_t lo = 0;
  std::size_t n = x.size();
  std::size_t iterations = 0;
  for (;;) {
    if (n == 1) return {x[lo], lo, 1, iterations};
    if (n == 2) return {(x[lo] + x[lo + 1]) / 2.0, lo, 2, iterations};
    if (n == 3) {
      const double left = x[lo + 1] - x[lo];
      const double right = x[lo + 2] - x[lo + 1];
      if (left < right) return {(x[lo] + x[lo + 1]) / 2.0, lo, 2, iterations};
      if (right < left) return {(x[lo + 1] + x[lo + 2]) / 2.0, lo + 1, 2, iterations};
      return {x[lo + 1], lo, 3, iterations};
    }
    const std::size_t k = window_points(n, alpha);
    lo += shortest_interval(x.subspan(lo, n), k);
    n = k;
    ++iterations;
  }
}

ModeEstimate from_trace(std::span<const double> x, const HalfSampleTrace& t, const char* name) {
  return ModeEstimate{.value = t.value,
                      .estimator = name,
                      .lower = x[t.first],
                      .upper = x[t.first + t.count - 1],
                      .iterations = t.iterations};
}

void check_alpha(double alpha) {
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::AlphaOutOfRange, "fraction must lie strictly between 0 and 1");
}

double weighted_mean(std::span<const double> v, std::span<const double> w) {
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    num += w[i] * v[i];
    den += w[i];
  }
  return num / den;
}

// Every start whose k-point window ties the shortest width. Widths within a few
// ulps of the data magnitude count as tied, so a symmetric sample stays
// symmetric after rounding.
std::vector<std::size_t> shortest_half_starts(std::span<const double> x, std::size_t k) {
  const std::size_t best = shortest_interval(x, k);
  const double width = x[best + k - 1] - x[best];
  const double slack = 4.0 * std::numeric_limits<double>::epsilon() * std::max(std::abs(x.front()), std::abs(x.back()));
  std::vector<std::size_t> starts;
  for (std::size_t i = 0; i + k <= x.size(); ++i) {
    if (x[i + k - 1] - x[i] <= width + slack) starts.push_back(i);
  }
  return starts;
}

}  // namespace

double half_sample_mode(std::span<const double> sorted, double alpha) {
  check_alpha(alpha);
  return trace_half_sample(sorted, alpha).value;
}

ModeEstimate hsm(const SortedSample& s) {
  return from_trace(s.values(), trace_half_sample(s.values(), 0.5), "hsm");
}

ModeEstimate fsm(const SortedSample& s, double alpha) {
  check_alpha(alpha);
  return from_trace(s.values(), trace_half_sample(s.values(), alpha), "fsm");
}

ModeEstimate fsmw(const WeightedSortedSample& s, double p) {
  check_alpha(p);
  const WeightedSortedSample support = s.coalesced();
  const auto values = support.values();
  const auto weights = support.weights();

  std::size_t lo = 0;
  std::size_t n = values.size();
  std::size_t iterations = 0;
  auto result = [&](double value) {
    return ModeEstimate{.value = value,
                        .estimator = "fsmw",
                        .lower = values[lo],
                        .upper = values[lo + n - 1],
                        .iterations = iterations};
  };

  while (n > 2) {
    const auto v = values.subspan(lo, n);
    const auto w = weights.subspan(lo, n);
    const Window win = shortest_weighted_interval(v, w, p);
    if (win.count() == n) return result(weighted_mean(v, w));
    // Two equally wide, equally heavy pairs: keep the middle point, as the
    // unweighted three-point rule does.
    if (n == 3 && win.count() == 2 && v[2] - v[1] == v[1] - v[0] && w[0] == w[2] &&
        is_content_minimal(w, Window{0, 1}, p) && is_content_minimal(w, Window{1, 2}, p)) {
      ++iterations;
      return ModeEstimate{.value = v[1], .estimator = "fsmw", .lower = v[0], .upper = v[2], .iterations = iterations};
    }
    lo += win.first;
    n = win.count();
    ++iterations;
  }
  if (n == 2) {
    // A lone point carrying fraction p of the pair is a zero-width window; if
    // both qualify the heavier wins. Equal weights never split, which keeps the
    // unit-weight case equal to hsm.
    const auto w = weights.subspan(lo, 2);
    bool left = is_content_minimal(w, Window{0, 0}, p);
    bool right = is_content_minimal(w, Window{1, 1}, p);
    if (left && right) {
      left = w[0] > w[1];
      right = w[1] > w[0];
    }
    if (left != right) {
      lo += left ? 0 : 1;
      n = 1;
      ++iterations;
    }
  }
  if (n == 1) return result(values[lo]);
  return result(weighted_mean(values.subspan(lo, n), weights.subspan(lo, n)));
}

ModeEstimate shorth(const SortedSample& s) {
  const std::size_t h = s.size() / 2;
  const auto starts = shortest_half_starts(s.values(), h + 1);
  double total = 0.0;
  for (std::size_t m : starts) total += mean(s.values().subspan(m, h + 1));
  return ModeEstimate{.value = total / static_cast<double>(starts.size()),
                      .estimator = "shorth",
                      .lower = s[starts.front()],
                      .upper = s[starts.back() + h]};
}

ModeEstimate lms_location(const SortedSample& s) {
  const std::size_t h = s.size() / 2;
  const auto starts = shortest_half_starts(s.values(), h + 1);
  double total = 0.0;
  for (std::size_t m : starts) total += (s[m] + s[m + h]) / 2.0;
  return ModeEstimate{.value = total / static_cast<double>(starts.size()),
                      .estimator = "lms",
                      .lower = s[starts.front()],
                      .upper = s[starts.back() + h]};
}

ModeEstimate modal_interval_midpoint(const SortedSample& s, double width) {
  if (!(width > 0.0) || !std::isfinite(width)) fail(ErrorCode::NonPositiveWidth, "modal interval width must be positive");
  const auto x = s.values();
  std::size_t best = 0;
  std::size_t best_count = 0;
  std::size_t end = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (end < i) end = i;
    while (end < x.size() && x[end] <= x[i] + width) ++end;
    if (end - i > best_count) {
      best_count = end - i;
      best = i;
    }
  }
  return ModeEstimate{.value = x[best] + width / 2.0,
                      .estimator = "modal_interval",
                      .lower = x[best],
                      .upper = x[best] + width,
                      .iterations = best_count};
}

ModeEstimate hrm(const SortedSample& s) {
  const auto x = s.values();
  std::size_t lo = 0;
  std::size_t n = x.size();
  std::size_t iterations = 0;
  while (n > 2) {
    const double range = x[lo + n - 1] - x[lo];
    if (range == 0.0) break;
    const double w = range / 2.0;
    std::size_t best = lo;
    std::size_t best_count = 0;
    double best_span = std::numeric_limits<double>::infinity();
    std::size_t end = lo;
    for (std::size_t i = lo; i < lo + n; ++i) {
      if (end < i) end = i;
      while (end < lo + n && x[end] <= x[i] + w) ++end;
      const std::size_t count = end - i;
      const double span = x[end - 1] - x[i];
      if (count > best_count || (count == best_count && span < best_span)) {
        best_count = count;
        best_span = span;
        best = i;
      }
    }
    lo = best;
    n = best_count;
    ++iterations;
  }
  const double value = n == 1 || x[lo] == x[lo + n - 1] ? x[lo] : (x[lo] + x[lo + n - 1]) / 2.0;
  return ModeEstimate{.value = value, .estimator = "hrm", .lower = x[lo], .upper = x[lo + n - 1], .iterations = iterations};
}

ModeEstimate histmw(const WeightedSortedSample& s, double bin, double origin) {
  if (!(bin > 0.0) || !std::isfinite(bin)) fail(ErrorCode::NonPositiveBinWidth, "histogram bin width must be positive");
  if (!std::isfinite(origin)) fail(ErrorCode::InvalidArgument, "histogram origin must be finite");
  const auto v = s.values();
  const auto w = s.weights();
  double best_bin = 0.0;
  double best_weight = -1.0;
  std::size_t i = 0;
  while (i < v.size()) {
    const double k = std::floor((v[i] - origin) / bin);
    double content = 0.0;
    for (; i < v.size() && std::floor((v[i] - origin) / bin) == k; ++i) content += w[i];
    if (content > best_weight) {
      best_weight = content;
      best_bin = k;
    }
  }
  const double lower = origin + best_bin * bin;
  return ModeEstimate{.value = origin + (best_bin + 0.5) * bin, .estimator = "histmw", .lower = lower, .upper = lower + bin};
}

ModeEstimate grenander(const SortedSample& s, double p, int k) {
  if (!(p > 1.0) || k < 2 || !(p < static_cast<double>(k))) {
    fail(ErrorCode::ParameterOrder, "Grenander estimator needs 1 < p < k");
  }
  const auto x = s.values();
  const auto kk = static_cast<std::size_t>(k);
  if (x.size() <= kk) {
    fail(ErrorCode::ParameterOrder, "Grenander estimator needs n > k (n = " + std::to_string(x.size()) + ")");
  }
  const std::size_t terms = x.size() - kk;
  double smallest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < terms; ++i) {
    const double d = x[i + kk] - x[i];
    if (!(d > 0.0)) fail(ErrorCode::ZeroSpacing, "zero spacing x[i+k] - x[i] at i = " + std::to_string(i));
    smallest = std::min(smallest, d);
  }
  // Weights (d_min / d)^p equal d^-p up to a common factor and cannot overflow.
  double num = 0.0;
  double den = 0.0;
  for (std::size_t i = 0; i < terms; ++i) {
    const double wt = std::pow(smallest / (x[i + kk] - x[i]), p);
    num += wt * 0.5 * (x[i + kk] + x[i]);
    den += wt;
  }
  return ModeEstimate{.value = num / den, .estimator = "grenander"};
}

}  // namespace modal
