#include "modal/density.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <numeric>

#include "modal/error.hpp"
#include "modal/normal.hpp"

namespace modal {

namespace {

constexpr double kKernelReach = 10.0;
constexpr double kInvGolden = 0.6180339887498949;

}  // namespace

KernelDensitySpec kernel_density_spec(const SortedSample& s) {
  const double sd = standard_deviation(s.values());
  const double mad = normal_mad(s.values());
  const double sigma = std::min(sd, mad);
  if (!(sigma > 0.0)) fail(ErrorCode::DegenerateScale, "kernel bandwidth needs a positive scale (min of sd and MAD)");
  const double n = static_cast<double>(s.size());
  return KernelDensitySpec{0.9 * sigma * std::pow(n, -0.2), sigma, s.size()};
}

KernelDensity::KernelDensity(std::span<const double> sorted_values, double h)
    : values_(sorted_values.begin(), sorted_values.end()),
      total_(static_cast<double>(sorted_values.size())),
      h_(h) {
  if (values_.empty()) fail(ErrorCode::EmptySample, "density of empty sample");
  if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorCode::NonPositiveBandwidth, "bandwidth must be positive");
}

KernelDensity::KernelDensity(std::span<const double> sorted_values, std::span<const double> weights, double h)
    : values_(sorted_values.begin(), sorted_values.end()), weights_(weights.begin(), weights.end()), h_(h) {
  if (values_.empty()) fail(ErrorCode::EmptySample, "density of empty sample");
  if (weights_.size() != values_.size()) fail(ErrorCode::InvalidArgument, "values and weights differ in length");
  if (!(h > 0.0) || !std::isfinite(h)) fail(ErrorCode::NonPositiveBandwidth, "bandwidth must be positive");
  total_ = std::accumulate(weights_.begin(), weights_.end(), 0.0);
}

template <typename Fn>
void KernelDensity::for_each_kernel(double x, Fn&& fn) const {
  const double reach = kKernelReach * h_;
  const auto first = std::lower_bound(values_.begin(), values_.end(), x - reach);
  const auto last = std::upper_bound(first, values_.end(), x + reach);
  for (auto it = first; it != last; ++it) {
    const std::size_t i = static_cast<std::size_t>(it - values_.begin());
    const double z = (x - *it) / h_;
    const double k = std::exp(-0.5 * z * z);
    fn(weights_.empty() ? k : weights_[i] * k, *it);
  }
}

double KernelDensity::operator()(double x) const {
  double sum = 0.0;
  for_each_kernel(x, [&](double wk, double) { sum += wk; });
  return sum * (std::numbers::inv_sqrtpi / std::numbers::sqrt2) / (total_ * h_);
}

double KernelDensity::slope(double x) const {
  double sum = 0.0;
  for_each_kernel(x, [&](double wk, double xi) { sum += wk * (xi - x); });
  return sum;
}

double KernelDensity::polish_peak(double lo, double hi) const {
  for (int iter = 0; iter < 200; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double s = slope(mid);
    if (s > 0.0) {
      lo = mid;
    } else if (s < 0.0) {
      hi = mid;
    } else {
      return mid;
    }
  }
  return 0.5 * (lo + hi);
}

double KernelDensity::refine_peak(double x) const {
  for (double delta = 1e-7 * h_; delta <= h_; delta *= 4.0) {
    const double lo = x - delta;
    const double hi = x + delta;
    if (slope(lo) > 0.0 && slope(hi) < 0.0) return polish_peak(lo, hi);
  }
  return x;
}

double KernelDensity::argmax(std::size_t uniform_points) const {
  const double lo = values_.front();
  const double hi = values_.back();
  if (lo == hi) return lo;

  double best_x = lo;
  double best_f = -1.0;
  auto consider = [&](double x) {
    const double f = (*this)(x);
    if (f > best_f) {
      best_f = f;
      best_x = x;
    }
  };
  for (double v : values_) consider(v);
  if (uniform_points >= 2) {
    const double step = (hi - lo) / static_cast<double>(uniform_points - 1);
    for (std::size_t i = 0; i < uniform_points; ++i) consider(lo + step * static_cast<double>(i));
  }

  // Golden-section search within one bandwidth of the best grid point.
  double a = std::max(lo, best_x - h_);
  double b = std::min(hi, best_x + h_);
  double c = b - kInvGolden * (b - a);
  double d = a + kInvGolden * (b - a);
  double fc = (*this)(c);
  double fd = (*this)(d);
  for (int iter = 0; iter < 200 && (b - a) > 1e-10 * h_; ++iter) {
    if (fc >= fd) {
      b = d;
      d = c;
      fd = fc;
      c = b - kInvGolden * (b - a);
      fc = (*this)(c);
    } else {
      a = c;
      c = d;
      fc = fd;
      d = a + kInvGolden * (b - a);
      fd = (*this)(d);
    }
  }
  const double refined = std::clamp(refine_peak(0.5 * (a + b)), lo, hi);
  return (*this)(refined) > best_f ? refined : best_x;
}

double epdf(const SortedSample& s, double x) {
  const KernelDensitySpec spec = kernel_density_spec(s);
  return KernelDensity(s.values(), spec.h)(x);
}

ModeEstimate epdfm(const SortedSample& s) {
  const KernelDensitySpec spec = kernel_density_spec(s);
  const KernelDensity density(s.values(), spec.h);
  return ModeEstimate{.value = density.argmax(), .estimator = "epdfm"};
}

ModeEstimate epdfmw(const WeightedSortedSample& s, double h) {
  if (!(h > 0.0)) fail(ErrorCode::NonPositiveBandwidth, "epdfmw bandwidth must be positive");
  const KernelDensity density(s.values(), s.weights(), h);
  return ModeEstimate{.value = density.argmax(), .estimator = "epdfmw"};
}

}  // namespace modal
