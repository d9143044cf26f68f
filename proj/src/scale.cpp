#include "modal/scale.hpp"

#include <cmath>

#include "modal/density.hpp"
#include "modal/error.hpp"
#include "modal/mode_estimators.hpp"

namespace modal {

namespace {

constexpr double kStepsPerBandwidth = 25.0;

// Walks from the peak in direction `dir` until the density drops below `half`.
double half_crossing(const KernelDensity& f, double peak, double f_peak, double half, double step, int dir,
                     double limit_lo, double limit_hi) {
  double prev = peak;
  double f_prev = f_peak;
  for (long k = 1;; ++k) {
    const double cur = peak + dir * step * static_cast<double>(k);
    if (cur < limit_lo || cur > limit_hi) fail(ErrorCode::NoHalfCrossing, "density never falls to half its peak");
    const double f_cur = f(cur);
    if (f_cur < half) return prev + (cur - prev) * (f_prev - half) / (f_prev - f_cur);
    prev = cur;
    f_prev = f_cur;
  }
}

}  // namespace

std::string_view to_string(ScaleMethod m) {
  switch (m) {
    case ScaleMethod::Mad: return "mad";
    case ScaleMethod::ShorthLength: return "shorth_length";
    case ScaleMethod::Hwhm: return "hwhm";
    case ScaleMethod::Sd: return "sd";
  }
  return "unknown";
}

ScaleEstimate mad_normal_consistent(const SortedSample& s) {
  return ScaleEstimate{normal_mad(s.values()), ScaleMethod::Mad};
}

ScaleEstimate shorth_length(const SortedSample& s) {
  if (s.size() < 2) fail(ErrorCode::SampleTooSmall, "length of the shorth needs n >= 2");
  const std::size_t h = s.size() / 2;
  const std::size_t m = shortest_interval(s, h + 1);
  return ScaleEstimate{(s[m + h] - s[m]) / kShorthConsistency, ScaleMethod::ShorthLength};
}

ScaleEstimate sd_scale(const SortedSample& s) { return ScaleEstimate{standard_deviation(s.values()), ScaleMethod::Sd}; }

ScaleEstimate hwhm_scale(const SortedSample& s) {
  const KernelDensitySpec spec = kernel_density_spec(s);
  const KernelDensity f(s.values(), spec.h);
  const double step = spec.h / kStepsPerBandwidth;
  const double limit_lo = s.front() - 5.0 * spec.h;
  const double limit_hi = s.back() + 5.0 * spec.h;

  // Hill walk from the HSM to the nearest local maximum.
  double x = hsm(s).value;
  double fx = f(x);
  const double f_right = f(x + step);
  const double f_left = f(x - step);
  int dir = 0;
  if (f_right > fx && f_right >= f_left) {
    dir = 1;
  } else if (f_left > fx) {
    dir = -1;
  }
  while (dir != 0) {
    const double next = x + dir * step;
    const double f_next = f(next);
    if (!(f_next > fx)) break;
    x = next;
    fx = f_next;
  }
  double peak = f.refine_peak(x);
  double f_peak = f(peak);
  if (!(f_peak >= fx)) {
    peak = x;
    f_peak = fx;
  }

  const double half = 0.5 * f_peak;
  const double right = half_crossing(f, peak, f_peak, half, step, +1, limit_lo, limit_hi);
  const double left = half_crossing(f, peak, f_peak, half, step, -1, limit_lo, limit_hi);
  return ScaleEstimate{0.5 * (right - left) / kHwhmConsistency, ScaleMethod::Hwhm};
}

ScaleEstimate scale_estimate(const SortedSample& s, ScaleMethod method) {
  switch (method) {
    case ScaleMethod::Mad: return mad_normal_consistent(s);
    case ScaleMethod::ShorthLength: return shorth_length(s);
    case ScaleMethod::Hwhm: return hwhm_scale(s);
    case ScaleMethod::Sd: return sd_scale(s);
  }
  fail(ErrorCode::InvalidArgument, "unknown scale method");
}

}  // namespace modal
