#include "modal/bootstrap.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "modal/error.hpp"
#include "modal/normal.hpp"
#include "modal/parallel.hpp"
#include "modal/random.hpp"

namespace modal {

double bias_correction(std::span<const double> reps, double estimate) {
  if (reps.empty()) fail(ErrorCode::EmptySample, "no bootstrap replicates");
  double below = 0.0;
  for (double r : reps) {
    if (r < estimate) {
      below += 1.0;
    } else if (r == estimate) {
      below += 0.5;
    }
  }
  const double m = static_cast<double>(reps.size());
  const double share = std::clamp(below / m, 0.5 / m, 1.0 - 0.5 / m);
  return normal_quantile(share);
}

double bc_quantile(std::span<const double> sorted_reps, double z0, double alpha) {
  if (sorted_reps.empty()) fail(ErrorCode::EmptySample, "no bootstrap replicates");
  if (!(alpha > 0.0 && alpha < 1.0)) fail(ErrorCode::InvalidArgument, "quantile level must lie in (0, 1)");
  const double level = normal_cdf(2.0 * z0 + normal_quantile(alpha));
  // Linear interpolation between order statistics.
  const double pos = level * static_cast<double>(sorted_reps.size() - 1);
  const auto lo = static_cast<std::size_t>(std::floor(pos));
  const std::size_t hi = std::min(lo + 1, sorted_reps.size() - 1);
  const double frac = pos - static_cast<double>(lo);
  return sorted_reps[lo] + frac * (sorted_reps[hi] - sorted_reps[lo]);
}

BootstrapSummary bootstrap_summary(std::span<const double> raw, const Estimator& estimator, std::size_t b,
                                   std::uint64_t seed, unsigned threads) {
  if (b < 100) fail(ErrorCode::Config, "bootstrap needs at least 100 replicates");
  const SortedSample original{std::vector<double>(raw.begin(), raw.end())};
  const std::size_t n = original.size();

  BootstrapSummary out;
  out.estimate = estimator(original);
  out.b = b;

  std::vector<double> reps(b, std::numeric_limits<double>::quiet_NaN());
  parallel_for(b, threads, [&](std::size_t i) {
    Rng rng = Rng::substream(seed, {i});
    std::vector<double> xs(n);
    for (double& x : xs) x = raw[rng.below(n)];
    try {
      reps[i] = estimator(SortedSample(std::move(xs)));
    } catch (const Error&) {
      // Left as NaN and counted below.
    }
  });
  std::erase_if(reps, [](double v) { return std::isnan(v); });
  out.skipped = b - reps.size();
  if (reps.size() < 2) fail(ErrorCode::SampleTooSmall, "too few successful bootstrap replicates");

  double sum = 0.0;
  for (double r : reps) sum += r;
  const double avg = sum / static_cast<double>(reps.size());
  double ss = 0.0;
  for (double r : reps) ss += (r - avg) * (r - avg);
  out.std_error = std::sqrt(ss / static_cast<double>(reps.size() - 1));

  out.z0 = bias_correction(reps, out.estimate);
  std::sort(reps.begin(), reps.end());
  out.q1 = bc_quantile(reps, out.z0, 0.25);
  out.median_q = bc_quantile(reps, out.z0, 0.5);
  out.q3 = bc_quantile(reps, out.z0, 0.75);
  return out;
}

double modal_skewness(const SortedSample& s, double mode_hat) {
  const auto xs = s.values();
  const auto lo = std::lower_bound(xs.begin(), xs.end(), mode_hat);
  const auto hi = std::upper_bound(lo, xs.end(), mode_hat);
  const double below = static_cast<double>(lo - xs.begin());
  const double equal = static_cast<double>(hi - lo);
  return 1.0 - 2.0 * (equal / 2.0 + below) / static_cast<double>(xs.size());
}

}  // namespace modal
