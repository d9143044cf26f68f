#include "modal/power_mode.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <vector>

#include "modal/error.hpp"
#include "modal/normal.hpp"

namespace modal {

namespace {

constexpr double kBetaLeft = -2.9;
constexpr double kBetaRight = 4.1;
constexpr double kBetaStep = 0.15;
constexpr int kEdgeSteps = 6;
constexpr double kScoreTolerance = 1e-4;

double transform_from_log(double log_x, double beta) {
  return beta == 0.0 ? log_x : std::expm1(beta * log_x) / beta;
}

/// Caches log(x) and the normal scores so that R(beta) costs one pass.
class NormalityScorer {
 public:
  explicit NormalityScorer(const SortedSample& s) : logs_(s.size()), scores_(s.size()) {
    const std::size_t n = s.size();
    if (n < 3) fail(ErrorCode::DegenerateScale, "power-transform fit needs at least three observations");
    if (!(s.front() > 0.0)) fail(ErrorCode::NonPositiveData, "power transform requires positive data");
    if (s.front() == s.back()) fail(ErrorCode::DegenerateScale, "power-transform fit of a constant sample");
    const double nn = static_cast<double>(n);
    for (std::size_t i = 0; i < n; ++i) {
      logs_[i] = std::log(s[i]);
      scores_[i] = normal_quantile((static_cast<double>(i + 1) - 0.375) / (nn + 0.25));
    }
    log_scale_ = (logs_[(n - 1) / 2] + logs_[n / 2]) / 2.0;
    for (double& l : logs_) l -= log_scale_;
    first_ = n / 4;
    last_ = n - n / 4;
    if (last_ - first_ < 3) {
      first_ = 0;
      last_ = n;
    }
  }

  double operator()(double beta) {
    ++evaluations_;
    const std::size_t count = last_ - first_;
    double mt = 0.0;
    double ms = 0.0;
    buffer_.resize(count);
    for (std::size_t i = 0; i < count; ++i) {
      const double t = transform_from_log(logs_[first_ + i], beta);
      if (!std::isfinite(t)) return -std::numeric_limits<double>::infinity();
      buffer_[i] = t;
      mt += t;
      ms += scores_[first_ + i];
    }
    mt /= static_cast<double>(count);
    ms /= static_cast<double>(count);
    double sxy = 0.0;
    double sxx = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < count; ++i) {
      const double dx = buffer_[i] - mt;
      const double dy = scores_[first_ + i] - ms;
      sxy += dx * dy;
      sxx += dx * dx;
      syy += dy * dy;
    }
    if (!(sxx > 0.0) || !std::isfinite(sxx)) return -std::numeric_limits<double>::infinity();
    return sxy / std::sqrt(sxx * syy);
  }

  /// Logs of the data after division by exp(log_scale()).
  std::span<const double> logs() const { return logs_; }
  double log_scale() const { return log_scale_; }
  std::size_t evaluations() const { return evaluations_; }

 private:
  std::vector<double> logs_;
  std::vector<double> scores_;
  std::vector<double> buffer_;
  std::size_t first_ = 0;
  std::size_t last_ = 0;
  std::size_t evaluations_ = 0;
  double log_scale_ = 0.0;
};

double search_beta(NormalityScorer& score) {
  double left = kBetaLeft;
  double right = kBetaRight;
  double step = kBetaStep;

  double beta0 = 1.0;
  for (int expansion = 0;; ++expansion) {
    const auto count = static_cast<int>(std::llround((right - left) / step)) + 1;
    int best = -1;
    double best_score = -std::numeric_limits<double>::infinity();
    for (int i = 0; i < count; ++i) {
      const double r = score(left + step * i);
      if (r > best_score) {
        best_score = r;
        best = i;
      }
    }
    if (best < 0) fail(ErrorCode::DegenerateScale, "normality score undefined for every exponent");
    beta0 = left + step * best;
    // Expansion is capped; a score still rising at +-20 is left at the edge.
    if (expansion >= 20) break;
    if (best <= kEdgeSteps) {
      left -= kEdgeSteps * step;
    } else if (best >= count - 1 - kEdgeSteps) {
      right += kEdgeSteps * step;
    } else {
      break;
    }
  }

  double center = beta0;
  double r1 = score(center - step);
  double r2 = score(center);
  double r3 = score(center + step);
  for (int iter = 0; iter < 60 && !(std::abs(r3 - r1) <= kScoreTolerance); ++iter) {
    step /= 2.0;
    const double lo = score(center - step);
    const double hi = score(center + step);
    double next = center;
    double best = r2;
    if (lo > best) {
      best = lo;
      next = center - step;
    }
    if (hi > best) next = center + step;
    center = next;
    r1 = score(center - step);
    r2 = score(center);
    r3 = score(center + step);
  }

  const double curvature = r1 - 2.0 * r2 + r3;
  if (!(curvature < 0.0) || !std::isfinite(curvature)) return center;
  const double vertex = center + step * (r1 - r3) / (2.0 * curvature);
  return std::clamp(vertex, center - step, center + step);
}

}  // namespace

double power_transform(double x, double beta) {
  if (!(x > 0.0)) fail(ErrorCode::NonPositiveData, "power transform requires positive data");
  return transform_from_log(std::log(x), beta);
}

double normality_score(const SortedSample& s, double beta) {
  NormalityScorer score(s);
  return score(beta);
}

PmTransformFit pm_fit(const SortedSample& s, PmCenter center) {
  NormalityScorer score(s);
  const double beta = search_beta(score);

  std::vector<double> t(s.size());
  const auto logs = score.logs();
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = transform_from_log(logs[i], beta);
  // The transform is increasing, so t is already sorted.
  PmTransformFit fit;
  fit.beta = beta;
  fit.log_scale = score.log_scale();
  if (center == PmCenter::Robust) {
    fit.m = median(t);
    fit.s = normal_mad(t);
  } else {
    fit.m = mean(t);
    fit.s = standard_deviation(t);
  }
  if (!std::isfinite(fit.m) || !std::isfinite(fit.s)) fail(ErrorCode::DegenerateScale, "transformed data overflow");
  fit.r_value = score(beta);
  fit.evaluations = score.evaluations();
  return fit;
}

ModeEstimate pm_mode(const PmTransformFit& fit) {
  const double beta = fit.beta;
  const double m = fit.m;
  const double s2 = fit.s * fit.s;
  if (beta == 0.0) return ModeEstimate{.value = std::exp(m - s2 + fit.log_scale), .estimator = "pm"};

  // Stationary points of the back-transformed density solve
  // u^2 - (1 + beta m) u - beta (beta - 1) s^2 = 0 with u = x^beta.
  const double a = 1.0 + beta * m;
  const double disc = a * a + 4.0 * beta * (beta - 1.0) * s2;
  if (!(disc >= 0.0)) fail(ErrorCode::NegativeDiscriminant, "back-transformed density has no stationary point");
  // u - 1 written without cancellation so that beta -> 0 reaches exp(m - s^2).
  const double disc_minus_one = 2.0 * beta * m + beta * beta * m * m + 4.0 * beta * (beta - 1.0) * s2;
  const double u_minus_one = 0.5 * (beta * m + disc_minus_one / (std::sqrt(disc) + 1.0));
  if (!(u_minus_one > -1.0)) fail(ErrorCode::NegativeDiscriminant, "no positive stationary point");
  const double value = std::exp(std::log1p(u_minus_one) / beta + fit.log_scale);
  if (!std::isfinite(value)) fail(ErrorCode::NegativeDiscriminant, "mode of the back-transformed density overflows");
  return ModeEstimate{.value = value, .estimator = "pm"};
}

ModeEstimate pm(const SortedSample& s) { return pm_mode(pm_fit(s, PmCenter::Robust)); }

ModeEstimate standard_pm(const SortedSample& s) {
  ModeEstimate out = pm_mode(pm_fit(s, PmCenter::Classical));
  out.estimator = "standard_pm";
  return out;
}

}  // namespace modal
