#include "modal/robustness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <ostream>

#include "modal/error.hpp"
#include "modal/mode_estimators.hpp"
#include "modal/parallel.hpp"

namespace modal {

namespace {

SortedSample with_point(const SortedSample& base, double x) {
  std::vector<double> xs(base.values().begin(), base.values().end());
  xs.insert(std::upper_bound(xs.begin(), xs.end(), x), x);
  return SortedSample::from_sorted(std::move(xs));
}

}  // namespace

SortedSample quantile_sample(const ReferenceDistribution& dist, std::size_t n) {
  if (n < 2) fail(ErrorCode::SampleTooSmall, "quantile base sample needs n >= 2");
  const double m = static_cast<double>(n - 1);
  std::vector<double> xs(n - 1);
  for (std::size_t i = 0; i < n - 1; ++i) xs[i] = dist.quantile((static_cast<double>(i) + 0.5) / m);
  return SortedSample::from_sorted(std::move(xs));
}

double ssc(const Estimator& est, const SortedSample& base, double x) {
  const double n = static_cast<double>(base.size() + 1);
  return n * (est(with_point(base, x)) - est(base));
}

double ssc(const Estimator& est, const ReferenceDistribution& dist, std::size_t n, double x) {
  return ssc(est, quantile_sample(dist, n), x);
}

std::vector<double> curve_grid(const ReferenceDistribution& dist, const CurveGridSpec& spec) {
  if (spec.points < 2) fail(ErrorCode::InvalidArgument, "curve grid needs at least 2 points");
  if (!(spec.tail > 0.0 && spec.tail < 0.5)) fail(ErrorCode::InvalidArgument, "grid tail must lie in (0, 0.5)");
  const double lo = dist.quantile(spec.tail);
  const double hi = dist.quantile(1.0 - spec.tail);
  const bool logarithmic = dist.id() != DistributionId::Normal;
  const double a = logarithmic ? std::log(lo) : lo;
  const double b = logarithmic ? std::log(hi) : hi;
  const double step = (b - a) / static_cast<double>(spec.points - 1);

  const auto ext = static_cast<long>(spec.extension);
  const auto last = static_cast<long>(spec.points - 1);
  std::vector<double> grid;
  grid.reserve(spec.points + 2 * spec.extension);
  for (long i = -ext; i <= last + ext; ++i) {
    const double t = a + step * static_cast<double>(i);
    grid.push_back(logarithmic ? std::exp(t) : t);
  }
  return grid;
}

SensitivityCurve scan_curve(const Estimator& est, const ReferenceDistribution& dist, std::size_t n,
                            const CurveGridSpec& spec, unsigned threads) {
  const SortedSample base = quantile_sample(dist, n);
  const double t_base = est(base);
  const std::vector<double> xs = curve_grid(dist, spec);
  const double dn = static_cast<double>(n);

  SensitivityCurve curve;
  curve.estimator = est.label();
  curve.distribution = std::string(dist.name());
  curve.n = n;
  curve.center = hsm(base).value;
  curve.grid.resize(xs.size());
  parallel_for(xs.size(), threads, [&](std::size_t i) {
    curve.grid[i] = CurvePoint{xs[i], dn * (est(with_point(base, xs[i])) - t_base)};
  });

  double scale = normal_mad(base.values());
  if (!(scale > 0.0)) scale = base.range() > 0.0 ? base.range() : 1.0;
  curve.zero_tolerance = 1e-12 * dn * scale;

  for (const auto& p : curve.grid) {
    const double mag = std::abs(p.s);
    curve.gamma = std::max(curve.gamma, mag);
    if (mag > curve.zero_tolerance) curve.rho = std::max(curve.rho, std::abs(p.x - curve.center));
  }
  if (std::abs(curve.grid.front().s) > curve.zero_tolerance || std::abs(curve.grid.back().s) > curve.zero_tolerance) {
    curve.rho = std::numeric_limits<double>::infinity();
  }
  return curve;
}

BreakdownResult breakdown_probe(const Estimator& est, const SortedSample& clean, std::size_t nu, double magnitude,
                                double spread) {
  std::vector<double> xs(clean.values().begin(), clean.values().end());
  for (std::size_t j = 0; j < nu; ++j) xs.push_back(magnitude + spread * static_cast<double>(j));
  const double estimate = est(SortedSample(std::move(xs)));
  const double r = clean.range();
  const bool bounded = estimate >= clean.front() - r && estimate <= clean.back() + r;
  return BreakdownResult{bounded, estimate};
}

void write_curve_csv(std::ostream& out, const SensitivityCurve& curve) {
  const auto old_precision = out.precision(12);
  out << "# schema=1\n";
  out << "estimator,distribution,n,x,S\n";
  for (const auto& p : curve.grid) {
    out << curve.estimator << ',' << curve.distribution << ',' << curve.n << ',' << p.x << ',' << p.s << '\n';
  }
  out.precision(old_precision);
}

}  // namespace modal
