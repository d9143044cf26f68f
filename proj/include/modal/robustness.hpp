#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>
#include <vector>

#include "modal/distributions.hpp"
#include "modal/order_stats.hpp"
#include "modal/registry.hpp"

namespace modal {

/// The n - 1 quantiles F^-1((i - 1/2) / (n - 1)), i = 1..n-1. Adding one
/// contaminating point makes a sample of size n.
SortedSample quantile_sample(const ReferenceDistribution& dist, std::size_t n);

/// n [T(base + x) - T(base)] with n = base.size() + 1.
double ssc(const Estimator& est, const SortedSample& base, double x);
double ssc(const Estimator& est, const ReferenceDistribution& dist, std::size_t n, double x);

struct CurvePoint {
  double x = 0.0;
  double s = 0.0;
};

struct CurveGridSpec {
  /// Points spanning [F^-1(tail), F^-1(1 - tail)].
  std::size_t points = 2001;
  double tail = 1e-5;
  /// Extra points continuing the spacing beyond each end.
  std::size_t extension = 10;
};

struct SensitivityCurve {
  std::string estimator;
  std::string distribution;
  std::size_t n = 0;
  std::vector<CurvePoint> grid;
  /// Base-sample HSM, the point from which rho is measured.
  double center = 0.0;
  /// Largest |x - center| with a non-zero S; +infinity when either outermost
  /// grid point still has an effect.
  double rho = 0.0;
  /// Largest |S| over the grid.
  double gamma = 0.0;
  /// |S| at or below this counts as zero.
  double zero_tolerance = 0.0;
};

/// Linear grid for the normal, logarithmic for the positive skewed laws.
std::vector<double> curve_grid(const ReferenceDistribution& dist, const CurveGridSpec& spec = {});

SensitivityCurve scan_curve(const Estimator& est, const ReferenceDistribution& dist, std::size_t n,
                            const CurveGridSpec& spec = {}, unsigned threads = 0);

struct BreakdownResult {
  bool bounded = false;
  double estimate = 0.0;
};

/// Appends nu outliers at magnitude, magnitude + spread, ... and reports
/// whether the estimate stays within [min - R, max + R] of the clean data,
/// R = clean range. spread = 0 makes the outliers coincide.
BreakdownResult breakdown_probe(const Estimator& est, const SortedSample& clean, std::size_t nu, double magnitude,
                                double spread = 0.0);

/// CSV with a `# schema=1` line and columns estimator,distribution,n,x,S.
void write_curve_csv(std::ostream& out, const SensitivityCurve& curve);

}  // namespace modal
