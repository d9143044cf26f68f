#include "modal/distributions.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>
#include <vector>

#include "modal/error.hpp"
#include "modal/normal.hpp"

namespace modal {

namespace {

constexpr double kNormalMean = 6.0;
constexpr double kLogMean = 1.0;
constexpr double kLogSd = 1.0;
constexpr double kOutlierQuantile = 0.9999;
constexpr double kOutlierSdFraction = 0.01;

double standard_normal_iqr() { return normal_quantile(0.75) - normal_quantile(0.25); }

}  // namespace

ReferenceDistribution ReferenceDistribution::normal() { return ReferenceDistribution(DistributionId::Normal); }
ReferenceDistribution ReferenceDistribution::lognormal() { return ReferenceDistribution(DistributionId::Lognormal); }
ReferenceDistribution ReferenceDistribution::pareto() { return ReferenceDistribution(DistributionId::Pareto); }

ReferenceDistribution ReferenceDistribution::by_name(std::string_view name) {
  if (name == "normal") return normal();
  if (name == "lognormal") return lognormal();
  if (name == "pareto") return pareto();
  fail(ErrorCode::Config, "unknown distribution '" + std::string(name) + "'");
}

std::string_view ReferenceDistribution::name() const noexcept {
  switch (id_) {
    case DistributionId::Normal: return "normal";
    case DistributionId::Lognormal: return "lognormal";
    case DistributionId::Pareto: return "pareto";
  }
  return "unknown";
}

double ReferenceDistribution::quantile(double p) const {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::InvalidArgument, "quantile probability must lie in (0, 1)");
  switch (id_) {
    case DistributionId::Normal: return kNormalMean + normal_quantile(p);
    case DistributionId::Lognormal: return std::exp(kLogMean + kLogSd * normal_quantile(p));
    case DistributionId::Pareto: {
      const double tail = 1.0 - p;
      return 1.0 / (tail * tail);
    }
  }
  return 0.0;
}

double ReferenceDistribution::cdf(double x) const {
  switch (id_) {
    case DistributionId::Normal: return normal_cdf(x - kNormalMean);
    case DistributionId::Lognormal: return x <= 0.0 ? 0.0 : normal_cdf((std::log(x) - kLogMean) / kLogSd);
    case DistributionId::Pareto: return x <= 1.0 ? 0.0 : 1.0 - 1.0 / std::sqrt(x);
  }
  return 0.0;
}

double ReferenceDistribution::pdf(double x) const {
  switch (id_) {
    case DistributionId::Normal: return normal_pdf(x - kNormalMean);
    case DistributionId::Lognormal:
      return x <= 0.0 ? 0.0 : normal_pdf((std::log(x) - kLogMean) / kLogSd) / (x * kLogSd);
    case DistributionId::Pareto: return x < 1.0 ? 0.0 : 0.5 / (x * std::sqrt(x));
  }
  return 0.0;
}

double ReferenceDistribution::mode() const {
  switch (id_) {
    case DistributionId::Normal: return kNormalMean;
    case DistributionId::Lognormal: return std::exp(kLogMean - kLogSd * kLogSd);
    case DistributionId::Pareto: return 1.0;
  }
  return 0.0;
}

double ReferenceDistribution::median() const {
  switch (id_) {
    case DistributionId::Normal: return kNormalMean;
    case DistributionId::Lognormal: return std::exp(kLogMean);
    case DistributionId::Pareto: return 4.0;
  }
  return 0.0;
}

double ReferenceDistribution::mean() const {
  switch (id_) {
    case DistributionId::Normal: return kNormalMean;
    case DistributionId::Lognormal: return std::exp(kLogMean + 0.5 * kLogSd * kLogSd);
    case DistributionId::Pareto: return std::numeric_limits<double>::infinity();
  }
  return 0.0;
}

double ReferenceDistribution::iqr() const { return quantile(0.75) - quantile(0.25); }

ContaminationSpec ContaminationSpec::for_distribution(const ReferenceDistribution& dist, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) fail(ErrorCode::InvalidArgument, "contamination fraction must lie in [0, 1)");
  return ContaminationSpec{
      .epsilon = epsilon,
      .outlier_mean = dist.quantile(kOutlierQuantile),
      .outlier_sd = kOutlierSdFraction * dist.iqr() / standard_normal_iqr(),
  };
}

std::size_t outlier_count(std::size_t n, double epsilon) {
  if (!(epsilon >= 0.0 && epsilon < 1.0)) fail(ErrorCode::InvalidArgument, "contamination fraction must lie in [0, 1)");
  const double raw = epsilon * static_cast<double>(n);
  const double rounded = std::round(raw);
  if (std::abs(raw - rounded) > 1e-9 * std::max(1.0, raw)) {
    fail(ErrorCode::NonIntegralSplit, "eps * n = " + std::to_string(raw) + " is not an integer");
  }
  return static_cast<std::size_t>(rounded);
}

SortedSample sample(const ReferenceDistribution& dist, std::size_t n, Rng& rng) {
  if (n == 0) fail(ErrorCode::EmptySample, "cannot draw an empty sample");
  std::vector<double> xs(n);
  for (double& x : xs) x = dist.draw(rng);
  return SortedSample(std::move(xs));
}

SortedSample contaminated_sample(const ReferenceDistribution& dist, std::size_t n, double epsilon, Rng& rng) {
  if (n == 0) fail(ErrorCode::EmptySample, "cannot draw an empty sample");
  const std::size_t bad = outlier_count(n, epsilon);
  const ContaminationSpec spec = ContaminationSpec::for_distribution(dist, epsilon);
  std::vector<double> xs(n);
  for (std::size_t i = 0; i < n - bad; ++i) xs[i] = dist.draw(rng);
  for (std::size_t i = n - bad; i < n; ++i) xs[i] = spec.outlier_mean + spec.outlier_sd * normal_quantile(rng.uniform());
  return SortedSample(std::move(xs));
}

}  // namespace modal
