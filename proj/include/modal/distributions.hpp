#pragma once

#include <cstddef>
#include <string_view>

#include "modal/order_stats.hpp"
#include "modal/random.hpp"

namespace modal {

enum class DistributionId { Normal, Lognormal, Pareto };

/// The three reference distributions: normal(6, 1), lognormal with log-mean 1
/// and log-sd 1 (mode 1), and the Pareto with quantile (1 - p)^-2 (mode 1).
class ReferenceDistribution {
 public:
  static ReferenceDistribution normal();
  static ReferenceDistribution lognormal();
  static ReferenceDistribution pareto();
  /// "normal", "lognormal" or "pareto"; throws Config otherwise.
  static ReferenceDistribution by_name(std::string_view name);

  DistributionId id() const noexcept { return id_; }
  std::string_view name() const noexcept;

  double quantile(double p) const;
  double cdf(double x) const;
  double pdf(double x) const;
  double mode() const;
  double median() const;
  /// Population mean; +infinity for the Pareto.
  double mean() const;
  double iqr() const;

  /// One inverse-CDF draw.
  double draw(Rng& rng) const { return quantile(rng.uniform()); }

 private:
  explicit ReferenceDistribution(DistributionId id) : id_(id) {}
  DistributionId id_;
};

/// Outlier model tied to a reference distribution: normal with mean at the
/// 99.99th percentile and sd equal to 1% of IQR(F) / IQR(standard normal).
struct ContaminationSpec {
  double epsilon = 0.0;
  double outlier_mean = 0.0;
  double outlier_sd = 0.0;

  static ContaminationSpec for_distribution(const ReferenceDistribution& dist, double epsilon);
};

/// Number of outliers eps * n; throws NonIntegralSplit unless it is an integer.
std::size_t outlier_count(std::size_t n, double epsilon);

SortedSample sample(const ReferenceDistribution& dist, std::size_t n, Rng& rng);

/// (1 - eps) n draws from the distribution plus eps n outliers, sorted.
SortedSample contaminated_sample(const ReferenceDistribution& dist, std::size_t n, double epsilon, Rng& rng);

}  // namespace modal
