#pragma once

#include <cstddef>
#include <cstdint>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "modal/distributions.hpp"
#include "modal/registry.hpp"

namespace modal {

struct StudyOptions {
  std::size_t replicates = 10000;
  std::uint64_t seed = 0;
  /// Strict mode aborts a cell on the first estimator failure; lenient mode
  /// records the failure and excludes that replicate.
  bool strict = true;
  unsigned threads = 0;
};

struct StudyResult {
  std::string estimator;
  std::string distribution;
  std::size_t n = 0;
  double epsilon = 0.0;
  double bias = 0.0;
  /// Standard deviation of the estimates (divisor R), so rmse^2 = bias^2 + se^2.
  double std_error = 0.0;
  double rmse = 0.0;
  /// Monte-Carlo standard error of the bias, sd(errors) / sqrt(R).
  double mc_se = 0.0;
  std::size_t replicates = 0;
  std::size_t failures = 0;
};

/// Per-replicate errors for one (distribution, n, eps) cell. Every estimator
/// sees the same samples; failed replicates hold NaN (lenient mode only).
struct CellErrors {
  std::vector<std::vector<double>> errors;  // [estimator][replicate]
  std::vector<std::size_t> failures;        // [estimator]
};

/// The population quantity an estimator's error is measured against.
double target_value(EstimatorTarget target, const ReferenceDistribution& dist);

CellErrors simulate_cell(const std::vector<Estimator>& estimators, const ReferenceDistribution& dist,
                         std::size_t n, double epsilon, const StudyOptions& options);

/// Bias, spread and RMSE of a column of errors, ignoring NaN entries.
StudyResult summarize_errors(std::span<const double> errors);

std::vector<StudyResult> run_study(const std::vector<Estimator>& estimators,
                                   const std::vector<ReferenceDistribution>& dists,
                                   const std::vector<std::size_t>& ns, const std::vector<double>& epss,
                                   const StudyOptions& options);

/// Huber M-estimator study on the normal distribution, one estimator per
/// scenario letter in `scenarios` (e.g. "abcdef").
std::vector<StudyResult> run_m_study(std::string_view scenarios, const std::vector<std::size_t>& ns,
                                     const std::vector<double>& epss, const StudyOptions& options);

/// CSV with a `# schema=1` line and columns
/// estimator,distribution,n,epsilon,bias,se,rmse,mc_se,replicates.
void write_study_csv(std::ostream& out, const std::vector<StudyResult>& results);

}  // namespace modal
