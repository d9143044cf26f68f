#pragma once

#include <functional>
#include <span>
#include <string>
#include <string_view>

#include "modal/order_stats.hpp"

namespace modal {

/// What an estimator's error is measured against in simulation studies.
enum class EstimatorTarget { Mode, Median, Mean };

/// Tuning knobs shared by every estimator; each one reads only its own.
struct EstimatorParams {
  double alpha = 0.5;       // fsm fraction
  double p = 0.06;          // fsmw fraction
  double bin = 0.0;         // histmw bin width (required)
  double origin = 0.0;      // histmw bin origin
  double h = 0.0;           // epdfmw bandwidth; <= 0 selects the rule-of-thumb bandwidth
  double width = 0.0;       // modal interval width (required)
  double grenander_p = 2.0;
  int k = 3;
  char scenario = 'f';      // M-estimator initial values
  double c = 1.5;           // Huber tuning constant
};

/// A pure, thread-safe location estimator over sorted samples.
class Estimator {
 public:
  using Fn = std::function<double(const SortedSample&)>;

  Estimator(std::string label, EstimatorTarget target, Fn fn)
      : label_(std::move(label)), target_(target), fn_(std::move(fn)) {}

  const std::string& label() const noexcept { return label_; }
  EstimatorTarget target() const noexcept { return target_; }
  double operator()(const SortedSample& s) const { return fn_(s); }

 private:
  std::string label_;
  EstimatorTarget target_;
  Fn fn_;
};

/// Builds an estimator by id; throws UnknownEstimator for unrecognized ids.
/// Weighted estimators (fsmw, histmw, epdfmw) run with unit weights here.
Estimator make_estimator(std::string_view id, const EstimatorParams& params = {});

/// All ids accepted by make_estimator.
std::span<const std::string_view> estimator_ids();

}  // namespace modal
