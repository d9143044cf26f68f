#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>

#include "modal/order_stats.hpp"
#include "modal/scale.hpp"

namespace modal {

enum class InitLocation { Mean, Median, Hsm };

/// Starting location and scale for the M-estimator (scenarios a-f).
struct InitScenario {
  char id = 'b';
  InitLocation location = InitLocation::Median;
  ScaleMethod scale = ScaleMethod::Mad;
  /// Multiplies the scale estimate before the fit starts.
  double scale_factor = 1.0;
};

/// (a) mean/sd, (b) median/MAD, (c) median/shorth, (d) HSM/shorth,
/// (e) median/HWHM, (f) HSM/HWHM. Scenario (b) feeds the raw median absolute
/// deviation (the normal-consistent MAD divided by 1.4826) into the fit; that
/// is the variant whose contaminated-normal RMSE shows the low-contamination
/// advantage of the median/MAD start.
const std::array<InitScenario, 6>& init_scenarios();

/// Looks up a scenario by letter; nullopt for anything outside a-f.
std::optional<InitScenario> init_scenario(char id);

struct MEstimateResult {
  double location = 0.0;
  double scale = 0.0;
  std::size_t iterations = 0;
  bool converged = false;
  InitScenario init_used;
};

inline constexpr double kHuberTuning = 1.5;

/// Huber's psi: t inside [-c, c], c * sgn(t) outside.
double huber_psi(double t, double c = kHuberTuning);

/// Location M-estimate by iteratively reweighted least squares with the scale
/// held at its initial value. Iteration stops once a step is at most
/// tol * scale, or after max_iter steps (converged = false).
/// Throws DegenerateInitialScale when the initial scale is not positive.
MEstimateResult m_estimate(const SortedSample& s, const InitScenario& init, double c = kHuberTuning,
                           double tol = 1e-8, std::size_t max_iter = 200);

}  // namespace modal
