#include "modal/m_estimator.hpp"

#include <cmath>

#include "modal/error.hpp"
#include "modal/mode_estimators.hpp"
#include "modal/normal.hpp"

namespace modal {

const std::array<InitScenario, 6>& init_scenarios() {
  static const std::array<InitScenario, 6> table{{
      {'a', InitLocation::Mean, ScaleMethod::Sd},
      {'b', InitLocation::Median, ScaleMethod::Mad, 1.0 / kMadConsistency},
      {'c', InitLocation::Median, ScaleMethod::ShorthLength},
      {'d', InitLocation::Hsm, ScaleMethod::ShorthLength},
      {'e', InitLocation::Median, ScaleMethod::Hwhm},
      {'f', InitLocation::Hsm, ScaleMethod::Hwhm},
  }};
  return table;
}

std::optional<InitScenario> init_scenario(char id) {
  for (const auto& sc : init_scenarios()) {
    if (sc.id == id) return sc;
  }
  return std::nullopt;
}

double huber_psi(double t, double c) {
  if (!(c > 0.0)) fail(ErrorCode::InvalidArgument, "Huber tuning constant must be positive");
  if (std::abs(t) <= c) return t;
  return t > 0.0 ? c : -c;
}

MEstimateResult m_estimate(const SortedSample& s, const InitScenario& init, double c, double tol,
                           std::size_t max_iter) {
  if (!(c > 0.0)) fail(ErrorCode::InvalidArgument, "Huber tuning constant must be positive");
  double scale = 0.0;
  try {
    scale = init.scale_factor * scale_estimate(s, init.scale).value;
  } catch (const Error& e) {
    if (e.code() == ErrorCode::DegenerateScale) fail(ErrorCode::DegenerateInitialScale, e.what());
    throw;
  }
  if (!(scale > 0.0)) fail(ErrorCode::DegenerateInitialScale, "initial scale is zero");

  double mu = 0.0;
  switch (init.location) {
    case InitLocation::Mean: mu = mean(s.values()); break;
    case InitLocation::Median: mu = median(s); break;
    case InitLocation::Hsm: mu = hsm(s).value; break;
  }

  MEstimateResult out{.location = mu, .scale = scale, .init_used = init};
  for (std::size_t iter = 0; iter < max_iter; ++iter) {
    double num = 0.0;
    double den = 0.0;
    for (double x : s.values()) {
      const double r = (x - mu) / scale;
      // psi(r)/r, with the removable singularity at r = 0 filled by 1.
      const double w = std::abs(r) <= c ? 1.0 : c / std::abs(r);
      num += w * x;
      den += w;
    }
    const double next = num / den;
    const double step = next - mu;
    mu = next;
    out.iterations = iter + 1;
    if (std::abs(step) <= tol * scale) {
      out.converged = true;
      break;
    }
  }
  out.location = mu;
  return out;
}

}  // namespace modal
