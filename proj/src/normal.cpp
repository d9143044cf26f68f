#include "modal/normal.hpp"

#include <boost/math/distributions/normal.hpp>
#include <cmath>
#include <numbers>

#include "modal/error.hpp"

namespace modal {

double normal_cdf(double z) { return 0.5 * std::erfc(-z / std::numbers::sqrt2); }

double normal_quantile(double p) {
  if (!(p > 0.0 && p < 1.0)) fail(ErrorCode::InvalidArgument, "normal quantile needs p in (0, 1)");
  static const boost::math::normal_distribution<double> standard{};
  return boost::math::quantile(standard, p);
}

double normal_pdf(double z) { return std::exp(-0.5 * z * z) * (std::numbers::inv_sqrtpi / std::numbers::sqrt2); }

}  // namespace modal
