#pragma once

namespace modal {

/// Normal-consistency factor for the MAD, 1 / Phi^-1(3/4).
inline constexpr double kMadConsistency = 1.4826;

/// Standard normal CDF.
double normal_cdf(double z);
/// Standard normal quantile; p must lie in (0, 1).
double normal_quantile(double p);
/// Standard normal density.
double normal_pdf(double z);

}  // namespace modal
