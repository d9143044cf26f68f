#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "modal/distributions.hpp"
#include "modal/error.hpp"
#include "modal/power_mode.hpp"
#include "modal/robustness.hpp"
#include "oracles.hpp"

using namespace modal;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

// Best score over a fine grid of exponents.
double best_grid_score(const SortedSample& s, double lo, double hi, double step) {
  double best = -INFINITY;
  for (double b = lo; b <= hi + 1e-12; b += step) best = std::max(best, normality_score(s, b));
  return best;
}

double grid_argmax_beta(const SortedSample& s, double lo, double hi, double step) {
  double best = -INFINITY;
  double arg = lo;
  for (double b = lo; b <= hi + 1e-12; b += step) {
    const double r = normality_score(s, b);
    if (r > best) {
      best = r;
      arg = b;
    }
  }
  return arg;
}

// Log density of X when (X^beta - 1)/beta ~ N(m, s^2).
double back_transformed_log_density(double x, double beta, double m, double s) {
  const double t = power_transform(x, beta);
  return -0.5 * (t - m) * (t - m) / (s * s) + (beta - 1.0) * std::log(x);
}

}  // namespace

TEST_SUITE("power_mode") {
  TEST_CASE("transform family") {
    CHECK(power_transform(2.0, 0.0) == doctest::Approx(std::log(2.0)).epsilon(1e-15));
    CHECK(power_transform(3.5, 1.0) == doctest::Approx(2.5).epsilon(1e-15));
    CHECK(power_transform(2.0, 1e-9) == doctest::Approx(std::log(2.0)).epsilon(1e-8));
    CHECK(power_transform(4.0, 0.5) == doctest::Approx(2.0).epsilon(1e-15));
  }

  TEST_CASE("score is invariant to rescaling the data") {
    std::mt19937_64 g(2);
    std::lognormal_distribution<double> d(0.0, 0.5);
    std::vector<double> x(80);
    for (double& v : x) v = d(g);
    std::vector<double> y(x);
    for (double& v : y) v *= 3.7;
    for (double beta : {-1.5, -0.3, 0.0, 0.4, 1.0, 2.2}) {
      CHECK(normality_score(SortedSample(x), beta) ==
            doctest::Approx(normality_score(SortedSample(y), beta)).epsilon(1e-9));
    }
  }

  TEST_CASE("fit on normal quantiles lands near the identity") {
    const auto q = quantile_sample(ReferenceDistribution::normal(), 101);
    const auto fit = pm_fit(q);
    CHECK(std::abs(fit.beta - 1.0) < 0.5);
    CHECK(fit.r_value >= best_grid_score(q, -2.9, 4.1, 0.01) - 1e-4);
    CHECK(std::abs(fit.beta - grid_argmax_beta(q, -2.9, 4.1, 0.01)) < 0.1);
  }

  TEST_CASE("fit on lognormal quantiles lands near the log") {
    const auto q = quantile_sample(ReferenceDistribution::lognormal(), 101);
    const auto fit = pm_fit(q);
    CHECK(std::abs(fit.beta) < 0.5);
    CHECK(fit.r_value >= best_grid_score(q, -2.9, 4.1, 0.01) - 1e-4);
    CHECK(std::abs(fit.beta - grid_argmax_beta(q, -2.9, 4.1, 0.01)) < 0.1);
    CHECK(std::abs(pm(q).value - 1.0) < 0.3);
  }

  TEST_CASE("fit summaries are the robust location and scale of the transformed data") {
    const auto q = quantile_sample(ReferenceDistribution::lognormal(), 52);
    const auto fit = pm_fit(q);
    std::vector<double> t;
    // 51 points: the geometric median is the middle observation.
    CHECK(fit.log_scale == std::log(q[25]));
    for (double v : q.values()) t.push_back(power_transform(v / q[25], fit.beta));
    const double med = oracle::plain_median(t);
    std::vector<double> dev;
    for (double v : t) dev.push_back(std::abs(v - med));
    CHECK(fit.m == doctest::Approx(med).epsilon(1e-12));
    CHECK(fit.s == doctest::Approx(1.4826 * oracle::plain_median(dev)).epsilon(1e-12));
    CHECK(fit.s >= 0.0);

    const auto classical = pm_fit(q, PmCenter::Classical);
    CHECK(classical.beta == fit.beta);
    CHECK(classical.m == doctest::Approx(oracle::plain_mean(t)).epsilon(1e-12));
    CHECK(classical.s == doctest::Approx(oracle::plain_sd(t)).epsilon(1e-12));
  }

  TEST_CASE("mode of the back-transformed normal") {
    CHECK(pm_mode(PmTransformFit{.beta = 1.0, .m = 2.5, .s = 0.7}).value == doctest::Approx(3.5).epsilon(1e-14));
    CHECK(pm_mode(PmTransformFit{.beta = 0.0, .m = 1.0, .s = 1.0}).value == doctest::Approx(1.0).epsilon(1e-14));

    struct Case {
      double beta, m, s;
    };
    for (const Case c : {Case{0.4, 2.0, 0.5}, Case{-0.5, 0.8, 0.3}, Case{2.0, 3.0, 1.2}, Case{0.05, 1.0, 0.8},
                         Case{-1.3, 0.2, 0.1}}) {
      CAPTURE(c.beta);
      const double got = pm_mode(PmTransformFit{.beta = c.beta, .m = c.m, .s = c.s}).value;
      auto f = [&](double x) { return back_transformed_log_density(x, c.beta, c.m, c.s); };
      const double want = oracle::golden_max(f, got / 3.0, got * 3.0, 1e-12);
      CHECK(got == doctest::Approx(want).epsilon(1e-6));
    }
  }

  TEST_CASE("invalid fits and samples") {
    CHECK(code_of([] { pm_mode(PmTransformFit{.beta = 0.5, .m = -1.5, .s = 1.0}); }) ==
          ErrorCode::NegativeDiscriminant);
    CHECK(code_of([] { pm(SortedSample({1.0, -2.0, 3.0, 4.0})); }) == ErrorCode::NonPositiveData);
    CHECK(code_of([] { pm(SortedSample({2.0, 2.0, 2.0, 2.0})); }) == ErrorCode::DegenerateScale);
    CHECK(code_of([] { pm(SortedSample({1.0, 2.0})); }) == ErrorCode::DegenerateScale);
  }

  TEST_CASE("extreme exponents keep the fit scale equivariant") {
    // Small samples often fit |beta| > 5, where a raw x^beta would underflow
    // relative to 1 for large data.
    std::mt19937_64 g(6);
    std::lognormal_distribution<double> d(1.0, 0.5);
    std::uniform_real_distribution<double> logscale(-2.0, 2.0);
    int extreme = 0;
    for (int trial = 0; trial < 400; ++trial) {
      std::vector<double> x(10 + trial % 8);
      for (double& v : x) v = d(g);
      const double a = std::pow(10.0, logscale(g));
      std::vector<double> y(x);
      for (double& v : y) v *= a;
      const auto fx = pm_fit(SortedSample(x));
      const auto fy = pm_fit(SortedSample(y));
      if (std::abs(fx.beta) > 5.0) ++extreme;
      CHECK(fy.beta == doctest::Approx(fx.beta).epsilon(1e-9));
      CHECK(pm_mode(fy).value == doctest::Approx(a * pm_mode(fx).value).epsilon(1e-9));
      CHECK(standard_pm(SortedSample(y)).value == doctest::Approx(a * standard_pm(SortedSample(x)).value).epsilon(1e-9));
    }
    CHECK(extreme > 10);
  }

  TEST_CASE("pm is scale equivariant") {
    std::mt19937_64 g(4);
    std::lognormal_distribution<double> d(1.0, 0.6);
    for (int trial = 0; trial < 50; ++trial) {
      std::vector<double> x(60);
      for (double& v : x) v = d(g);
      std::vector<double> y(x);
      const double a = 0.1 + trial * 0.37;
      for (double& v : y) v *= a;
      const double base = pm(SortedSample(x)).value;
      CHECK(pm(SortedSample(y)).value == doctest::Approx(a * base).epsilon(1e-9));
    }
  }
}
