#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "modal/density.hpp"
#include "modal/error.hpp"
#include "modal/normal.hpp"
#include "modal/scale.hpp"
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

// Standard-normal quantiles at (i - 1/2) / n.
SortedSample unit_normal_quantiles(std::size_t n) {
  std::vector<double> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = normal_quantile((static_cast<double>(i) + 0.5) / static_cast<double>(n));
  return SortedSample::from_sorted(std::move(x));
}

}  // namespace

TEST_SUITE("scale") {
  TEST_CASE("mad") {
    CHECK(mad_normal_consistent(SortedSample({1, 1, 1})).value == 0.0);
    CHECK(mad_normal_consistent(SortedSample({0, 0, 0, 100})).value == 0.0);
    CHECK(std::abs(mad_normal_consistent(unit_normal_quantiles(1000)).value - 1.0) < 0.02);
  }

  TEST_CASE("shorth length") {
    CHECK(shorth_length(SortedSample({0, 1})).value == doctest::Approx(1.0 / 1.349).epsilon(1e-14));
    CHECK(std::abs(shorth_length(unit_normal_quantiles(1000)).value - 1.0) < 0.05);
    CHECK(code_of([] { shorth_length(SortedSample({1})); }) == ErrorCode::SampleTooSmall);
  }

  TEST_CASE("hwhm") {
    CHECK(std::abs(hwhm_scale(unit_normal_quantiles(1000)).value - 1.0) < 0.05);
    CHECK(code_of([] { hwhm_scale(SortedSample({2, 2, 2})); }) == ErrorCode::DegenerateScale);
  }

  TEST_CASE("hwhm measures the peak that holds the half-sample mode") {
    std::mt19937_64 g(1);
    std::normal_distribution<double> tall(0.0, 1.0);
    std::normal_distribution<double> short_peak(40.0, 1.0);
    std::vector<double> x;
    for (int i = 0; i < 300; ++i) x.push_back(tall(g));
    for (int i = 0; i < 100; ++i) x.push_back(short_peak(g));
    const double separation = 40.0;
    const double v = hwhm_scale(SortedSample(x)).value;
    CHECK(v < separation / 4);
    CHECK(v > 0.0);
  }

  TEST_CASE("normal consistency across sizes") {
    for (std::size_t n : {500, 1000, 2000}) {
      const auto q = unit_normal_quantiles(n);
      CAPTURE(n);
      CHECK(std::abs(mad_normal_consistent(q).value - 1.0) < 0.05);
      CHECK(std::abs(shorth_length(q).value - 1.0) < 0.05);
      CHECK(std::abs(hwhm_scale(q).value - 1.0) < 0.05);
    }
  }

  TEST_CASE("translation invariance and scale equivariance") {
    std::mt19937_64 g(2);
    std::uniform_real_distribution<double> ad(0.01, 100.0);
    std::uniform_real_distribution<double> bd(-1000.0, 1000.0);
    for (int trial = 0; trial < 100; ++trial) {
      const auto x = oracle::random_sample(g, 20 + trial, 2.0);
      const double a = ad(g);
      const double b = bd(g);
      std::vector<double> y(x);
      for (double& v : y) v = a * v + b;
      const SortedSample sx(x);
      const SortedSample sy(y);
      for (ScaleMethod m : {ScaleMethod::Mad, ScaleMethod::ShorthLength, ScaleMethod::Hwhm, ScaleMethod::Sd}) {
        CAPTURE(to_string(m));
        CHECK(scale_estimate(sy, m).value == doctest::Approx(a * scale_estimate(sx, m).value).epsilon(1e-9));
      }
    }
  }

  TEST_CASE("mad shrugs off a minority of huge outliers") {
    std::mt19937_64 g(3);
    for (int trial = 0; trial < 50; ++trial) {
      const std::size_t n = 11 + trial;
      auto x = oracle::random_sample(g, n, 1.0);
      const double before = mad_normal_consistent(SortedSample(x)).value;
      std::sort(x.begin(), x.end());
      // Replace the largest floor((n-1)/2) points: the median and the MAD
      // both stay within the span of the surviving clean points.
      const std::size_t nu = (n - 1) / 2;
      auto y = x;
      for (std::size_t j = 0; j < nu; ++j) y[n - 1 - j] = 1e9;
      const double after = mad_normal_consistent(SortedSample(y)).value;
      CHECK(std::isfinite(after));
      CHECK(after < 1.4826 * (x.back() - x.front()));
      CHECK(before >= 0.0);
    }
  }
}
