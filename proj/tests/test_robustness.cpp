#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "modal/distributions.hpp"
#include "modal/mode_estimators.hpp"
#include "modal/registry.hpp"
#include "modal/robustness.hpp"
#include "oracles.hpp"

using namespace modal;

namespace {

std::vector<ReferenceDistribution> all_dists() {
  return {ReferenceDistribution::normal(), ReferenceDistribution::lognormal(), ReferenceDistribution::pareto()};
}

// Normal quartile offset, from tables.
constexpr double kQ75 = 0.6744897501960817;

}  // namespace

TEST_SUITE("robustness") {
  TEST_CASE("quantile base sample") {
    const auto q = quantile_sample(ReferenceDistribution::normal(), 3);
    REQUIRE(q.size() == 2);
    CHECK(q[0] == doctest::Approx(6.0 - kQ75).epsilon(1e-14));
    CHECK(q[1] == doctest::Approx(6.0 + kQ75).epsilon(1e-14));
    for (const auto& d : all_dists()) {
      const auto s = quantile_sample(d, 100);
      REQUIRE(s.size() == 99);
      for (std::size_t i = 1; i < s.size(); ++i) REQUIRE(s[i] > s[i - 1]);
      for (std::size_t i = 0; i < s.size(); ++i) {
        CHECK(d.cdf(s[i]) == doctest::Approx((static_cast<double>(i) + 0.5) / 99.0).epsilon(1e-10));
      }
    }
    const auto pa = quantile_sample(ReferenceDistribution::pareto(), 5);
    CHECK(pa[0] == doctest::Approx(std::pow(1.0 - 0.125, -2.0)).epsilon(1e-14));
    CHECK(pa[3] == doctest::Approx(std::pow(1.0 - 0.875, -2.0)).epsilon(1e-14));
  }

  TEST_CASE("ssc examples") {
    const auto nd = ReferenceDistribution::normal();
    const auto base = quantile_sample(nd, 100);
    const auto med = make_estimator("median");
    CHECK(std::abs(ssc(med, base, median(base))) < 1e-9);
    CHECK(ssc(make_estimator("hsm"), nd, 100, 16.0) == 0.0);
    CHECK(ssc(make_estimator("hsm"), nd, 100, -4.0) == 0.0);
    const double above = ssc(med, base, base.back() + 1.0);
    CHECK(above > 0.0);
    for (double x : {base.back() + 0.5, 50.0, 1e6, 1e12}) CHECK(ssc(med, base, x) == above);
    const double below = ssc(med, base, base.front() - 1.0);
    CHECK(below == doctest::Approx(-above).epsilon(1e-9));
  }

  TEST_CASE("the mean's curve is a line of slope one") {
    for (const auto& d : all_dists()) {
      const auto base = quantile_sample(d, 100);
      const double m = oracle::plain_mean(std::vector<double>(base.values().begin(), base.values().end()));
      const auto curve = scan_curve(make_estimator("mean"), d, 100);
      for (const auto& p : curve.grid) {
        CAPTURE(p.x);
        CHECK(p.s == doctest::Approx(p.x - m).epsilon(1e-9).scale(std::abs(m) + 1.0));
      }
    }
  }

  TEST_CASE("grid layout") {
    const CurveGridSpec spec;
    for (const auto& d : all_dists()) {
      const auto g = curve_grid(d, spec);
      REQUIRE(g.size() == 2001 + 20);
      CHECK(g[10] == doctest::Approx(d.quantile(1e-5)).epsilon(1e-12));
      CHECK(g[2010] == doctest::Approx(d.quantile(1.0 - 1e-5)).epsilon(1e-10));
      for (std::size_t i = 1; i < g.size(); ++i) REQUIRE(g[i] > g[i - 1]);
      if (d.id() == DistributionId::Normal) {
        CHECK(g[5] - g[4] == doctest::Approx(g[2015] - g[2014]).epsilon(1e-8));
      } else {
        CHECK(g[5] / g[4] == doctest::Approx(g[2015] / g[2014]).epsilon(1e-10));
        CHECK(g.front() > 0.0);
      }
    }
  }

  TEST_CASE("curve summaries follow their definitions") {
    for (const char* id : {"hsm", "median", "shorth"}) {
      for (const auto& d : all_dists()) {
        CAPTURE(id);
        CAPTURE(d.name());
        const auto c = scan_curve(make_estimator(id), d, 100);
        double gamma = 0.0;
        double rho = 0.0;
        for (const auto& p : c.grid) {
          gamma = std::max(gamma, std::abs(p.s));
          if (std::abs(p.s) > c.zero_tolerance) rho = std::max(rho, std::abs(p.x - c.center));
        }
        CHECK(c.gamma == gamma);
        CHECK(c.center == hsm(quantile_sample(d, 100)).value);
        const bool open = std::abs(c.grid.front().s) > c.zero_tolerance || std::abs(c.grid.back().s) > c.zero_tolerance;
        if (open) {
          CHECK(std::isinf(c.rho));
        } else {
          CHECK(c.rho == rho);
        }
        CHECK(c.grid.size() == 2021);
      }
    }
  }

  TEST_CASE("rejection points of the half-sample and half-range modes") {
    for (const char* id : {"hsm", "hrm"}) {
      for (const auto& d : all_dists()) {
        CAPTURE(id);
        CAPTURE(d.name());
        const auto c = scan_curve(make_estimator(id), d, 100);
        CHECK(std::isfinite(c.rho));
        CHECK(c.rho > 0.0);
        for (const auto& p : c.grid) {
          if (std::abs(p.x - c.center) > c.rho) REQUIRE(p.s == 0.0);
        }
      }
    }
  }

  TEST_CASE("the median never rejects") {
    for (const auto& d : all_dists()) {
      const auto c = scan_curve(make_estimator("median"), d, 100);
      CHECK(std::isinf(c.rho));
    }
  }

  TEST_CASE("shorth, lms and epdfm reject on the normal but not on every skewed law") {
    for (const char* id : {"shorth", "lms", "epdfm"}) {
      CAPTURE(id);
      const auto est = make_estimator(id);
      CHECK(std::isfinite(scan_curve(est, ReferenceDistribution::normal(), 100).rho));
      const bool ln = std::isinf(scan_curve(est, ReferenceDistribution::lognormal(), 100).rho);
      const bool pa = std::isinf(scan_curve(est, ReferenceDistribution::pareto(), 100).rho);
      CHECK((ln || pa));
    }
  }

  TEST_CASE("the standard power mode has an unbounded curve") {
    for (const auto& d : all_dists()) {
      CAPTURE(d.name());
      const auto est = make_estimator("standard_pm");
      CurveGridSpec narrow;
      narrow.tail = 1e-3;
      CurveGridSpec wide;
      wide.tail = 1e-8;
      const auto a = scan_curve(est, d, 100, narrow);
      const auto b = scan_curve(est, d, 100, wide);
      CHECK(std::isinf(a.rho));
      CHECK(b.gamma > a.gamma);
    }
  }

  TEST_CASE("the median is less sensitive than the half-sample mode") {
    const auto nd = ReferenceDistribution::normal();
    CHECK(scan_curve(make_estimator("median"), nd, 100).gamma < scan_curve(make_estimator("hsm"), nd, 100).gamma);
  }

  TEST_CASE("curves do not depend on the worker count") {
    const auto est = make_estimator("hsm");
    const auto a = scan_curve(est, ReferenceDistribution::lognormal(), 60, {}, 1);
    const auto b = scan_curve(est, ReferenceDistribution::lognormal(), 60, {}, 3);
    REQUIRE(a.grid.size() == b.grid.size());
    for (std::size_t i = 0; i < a.grid.size(); ++i) REQUIRE(a.grid[i].s == b.grid[i].s);
    CHECK(a.rho == b.rho);
  }

  TEST_CASE("breakdown probes") {
    std::mt19937_64 g(21);
    for (int trial = 0; trial < 100; ++trial) {
      // n counts the contaminated sample: nu outliers plus n - nu clean points.
      const std::size_t n = 10 + static_cast<std::size_t>(trial % 50);
      const std::size_t nu = (n - 1) / 2;
      const SortedSample clean(oracle::random_sample(g, n - nu, 3.0));
      for (const char* id : {"hsm", "shorth", "lms", "hrm", "median"}) {
        CAPTURE(id);
        CAPTURE(n);
        CHECK(breakdown_probe(make_estimator(id), clean, nu, 1e9).bounded);
        CHECK(breakdown_probe(make_estimator(id), clean, nu, -1e9).bounded);
      }
      CHECK_FALSE(breakdown_probe(make_estimator("mean"), clean, 1, 1e9).bounded);
      CHECK_FALSE(breakdown_probe(make_estimator("grenander"), clean, 4, 1e9, 1e-3).bounded);
      // A majority of outliers takes the half-sample mode with it.
      CHECK_FALSE(breakdown_probe(make_estimator("hsm"), clean, n + 1, 1e9).bounded);
    }
  }

  TEST_CASE("curve csv") {
    CurveGridSpec spec;
    spec.points = 3;
    spec.extension = 1;
    const auto c = scan_curve(make_estimator("median"), ReferenceDistribution::normal(), 10, spec);
    std::ostringstream out;
    write_curve_csv(out, c);
    std::istringstream in(out.str());
    std::string line;
    std::getline(in, line);
    CHECK(line == "# schema=1");
    std::getline(in, line);
    CHECK(line == "estimator,distribution,n,x,S");
    int rows = 0;
    while (std::getline(in, line)) {
      CHECK(line.rfind("median,normal,10,", 0) == 0);
      ++rows;
    }
    CHECK(rows == 5);
  }
}
