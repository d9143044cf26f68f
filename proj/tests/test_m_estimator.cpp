#include <doctest.h>

#include <cmath>
#include <random>
#include <vector>

#include "modal/distributions.hpp"
#include "modal/error.hpp"
#include "modal/m_estimator.hpp"
#include "modal/scale.hpp"
#include "modal/study.hpp"
#include "oracles.hpp"

using namespace modal;

TEST_SUITE("m_estimator") {
  TEST_CASE("psi") {
    CHECK(huber_psi(0.5, 1.5) == 0.5);
    CHECK(huber_psi(3.0, 1.5) == 1.5);
    CHECK(huber_psi(-3.0, 1.5) == -1.5);
    CHECK(huber_psi(1.5, 1.5) == 1.5);
  }

  TEST_CASE("scenario table") {
    const auto& t = init_scenarios();
    REQUIRE(t.size() == 6);
    CHECK(t[0].location == InitLocation::Mean);
    CHECK(t[0].scale == ScaleMethod::Sd);
    CHECK(t[1].location == InitLocation::Median);
    CHECK(t[1].scale == ScaleMethod::Mad);
    CHECK(t[2].location == InitLocation::Median);
    CHECK(t[2].scale == ScaleMethod::ShorthLength);
    CHECK(t[3].location == InitLocation::Hsm);
    CHECK(t[3].scale == ScaleMethod::ShorthLength);
    CHECK(t[4].location == InitLocation::Median);
    CHECK(t[4].scale == ScaleMethod::Hwhm);
    CHECK(t[5].location == InitLocation::Hsm);
    CHECK(t[5].scale == ScaleMethod::Hwhm);
    CHECK_FALSE(init_scenario('g').has_value());
  }

  TEST_CASE("initial scales") {
    std::mt19937_64 g(5);
    const auto x = oracle::random_sample(g, 41, 1.0);
    const SortedSample s(x);
    std::vector<double> dev;
    const double med = oracle::plain_median(x);
    for (double v : x) dev.push_back(std::abs(v - med));
    CHECK(m_estimate(s, *init_scenario('b')).scale == doctest::Approx(oracle::plain_median(dev)).epsilon(1e-12));
    CHECK(m_estimate(s, *init_scenario('a')).scale == doctest::Approx(oracle::plain_sd(x)).epsilon(1e-12));
    CHECK(m_estimate(s, *init_scenario('c')).scale == shorth_length(s).value);
    CHECK(m_estimate(s, *init_scenario('f')).scale == hwhm_scale(s).value);
  }

  TEST_CASE("all residuals inside the linear zone give the mean") {
    // Scenario (a) uses the sd as scale; every |x - mean| / sd is below 1.5 here.
    const SortedSample s({4.0, 4.5, 5.0, 5.5, 6.0});
    const auto r = m_estimate(s, *init_scenario('a'));
    CHECK(r.converged);
    CHECK(r.iterations <= 2);
    CHECK(r.location == doctest::Approx(5.0).epsilon(1e-14));
  }

  TEST_CASE("symmetric samples sit at their center under every scenario") {
    const SortedSample s({-3.0, -1.0, -0.5, 0.0, 0.5, 1.0, 3.0});
    for (const auto& sc : init_scenarios()) {
      CAPTURE(sc.id);
      // Exact up to the stopping rule |step| <= 1e-8 * scale.
      const auto r = m_estimate(s, sc);
      CHECK(std::abs(r.location) < 1e-7 * r.scale);
    }
  }

  TEST_CASE("degenerate initial scale is reported") {
    bool thrown = false;
    try {
      m_estimate(SortedSample({1, 1, 1, 1, 5}), *init_scenario('b'));
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::DegenerateInitialScale;
    }
    CHECK(thrown);
  }

  TEST_CASE("non-convergence is reported, not thrown") {
    std::mt19937_64 g(1);
    const SortedSample s(oracle::random_sample(g, 50));
    const auto r = m_estimate(s, *init_scenario('b'), 1.5, 1e-300, 3);
    CHECK_FALSE(r.converged);
    CHECK(r.iterations == 3);
  }

  TEST_CASE("affine equivariance of the whole pipeline") {
    std::mt19937_64 g(2);
    std::uniform_real_distribution<double> ad(0.1, 50.0);
    std::uniform_real_distribution<double> bd(-100.0, 100.0);
    for (int trial = 0; trial < 40; ++trial) {
      const auto x = oracle::random_sample(g, 40, 1.0);
      const double a = ad(g);
      const double b = bd(g);
      std::vector<double> y(x);
      for (double& v : y) v = a * v + b;
      for (const auto& sc : init_scenarios()) {
        CAPTURE(sc.id);
        const double mx = m_estimate(SortedSample(x), sc).location;
        const double my = m_estimate(SortedSample(y), sc).location;
        CHECK(my == doctest::Approx(a * mx + b).epsilon(1e-7));
      }
    }
  }

  TEST_CASE("one distant outlier moves the estimate by a bounded step") {
    std::mt19937_64 g(3);
    for (int trial = 0; trial < 40; ++trial) {
      const std::size_t n = 30 + trial;
      auto x = oracle::random_sample(g, n, 1.0);
      const auto sc = *init_scenario('b');
      const auto fit = m_estimate(SortedSample(x), sc);
      auto near = x;
      near.push_back(1e3);
      x.push_back(1e9);
      const auto far = m_estimate(SortedSample(x), sc);
      // Once clipped, the outlier's magnitude no longer matters.
      CHECK(far.location == doctest::Approx(m_estimate(SortedSample(near), sc).location).epsilon(1e-9));
      CHECK(std::abs(far.location - fit.location) < 10 * 1.5 * fit.scale / static_cast<double>(n));
    }
  }

  TEST_CASE("median and hsm starts converge together on clean symmetric data") {
    std::mt19937_64 g(4);
    for (int trial = 0; trial < 30; ++trial) {
      const SortedSample s(oracle::random_sample(g, 200, 1.0));
      const auto c = m_estimate(s, *init_scenario('c'));
      const auto d = m_estimate(s, *init_scenario('d'));
      CHECK(std::abs(c.location - d.location) <= 1e-7 * c.scale);
    }
  }

  TEST_CASE("HWHM-started estimate beats MAD-started one at n = 100 with 30% contamination") {
    StudyOptions opt;
    opt.replicates = 2000;
    opt.seed = 20240101;
    const auto res = run_m_study("bf", {100}, {0.3}, opt);
    REQUIRE(res.size() == 2);
    CHECK(res[1].rmse < res[0].rmse);
  }
}
