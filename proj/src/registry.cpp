#include "modal/registry.hpp"

#include <array>
#include <string>

#include "modal/density.hpp"
#include "modal/error.hpp"
#include "modal/m_estimator.hpp"
#include "modal/mode_estimators.hpp"
#include "modal/power_mode.hpp"

namespace modal {

namespace {

constexpr std::array<std::string_view, 16> kIds{
    "hsm",    "fsm",       "fsmw", "shorth", "lms", "modal_interval", "hrm",    "epdfm",
    "epdfmw", "histmw", "grenander", "pm",   "standard_pm", "median", "mean", "huber",
};

}  // namespace

std::span<const std::string_view> estimator_ids() { return kIds; }

Estimator make_estimator(std::string_view id, const EstimatorParams& prm) {
  using T = EstimatorTarget;
  const std::string name(id);
  if (id == "hsm") return {name, T::Mode, [](const SortedSample& s) { return hsm(s).value; }};
  if (id == "fsm") {
    return {name, T::Mode, [a = prm.alpha](const SortedSample& s) { return fsm(s, a).value; }};
  }
  if (id == "fsmw") {
    return {name, T::Mode,
            [p = prm.p](const SortedSample& s) { return fsmw(WeightedSortedSample::unit(s), p).value; }};
  }
  if (id == "shorth") return {name, T::Mode, [](const SortedSample& s) { return shorth(s).value; }};
  if (id == "lms") return {name, T::Mode, [](const SortedSample& s) { return lms_location(s).value; }};
  if (id == "modal_interval") {
    return {name, T::Mode,
            [w = prm.width](const SortedSample& s) { return modal_interval_midpoint(s, w).value; }};
  }
  if (id == "hrm") return {name, T::Mode, [](const SortedSample& s) { return hrm(s).value; }};
  if (id == "epdfm") return {name, T::Mode, [](const SortedSample& s) { return epdfm(s).value; }};
  if (id == "epdfmw") {
    return {name, T::Mode, [h = prm.h](const SortedSample& s) {
              const double bw = h > 0.0 ? h : kernel_density_spec(s).h;
              return epdfmw(WeightedSortedSample::unit(s), bw).value;
            }};
  }
  if (id == "histmw") {
    return {name, T::Mode, [b = prm.bin, o = prm.origin](const SortedSample& s) {
              return histmw(WeightedSortedSample::unit(s), b, o).value;
            }};
  }
  if (id == "grenander") {
    return {name, T::Mode,
            [p = prm.grenander_p, k = prm.k](const SortedSample& s) { return grenander(s, p, k).value; }};
  }
  if (id == "pm") return {name, T::Mode, [](const SortedSample& s) { return pm(s).value; }};
  if (id == "standard_pm") return {name, T::Mode, [](const SortedSample& s) { return standard_pm(s).value; }};
  if (id == "median") return {name, T::Median, [](const SortedSample& s) { return median(s); }};
  if (id == "mean") return {name, T::Mean, [](const SortedSample& s) { return mean(s.values()); }};
  if (id == "huber") {
    const auto sc = init_scenario(prm.scenario);
    if (!sc) fail(ErrorCode::Config, std::string("unknown M-estimator scenario '") + prm.scenario + "'");
    return {name + "_" + prm.scenario, T::Mode,
            [init = *sc, c = prm.c](const SortedSample& s) { return m_estimate(s, init, c).location; }};
  }
  fail(ErrorCode::UnknownEstimator, "unknown estimator '" + name + "'");
}

}  // namespace modal
