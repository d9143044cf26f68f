#include "modal/vertex.hpp"

#include <cmath>
#include <limits>

#include "modal/density.hpp"
#include "modal/error.hpp"
#include "modal/mode_estimators.hpp"
#include "modal/normal.hpp"

namespace modal {

namespace {

double exponential(Rng& rng, double mean) { return -mean * std::log(rng.uniform()); }

void emit_tracks(VertexEvent& ev, double z, std::size_t count, double pt_mean, const VertexConfig& cfg, Rng& rng) {
  for (std::size_t i = 0; i < count; ++i) {
    const double pt = exponential(rng, pt_mean);
    const double dz = cfg.smear > 0.0 ? cfg.smear * normal_quantile(rng.uniform()) : 0.0;
    if (pt > cfg.pt_threshold) ev.tracks.push_back(Track{z + dz, pt});
  }
}

}  // namespace

VertexEvent generate_event(const VertexConfig& cfg, Rng& rng) {
  if (!(cfg.region_hi > cfg.region_lo)) fail(ErrorCode::Config, "vertex region must have positive length");
  if (cfg.smear < 0.0) fail(ErrorCode::Config, "track smear must be non-negative");
  const double length = cfg.region_hi - cfg.region_lo;
  VertexEvent ev;
  ev.signal_z = cfg.region_lo + length * rng.uniform();
  const std::size_t k = static_cast<std::size_t>(rng.below(cfg.max_background + 1));
  for (std::size_t i = 0; i < k; ++i) ev.background_zs.push_back(cfg.region_lo + length * rng.uniform());
  emit_tracks(ev, ev.signal_z, cfg.signal_tracks, cfg.signal_pt_mean, cfg, rng);
  for (double z : ev.background_zs) emit_tracks(ev, z, cfg.background_tracks, cfg.background_pt_mean, cfg, rng);
  return ev;
}

std::vector<VertexEvent> generate_events(const VertexConfig& cfg, std::size_t count, std::uint64_t seed) {
  std::vector<VertexEvent> events;
  events.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    Rng rng = Rng::substream(seed, {0x7665727465ULL, i});
    events.push_back(generate_event(cfg, rng));
  }
  return events;
}

WeightedSortedSample event_sample(const VertexEvent& event) {
  if (event.tracks.empty()) fail(ErrorCode::EmptySample, "event has no reconstructed tracks");
  std::vector<double> z;
  std::vector<double> w;
  z.reserve(event.tracks.size());
  w.reserve(event.tracks.size());
  for (const Track& t : event.tracks) {
    z.push_back(t.z);
    w.push_back(t.pt);
  }
  return WeightedSortedSample(std::move(z), std::move(w));
}

std::string_view to_string(VertexMethod m) {
  switch (m) {
    case VertexMethod::Fsmw: return "fsmw";
    case VertexMethod::Histmw: return "histmw";
    case VertexMethod::Epdfmw: return "epdfmw";
  }
  return "unknown";
}

double vertex_estimate(VertexMethod method, const WeightedSortedSample& s, double param, const VertexConfig& cfg) {
  switch (method) {
    case VertexMethod::Fsmw: return fsmw(s, param).value;
    case VertexMethod::Histmw: return histmw(s, param, cfg.region_lo).value;
    case VertexMethod::Epdfmw: return epdfmw(s, param).value;
  }
  fail(ErrorCode::InvalidArgument, "unknown vertex method");
}

VertexReport evaluate_vertex(VertexMethod method, double param, const std::vector<VertexEvent>& events,
                             const VertexConfig& cfg, double hit_radius) {
  VertexReport rep{.method = method, .best_param = param};
  std::vector<double> errors;
  errors.reserve(events.size());
  std::size_t hits = 0;
  for (const auto& ev : events) {
    try {
      const double err = vertex_estimate(method, event_sample(ev), param, cfg) - ev.signal_z;
      errors.push_back(err);
      if (std::abs(err) <= hit_radius) ++hits;
    } catch (const Error& e) {
      // Parameter errors are configuration mistakes, not per-event failures.
      if (e.code() != ErrorCode::EmptySample) throw;
      ++rep.failures;
    }
  }
  if (errors.empty()) {
    rep.bias = rep.sd = rep.rmse = std::numeric_limits<double>::quiet_NaN();
    return rep;
  }
  const double m = static_cast<double>(errors.size());
  double sum = 0.0;
  for (double e : errors) sum += e;
  rep.bias = sum / m;
  double ss = 0.0;
  for (double e : errors) ss += (e - rep.bias) * (e - rep.bias);
  rep.sd = std::sqrt(ss / m);
  rep.rmse = std::sqrt(rep.bias * rep.bias + rep.sd * rep.sd);
  rep.hit_fraction = static_cast<double>(hits) / static_cast<double>(events.size());
  return rep;
}

std::vector<VertexReport> vertex_study(const std::vector<VertexEvent>& events, const VertexGrids& grids,
                                       const VertexConfig& cfg, double hit_radius) {
  if (events.size() < 100) fail(ErrorCode::Config, "vertex study needs at least 100 events");
  const std::pair<VertexMethod, const std::vector<double>*> plan[] = {
      {VertexMethod::Fsmw, &grids.fsmw_p},
      {VertexMethod::Histmw, &grids.histmw_bin},
      {VertexMethod::Epdfmw, &grids.epdfmw_h},
  };
  std::vector<VertexReport> out;
  for (const auto& [method, grid] : plan) {
    if (grid->empty()) fail(ErrorCode::Config, "empty parameter grid for " + std::string(to_string(method)));
    VertexReport best;
    bool have = false;
    for (double param : *grid) {
      VertexReport r = evaluate_vertex(method, param, events, cfg, hit_radius);
      if (!have || r.rmse < best.rmse) {
        best = r;
        have = true;
      }
    }
    out.push_back(best);
  }
  return out;
}

}  // namespace modal
