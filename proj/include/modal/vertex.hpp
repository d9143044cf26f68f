#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "modal/order_stats.hpp"
#include "modal/random.hpp"

namespace modal {

/// Synthetic bunch-crossing model. Lengths in cm, momenta in arbitrary units.
struct VertexConfig {
  double region_lo = -15.0;
  double region_hi = 15.0;
  std::size_t signal_tracks = 30;
  double signal_pt_mean = 2.0;
  std::size_t max_background = 20;
  std::size_t background_tracks = 10;
  double background_pt_mean = 0.5;
  double smear = 0.05;
  /// Tracks at or below this transverse momentum are not reconstructed.
  double pt_threshold = 0.2;
};

struct Track {
  double z = 0.0;
  double pt = 0.0;
};

struct VertexEvent {
  double signal_z = 0.0;
  std::vector<double> background_zs;
  std::vector<Track> tracks;
};

/// Signal vertex uniform over the region plus K ~ U{0..max_background}
/// background vertices, each emitting smeared tracks with exponential pt.
VertexEvent generate_event(const VertexConfig& cfg, Rng& rng);

/// `count` events, event i drawn from its own substream of `seed`.
std::vector<VertexEvent> generate_events(const VertexConfig& cfg, std::size_t count, std::uint64_t seed);

/// Track positions weighted by transverse momentum.
WeightedSortedSample event_sample(const VertexEvent& event);

enum class VertexMethod { Fsmw, Histmw, Epdfmw };

std::string_view to_string(VertexMethod m);

/// The estimator's tuning parameter: fraction p, bin width, or bandwidth h.
/// Histogram bins start at the region's lower edge.
double vertex_estimate(VertexMethod method, const WeightedSortedSample& s, double param, const VertexConfig& cfg);

struct VertexReport {
  VertexMethod method = VertexMethod::Fsmw;
  double best_param = 0.0;
  double bias = 0.0;
  double sd = 0.0;
  double rmse = 0.0;
  /// Share of events whose estimate lies within `hit_radius` of the signal.
  double hit_fraction = 0.0;
  std::size_t failures = 0;
};

struct VertexGrids {
  std::vector<double> fsmw_p{0.02, 0.03, 0.04, 0.05, 0.06, 0.08, 0.1, 0.15, 0.2, 0.3, 0.5};
  std::vector<double> histmw_bin{0.01, 0.02, 0.05, 0.1, 0.2, 0.5, 1.0};
  std::vector<double> epdfmw_h{0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5};
};

/// Evaluates one estimator at one parameter value over all events.
VertexReport evaluate_vertex(VertexMethod method, double param, const std::vector<VertexEvent>& events,
                             const VertexConfig& cfg, double hit_radius = 0.2);

/// Grid-search tuning (smallest RMSE) followed by a bias/sd/rmse report for
/// each of the three weighted estimators. Requires at least 100 events.
std::vector<VertexReport> vertex_study(const std::vector<VertexEvent>& events, const VertexGrids& grids,
                                       const VertexConfig& cfg, double hit_radius = 0.2);

}  // namespace modal
