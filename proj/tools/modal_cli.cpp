#include <chrono>
#include <cmath>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "modal/bootstrap.hpp"
#include "modal/config.hpp"
#include "modal/density.hpp"
#include "modal/distributions.hpp"
#include "modal/error.hpp"
#include "modal/m_estimator.hpp"
#include "modal/mode_estimators.hpp"
#include "modal/registry.hpp"
#include "modal/robustness.hpp"
#include "modal/scale.hpp"
#include "modal/study.hpp"
#include "modal/vertex.hpp"

namespace {

using json = nlohmann::ordered_json;

enum Exit : int { kOk = 0, kInput = 2, kEstimator = 3, kConfig = 4 };

// Errors raised while reading or validating input data.
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string input = "-";
  std::string estimator;
  std::string dist = "normal";
  std::string n_list;
  std::string eps_list = "0";
  std::size_t reps = 0;
  std::optional<std::uint64_t> seed;
  std::optional<double> p;
  int k = 3;
  double bin = 0.0;
  double origin = 0.0;
  double h = 0.0;
  double alpha = 0.5;
  double width = 0.0;
  double c = modal::kHuberTuning;
  std::string scenario;
  std::string out = "-";
  std::string format;
  bool strict = false;
  unsigned threads = 0;
  std::size_t events = 500;
  std::string config;
};

std::vector<std::string> split(const std::string& s, char sep = ',') {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) {
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

template <typename T>
std::vector<T> parse_list(const std::string& s, const char* what) {
  std::vector<T> out;
  for (const auto& item : split(s)) {
    std::istringstream in(item);
    T v{};
    if (!(in >> v) || !in.eof()) modal::fail(modal::ErrorCode::Config, std::string("bad ") + what + " '" + item + "'");
    out.push_back(v);
  }
  if (out.empty()) modal::fail(modal::ErrorCode::Config, std::string("empty ") + what + " list");
  return out;
}

double parse_number(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(token, &used);
  } catch (const std::exception&) {
    throw InputError("line " + std::to_string(line) + ": cannot parse '" + token + "'");
  }
  if (used != token.size()) throw InputError("line " + std::to_string(line) + ": cannot parse '" + token + "'");
  return v;
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return {};
  return s.substr(b, s.find_last_not_of(" \t\r") - b + 1);
}

struct InputData {
  std::vector<double> values;
  std::vector<double> weights;  // empty when the input has no weight column
};

// One value per line, or CSV whose header names the columns. With a header the
// `value` and `weight` columns are used if present, else the first two.
InputData read_input(const std::string& path) {
  std::ifstream file;
  std::istream* in = &std::cin;
  if (path != "-") {
    file.open(path);
    if (!file) throw InputError("cannot open input file '" + path + "'");
    in = &file;
  }
  InputData data;
  std::string line;
  std::size_t lineno = 0;
  bool first = true;
  std::size_t value_col = 0;
  std::optional<std::size_t> weight_col;
  while (std::getline(*in, line)) {
    ++lineno;
    const std::string t = trim(line);
    if (t.empty() || t.front() == '#') continue;
    std::vector<std::string> cells;
    for (auto& c : split(t)) cells.push_back(trim(c));
    if (first) {
      first = false;
      std::istringstream probe(cells.front());
      double dummy = 0.0;
      if (!(probe >> dummy)) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
          if (cells[i] == "value") value_col = i;
          if (cells[i] == "weight") weight_col = i;
        }
        if (!weight_col && cells.size() >= 2) weight_col = value_col == 0 ? 1 : 0;
        continue;
      }
      if (cells.size() >= 2) weight_col = 1;
    }
    if (value_col >= cells.size()) throw InputError("line " + std::to_string(lineno) + ": missing value column");
    data.values.push_back(parse_number(cells[value_col], lineno));
    if (weight_col) {
      if (*weight_col >= cells.size()) throw InputError("line " + std::to_string(lineno) + ": missing weight column");
      data.weights.push_back(parse_number(cells[*weight_col], lineno));
    }
  }
  if (data.values.empty()) throw InputError("input contains no values");
  return data;
}

struct Output {
  std::ofstream file;
  std::ostream* stream = &std::cout;

  explicit Output(const std::string& path) {
    if (path == "-") return;
    file.open(path);
    if (!file) modal::fail(modal::ErrorCode::Config, "cannot open output file '" + path + "'");
    stream = &file;
  }
  std::ostream& operator*() { return *stream; }
};

json number_or_null(double v) { return std::isfinite(v) ? json(v) : json(nullptr); }

std::uint64_t require_seed(const Options& o) {
  if (!o.seed) modal::fail(modal::ErrorCode::Config, "--seed is required for stochastic subcommands");
  return *o.seed;
}

modal::EstimatorParams estimator_params(const Options& o) {
  modal::EstimatorParams prm;
  prm.alpha = o.alpha;
  if (o.p) {
    prm.p = *o.p;
    prm.grenander_p = *o.p;
  }
  prm.k = o.k;
  prm.bin = o.bin;
  prm.origin = o.origin;
  prm.h = o.h;
  prm.width = o.width;
  if (!o.scenario.empty()) prm.scenario = o.scenario.front();
  prm.c = o.c;
  return prm;
}

std::vector<modal::Estimator> estimators_from(const std::string& list, const Options& o) {
  std::vector<modal::Estimator> out;
  for (const auto& id : split(list)) out.push_back(modal::make_estimator(id, estimator_params(o)));
  if (out.empty()) modal::fail(modal::ErrorCode::Config, "no estimators given");
  return out;
}

std::vector<modal::ReferenceDistribution> dists_from(const std::string& list) {
  std::vector<modal::ReferenceDistribution> out;
  for (const auto& name : split(list)) out.push_back(modal::ReferenceDistribution::by_name(name));
  if (out.empty()) modal::fail(modal::ErrorCode::Config, "no distributions given");
  return out;
}

std::optional<modal::ScaleMethod> scale_method(const std::string& id) {
  if (id == "mad") return modal::ScaleMethod::Mad;
  if (id == "shorth_length") return modal::ScaleMethod::ShorthLength;
  if (id == "hwhm") return modal::ScaleMethod::Hwhm;
  if (id == "sd") return modal::ScaleMethod::Sd;
  return std::nullopt;
}

void apply_config(Options& o, CLI::App& sub) {
  if (o.config.empty()) return;
  const auto cfg = modal::KeyValueConfig::load(o.config);
  auto unset = [&](const char* flag) { return sub.get_option_no_throw(flag) == nullptr || sub.count(flag) == 0; };
  if (auto v = cfg.get_int("seed"); v && !o.seed) o.seed = static_cast<std::uint64_t>(*v);
  if (auto v = cfg.get_int("reps"); v && unset("--reps")) o.reps = static_cast<std::size_t>(*v);
  if (auto v = cfg.get("n"); v && unset("--n")) o.n_list = *v;
  if (auto v = cfg.get("eps"); v && unset("--eps")) o.eps_list = *v;
  if (auto v = cfg.get("dist"); v && unset("--dist")) o.dist = *v;
  if (auto v = cfg.get("estimator"); v && unset("--estimator")) o.estimator = *v;
  if (auto v = cfg.get("scenario"); v && unset("--scenario")) o.scenario = *v;
  if (auto v = cfg.get_int("events"); v && unset("--events")) o.events = static_cast<std::size_t>(*v);
}

modal::VertexConfig vertex_config(const Options& o, modal::VertexGrids& grids) {
  modal::VertexConfig vc;
  if (o.config.empty()) return vc;
  const auto cfg = modal::KeyValueConfig::load(o.config);
  auto real = [&](const char* key, double& slot) {
    if (auto v = cfg.get_double(key)) slot = *v;
  };
  auto count = [&](const char* key, std::size_t& slot) {
    if (auto v = cfg.get_int(key)) {
      if (*v < 0) modal::fail(modal::ErrorCode::Config, std::string(key) + " must be non-negative");
      slot = static_cast<std::size_t>(*v);
    }
  };
  real("vertex.region_lo", vc.region_lo);
  real("vertex.region_hi", vc.region_hi);
  count("vertex.signal_tracks", vc.signal_tracks);
  real("vertex.signal_pt_mean", vc.signal_pt_mean);
  count("vertex.max_background", vc.max_background);
  count("vertex.background_tracks", vc.background_tracks);
  real("vertex.background_pt_mean", vc.background_pt_mean);
  real("vertex.smear", vc.smear);
  real("vertex.pt_threshold", vc.pt_threshold);
  if (auto v = cfg.get_list("grid.fsmw_p")) grids.fsmw_p = *v;
  if (auto v = cfg.get_list("grid.histmw_bin")) grids.histmw_bin = *v;
  if (auto v = cfg.get_list("grid.epdfmw_h")) grids.epdfmw_h = *v;
  return vc;
}

int cmd_estimate(const Options& o) {
  InputData data;
  std::optional<modal::SortedSample> sample;
  std::optional<modal::WeightedSortedSample> weighted;
  const std::string id = o.estimator.empty() ? "hsm" : o.estimator;
  const bool weight_aware = id == "fsmw" || id == "histmw" || id == "epdfmw";
  try {
    data = read_input(o.input);
    if (!data.weights.empty() && !weight_aware) {
      throw InputError("estimator '" + id + "' does not accept a weight column");
    }
    if (weight_aware && !data.weights.empty()) {
      weighted.emplace(data.values, data.weights);
    } else {
      sample.emplace(data.values);
    }
  } catch (const modal::Error& e) {
    throw InputError(e.what());
  }

  json out;
  out["schema"] = 1;
  out["estimator"] = id;
  out["n"] = data.values.size();
  if (auto method = scale_method(id)) {
    const auto est = modal::scale_estimate(*sample, *method);
    out["value"] = est.value;
    out["kind"] = "scale";
  } else if (id == "huber") {
    const char sc = o.scenario.empty() ? 'f' : o.scenario.front();
    const auto init = modal::init_scenario(sc);
    if (!init) modal::fail(modal::ErrorCode::Config, std::string("unknown scenario '") + sc + "'");
    const auto r = modal::m_estimate(*sample, *init, o.c);
    out["value"] = r.location;
    out["kind"] = "location";
    out["scenario"] = std::string(1, sc);
    out["scale"] = r.scale;
    out["iterations"] = r.iterations;
    out["converged"] = r.converged;
  } else {
    modal::ModeEstimate est;
    if (weighted) {
      const modal::EstimatorParams prm = estimator_params(o);
      if (id == "fsmw") {
        est = modal::fsmw(*weighted, prm.p);
      } else if (id == "histmw") {
        est = modal::histmw(*weighted, prm.bin, prm.origin);
      } else {
        if (!(prm.h > 0.0)) modal::fail(modal::ErrorCode::NonPositiveBandwidth, "--h is required with weights");
        est = modal::epdfmw(*weighted, prm.h);
      }
    } else if (id == "hsm") {
      est = modal::hsm(*sample);
    } else {
      const auto e = modal::make_estimator(id, estimator_params(o));
      est.value = e(*sample);
      est.estimator = id;
    }
    out["value"] = est.value;
    out["kind"] = "location";
    if (est.lower) out["lower"] = *est.lower;
    if (est.upper) out["upper"] = *est.upper;
    if (est.iterations > 0) out["iterations"] = est.iterations;
    if (sample && (id == "hsm" || id == "fsm")) out["modal_skewness"] = modal::modal_skewness(*sample, est.value);
  }
  Output sink(o.out);
  *sink << out.dump(2) << '\n';
  return kOk;
}

void write_results(const Options& o, const std::vector<modal::StudyResult>& results) {
  Output sink(o.out);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : results) {
      arr.push_back({{"estimator", r.estimator},
                     {"distribution", r.distribution},
                     {"n", r.n},
                     {"epsilon", r.epsilon},
                     {"bias", number_or_null(r.bias)},
                     {"se", number_or_null(r.std_error)},
                     {"rmse", number_or_null(r.rmse)},
                     {"mc_se", number_or_null(r.mc_se)},
                     {"replicates", r.replicates},
                     {"failures", r.failures}});
    }
    *sink << json{{"schema", 1}, {"results", arr}}.dump(2) << '\n';
  } else {
    modal::write_study_csv(*sink, results);
  }
}

modal::StudyOptions study_options(const Options& o, std::size_t default_reps) {
  modal::StudyOptions so;
  so.seed = require_seed(o);
  so.replicates = o.reps > 0 ? o.reps : default_reps;
  so.strict = o.strict;
  so.threads = o.threads;
  return so;
}

int cmd_study(const Options& o) {
  const auto so = study_options(o, 10000);
  const auto results = modal::run_study(estimators_from(o.estimator.empty() ? "hsm,median" : o.estimator, o),
                                        dists_from(o.dist), parse_list<std::size_t>(o.n_list.empty() ? "100" : o.n_list, "n"),
                                        parse_list<double>(o.eps_list, "eps"), so);
  write_results(o, results);
  return kOk;
}

int cmd_mstudy(const Options& o) {
  const auto so = study_options(o, 10000);
  const std::string scenarios = o.scenario.empty() ? "abcdef" : o.scenario;
  for (char c : scenarios) {
    if (!modal::init_scenario(c)) modal::fail(modal::ErrorCode::Config, std::string("unknown scenario '") + c + "'");
  }
  const auto results = modal::run_m_study(scenarios, parse_list<std::size_t>(o.n_list.empty() ? "1000" : o.n_list, "n"),
                                          parse_list<double>(o.eps_list, "eps"), so);
  write_results(o, results);
  return kOk;
}

int cmd_ssc(const Options& o) {
  const auto est = modal::make_estimator(o.estimator.empty() ? "hsm" : o.estimator, estimator_params(o));
  const auto dist = modal::ReferenceDistribution::by_name(o.dist);
  const auto n = parse_list<std::size_t>(o.n_list.empty() ? "100" : o.n_list, "n").front();
  const auto curve = modal::scan_curve(est, dist, n, {}, o.threads);
  Output sink(o.out);
  if (o.format == "json") {
    json pts = json::array();
    for (const auto& p : curve.grid) pts.push_back({p.x, p.s});
    *sink << json{{"schema", 1},       {"estimator", curve.estimator}, {"distribution", curve.distribution},
                  {"n", curve.n},      {"center", curve.center},       {"rho", number_or_null(curve.rho)},
                  {"rho_finite", std::isfinite(curve.rho)}, {"gamma", curve.gamma}, {"points", pts}}
                 .dump(2)
          << '\n';
  } else {
    modal::write_curve_csv(*sink, curve);
  }
  std::cerr << "rho=" << curve.rho << " gamma=" << curve.gamma << " center=" << curve.center << '\n';
  return kOk;
}

int cmd_bootstrap(const Options& o) {
  const std::uint64_t seed = require_seed(o);
  InputData data;
  try {
    data = read_input(o.input);
    if (!data.weights.empty()) throw InputError("bootstrap takes unweighted data");
    modal::SortedSample check(data.values);
  } catch (const modal::Error& e) {
    throw InputError(e.what());
  }
  const std::string id = o.estimator.empty() ? "hsm" : o.estimator;
  const auto est = modal::make_estimator(id, estimator_params(o));
  const std::size_t b = o.reps > 0 ? o.reps : 2000;
  const auto s = modal::bootstrap_summary(data.values, est, b, seed, o.threads);
  json out{{"schema", 1},  {"estimator", est.label()}, {"n", data.values.size()}, {"estimate", s.estimate},
           {"std_error", s.std_error}, {"q1", s.q1}, {"median_q", s.median_q}, {"q3", s.q3},
           {"b", s.b},     {"skipped", s.skipped},      {"z0", s.z0}};
  if (est.target() == modal::EstimatorTarget::Mode) {
    out["modal_skewness"] = modal::modal_skewness(modal::SortedSample(data.values), s.estimate);
  }
  Output sink(o.out);
  *sink << out.dump(2) << '\n';
  return kOk;
}

int cmd_vertex(const Options& o) {
  const std::uint64_t seed = require_seed(o);
  modal::VertexGrids grids;
  const auto cfg = vertex_config(o, grids);
  const auto events = modal::generate_events(cfg, o.events, seed);
  const auto reports = modal::vertex_study(events, grids, cfg);
  Output sink(o.out);
  if (o.format == "json") {
    json arr = json::array();
    for (const auto& r : reports) {
      arr.push_back({{"estimator", std::string(modal::to_string(r.method))},
                     {"best_param", r.best_param},
                     {"bias", number_or_null(r.bias)},
                     {"sd", number_or_null(r.sd)},
                     {"rmse", number_or_null(r.rmse)},
                     {"hit_fraction", r.hit_fraction},
                     {"failures", r.failures}});
    }
    *sink << json{{"schema", 1}, {"events", events.size()}, {"results", arr}}.dump(2) << '\n';
  } else {
    auto& os = *sink;
    os.precision(10);
    os << "# schema=1\n";
    os << "estimator,best_param,bias,sd,rmse,hit_fraction,failures\n";
    for (const auto& r : reports) {
      os << modal::to_string(r.method) << ',' << r.best_param << ',' << r.bias << ',' << r.sd << ',' << r.rmse << ','
         << r.hit_fraction << ',' << r.failures << '\n';
    }
  }
  return kOk;
}

int cmd_bench(const Options& o) {
  const std::uint64_t seed = require_seed(o);
  const auto estimators = estimators_from(o.estimator.empty() ? "hsm,hrm,epdfm,shorth,lms,pm,median" : o.estimator, o);
  const auto ns = parse_list<std::size_t>(o.n_list.empty() ? "250,500,1000" : o.n_list, "n");
  const std::size_t calls = o.reps > 0 ? o.reps : 20;
  const std::vector<modal::ReferenceDistribution> dists{modal::ReferenceDistribution::normal(),
                                                       modal::ReferenceDistribution::lognormal(),
                                                       modal::ReferenceDistribution::pareto()};
  Output sink(o.out);
  auto& os = *sink;
  os << "# schema=1\n";
  os << "estimator,n,mean_seconds,calls\n";
  volatile double guard = 0.0;
  for (const auto& est : estimators) {
    for (std::size_t n : ns) {
      double total = 0.0;
      std::size_t count = 0;
      for (const auto& dist : dists) {
        for (std::size_t i = 0; i < calls; ++i) {
          modal::Rng rng = modal::Rng::substream(seed, {static_cast<std::uint64_t>(dist.id()), n, i});
          const auto s = modal::sample(dist, n, rng);
          const auto t0 = std::chrono::steady_clock::now();
          guard = guard + est(s);
          total += std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
          ++count;
        }
      }
      os << est.label() << ',' << n << ',' << total / static_cast<double>(count) << ',' << count << '\n';
    }
  }
  return kOk;
}

void add_common(CLI::App* sub, Options& o, bool stochastic) {
  sub->add_option("--out", o.out, "Output path, '-' for stdout")->capture_default_str();
  sub->add_option("--format", o.format, "Output format: csv or json")->check(CLI::IsMember({"csv", "json"}));
  sub->add_option("--config", o.config, "Key-value configuration file");
  sub->add_option("--threads", o.threads, "Worker threads, 0 = all cores")->capture_default_str();
  if (stochastic) sub->add_option("--seed", o.seed, "Random seed (required)");
}

void add_estimator_flags(CLI::App* sub, Options& o) {
  sub->add_option("--p", o.p, "fsmw fraction (default 0.06) or grenander exponent (default 2)");
  sub->add_option("--k", o.k, "grenander spacing order")->capture_default_str();
  sub->add_option("--bin", o.bin, "histmw bin width");
  sub->add_option("--origin", o.origin, "histmw bin origin")->capture_default_str();
  sub->add_option("--h", o.h, "epdfmw bandwidth; default 0.9 min(sd, MAD) n^-1/5");
  sub->add_option("--alpha", o.alpha, "fsm fraction")->capture_default_str();
  sub->add_option("--width", o.width, "modal interval width");
  sub->add_option("--c", o.c, "Huber tuning constant")->capture_default_str();
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust mode and location estimation toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  Options o;

  auto* estimate = app.add_subcommand("estimate", "Estimate the mode (or scale) of a data file");
  estimate->add_option("input", o.input, "Data file: one value per line, or CSV value[,weight]; '-' for stdin");
  estimate->add_option("--estimator", o.estimator,
                       "hsm, fsm, fsmw, shorth, lms, modal_interval, hrm, epdfm, epdfmw, histmw, grenander, pm, "
                       "standard_pm, median, mean, huber, or a scale: mad, shorth_length, hwhm, sd (default hsm)");
  estimate->add_option("--scenario", o.scenario, "huber initial values a-f (default f)");
  add_estimator_flags(estimate, o);
  add_common(estimate, o, false);

  auto* study = app.add_subcommand("study", "Monte-Carlo bias/se/RMSE study");
  study->add_option("--estimator", o.estimator, "Comma-separated estimator ids (default hsm,median)");
  study->add_option("--dist", o.dist, "Comma-separated: normal, lognormal, pareto")->capture_default_str();
  study->add_option("--n", o.n_list, "Comma-separated sample sizes (default 100)");
  study->add_option("--eps", o.eps_list, "Comma-separated contamination fractions")->capture_default_str();
  study->add_option("--reps", o.reps, "Replicates per cell (default 10000)");
  study->add_flag("--strict", o.strict, "Abort a cell on the first estimator failure");
  add_estimator_flags(study, o);
  add_common(study, o, true);

  auto* mstudy = app.add_subcommand("mstudy", "Huber M-estimator study over initial-value scenarios");
  mstudy->add_option("--scenario", o.scenario, "Scenario letters (default abcdef)");
  mstudy->add_option("--n", o.n_list, "Comma-separated sample sizes (default 1000)");
  mstudy->add_option("--eps", o.eps_list, "Comma-separated contamination fractions")->capture_default_str();
  mstudy->add_option("--reps", o.reps, "Replicates per cell (default 10000)");
  mstudy->add_option("--c", o.c, "Huber tuning constant")->capture_default_str();
  mstudy->add_flag("--strict", o.strict, "Abort a cell on the first estimator failure");
  add_common(mstudy, o, true);

  auto* ssc = app.add_subcommand("ssc", "Stylized sensitivity curve");
  ssc->add_option("--estimator", o.estimator, "Estimator id (default hsm)");
  ssc->add_option("--dist", o.dist, "normal, lognormal or pareto")->capture_default_str();
  ssc->add_option("--n", o.n_list, "Sample size including the added point (default 100)");
  ssc->add_option("--scenario", o.scenario, "huber initial values a-f (default f)");
  add_estimator_flags(ssc, o);
  add_common(ssc, o, false);

  auto* boot = app.add_subcommand("bootstrap", "Bootstrap standard error and bias-corrected quartiles");
  boot->add_option("input", o.input, "Data file, '-' for stdin");
  boot->add_option("--estimator", o.estimator, "Estimator id (default hsm)");
  boot->add_option("--reps", o.reps, "Bootstrap replicates (default 2000)");
  boot->add_option("--scenario", o.scenario, "huber initial values a-f (default f)");
  add_estimator_flags(boot, o);
  add_common(boot, o, true);

  auto* vertex = app.add_subcommand("vertex", "Synthetic vertex-finding study (fsmw, histmw, epdfmw)");
  vertex->add_option("--events", o.events, "Number of events")->capture_default_str();
  add_common(vertex, o, true);

  auto* bench = app.add_subcommand("bench", "Mean per-call time per estimator and n");
  bench->add_option("--estimator", o.estimator, "Comma-separated ids (default hsm,hrm,epdfm,shorth,lms,pm,median)");
  bench->add_option("--n", o.n_list, "Comma-separated sizes (default 250,500,1000)");
  bench->add_option("--reps", o.reps, "Calls per distribution and n (default 20)");
  add_common(bench, o, true);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kOk : kConfig;
  }

  try {
    CLI::App* sub = app.get_subcommands().front();
    apply_config(o, *sub);
    if (sub == estimate) return cmd_estimate(o);
    if (sub == study) return cmd_study(o);
    if (sub == mstudy) return cmd_mstudy(o);
    if (sub == ssc) return cmd_ssc(o);
    if (sub == boot) return cmd_bootstrap(o);
    if (sub == vertex) return cmd_vertex(o);
    if (sub == bench) return cmd_bench(o);
  } catch (const InputError& e) {
    std::cerr << "input error: " << e.what() << '\n';
    return kInput;
  } catch (const modal::Error& e) {
    std::cerr << e.what() << '\n';
    const bool config = e.code() == modal::ErrorCode::Config || e.code() == modal::ErrorCode::UnknownEstimator;
    return config ? kConfig : kEstimator;
  }
  return kConfig;
}
