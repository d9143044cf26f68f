#include "modal/study.hpp"

#include <cmath>
#include <limits>
#include <ostream>

#include "modal/error.hpp"
#include "modal/parallel.hpp"

namespace modal {

namespace {

// Stable integer key for a contamination level.
std::uint64_t epsilon_key(double eps) { return static_cast<std::uint64_t>(std::llround(eps * 1e6)); }

}  // namespace

double target_value(EstimatorTarget target, const ReferenceDistribution& dist) {
  switch (target) {
    case EstimatorTarget::Mode: return dist.mode();
    case EstimatorTarget::Median: return dist.median();
    case EstimatorTarget::Mean: return dist.mean();
  }
  return dist.mode();
}

CellErrors simulate_cell(const std::vector<Estimator>& estimators, const ReferenceDistribution& dist,
                         std::size_t n, double epsilon, const StudyOptions& options) {
  if (options.replicates < 2) fail(ErrorCode::Config, "a study needs at least 2 replicates");
  outlier_count(n, epsilon);  // validate the split before spawning work

  const std::size_t reps = options.replicates;
  CellErrors cell;
  cell.errors.assign(estimators.size(), std::vector<double>(reps, 0.0));
  std::vector<std::vector<char>> failed(estimators.size(), std::vector<char>(reps, 0));
  std::vector<double> targets;
  for (const auto& est : estimators) targets.push_back(target_value(est.target(), dist));

  const auto dist_key = static_cast<std::uint64_t>(dist.id());
  parallel_for(reps, options.threads, [&](std::size_t r) {
    Rng rng = Rng::substream(options.seed, {dist_key, n, epsilon_key(epsilon), r});
    const SortedSample s = contaminated_sample(dist, n, epsilon, rng);
    for (std::size_t e = 0; e < estimators.size(); ++e) {
      try {
        cell.errors[e][r] = estimators[e](s) - targets[e];
      } catch (const Error&) {
        if (options.strict) throw;
        cell.errors[e][r] = std::numeric_limits<double>::quiet_NaN();
        failed[e][r] = 1;
      }
    }
  });

  for (const auto& f : failed) {
    std::size_t count = 0;
    for (char c : f) count += static_cast<std::size_t>(c);
    cell.failures.push_back(count);
  }
  return cell;
}

StudyResult summarize_errors(std::span<const double> errors) {
  StudyResult out;
  double sum = 0.0;
  std::size_t m = 0;
  for (double e : errors) {
    if (std::isnan(e)) continue;
    sum += e;
    ++m;
  }
  out.replicates = m;
  out.failures = errors.size() - m;
  if (m == 0) {
    out.bias = out.std_error = out.rmse = out.mc_se = std::numeric_limits<double>::quiet_NaN();
    return out;
  }
  const double bias = sum / static_cast<double>(m);
  double ss = 0.0;
  for (double e : errors) {
    if (!std::isnan(e)) ss += (e - bias) * (e - bias);
  }
  out.bias = bias;
  out.std_error = std::sqrt(ss / static_cast<double>(m));
  out.rmse = std::sqrt(bias * bias + out.std_error * out.std_error);
  out.mc_se = m > 1 ? std::sqrt(ss / static_cast<double>(m - 1) / static_cast<double>(m)) : 0.0;
  return out;
}

std::vector<StudyResult> run_study(const std::vector<Estimator>& estimators,
                                   const std::vector<ReferenceDistribution>& dists,
                                   const std::vector<std::size_t>& ns, const std::vector<double>& epss,
                                   const StudyOptions& options) {
  if (options.replicates < 100) fail(ErrorCode::Config, "a study needs at least 100 replicates");
  std::vector<StudyResult> results;
  for (const auto& dist : dists) {
    for (std::size_t n : ns) {
      for (double eps : epss) {
        const CellErrors cell = simulate_cell(estimators, dist, n, eps, options);
        for (std::size_t e = 0; e < estimators.size(); ++e) {
          StudyResult r = summarize_errors(cell.errors[e]);
          r.estimator = estimators[e].label();
          r.distribution = std::string(dist.name());
          r.n = n;
          r.epsilon = eps;
          results.push_back(std::move(r));
        }
      }
    }
  }
  return results;
}

std::vector<StudyResult> run_m_study(std::string_view scenarios, const std::vector<std::size_t>& ns,
                                     const std::vector<double>& epss, const StudyOptions& options) {
  std::vector<Estimator> estimators;
  for (char id : scenarios) {
    EstimatorParams prm;
    prm.scenario = id;
    estimators.push_back(make_estimator("huber", prm));
  }
  return run_study(estimators, {ReferenceDistribution::normal()}, ns, epss, options);
}

void write_study_csv(std::ostream& out, const std::vector<StudyResult>& results) {
  const auto old_precision = out.precision(10);
  out << "# schema=1\n";
  out << "estimator,distribution,n,epsilon,bias,se,rmse,mc_se,replicates\n";
  for (const auto& r : results) {
    out << r.estimator << ',' << r.distribution << ',' << r.n << ',' << r.epsilon << ',' << r.bias << ','
        << r.std_error << ',' << r.rmse << ',' << r.mc_se << ',' << r.replicates << '\n';
  }
  out.precision(old_precision);
}

}  // namespace modal
