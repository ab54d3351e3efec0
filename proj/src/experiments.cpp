#include "jcpt/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "jcpt/errors.hpp"
#include "jcpt/linalg.hpp"
#include "jcpt/perturbation.hpp"

namespace jcpt {
namespace {

// Vacuum Rabi period, or the resonator period when g = 0 leaves it undefined.
double reference_period(const ModelParams& p) {
  return p.g > 0.0 ? vacuum_rabi_period(p) : 2.0 * std::numbers::pi / p.omega0;
}

std::vector<double> uniform_grid(double span, int points) {
  std::vector<double> t(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) t[std::size_t(i)] = span * double(i) / double(points - 1);
  return t;
}

std::string pair_key(Method a, Method b) { return to_string(a) + "-" + to_string(b); }

}  // namespace

double find_t_min(const AmplitudeSeries& series, double horizon) {
  if (series.size() == 0) throw DomainError("find_t_min: empty series");
  const auto& t = series.times;
  Eigen::Index last = -1;
  for (Eigen::Index i = 0; i < series.size(); ++i)
    if (t[std::size_t(i)] <= horizon * (1.0 + 1e-12)) last = i;
  if (last < 0) throw DomainError("find_t_min: no grid point inside the horizon");

  Eigen::Index best = 0;
  double best_p = series.p10(0);
  for (Eigen::Index i = 1; i <= last; ++i) {
    const double v = series.p10(i);
    if (v < best_p) {
      best_p = v;
      best = i;
    }
  }
  if (best == 0 || best == last) return t[std::size_t(best)];

  const double x0 = t[std::size_t(best - 1)], x1 = t[std::size_t(best)], x2 = t[std::size_t(best + 1)];
  const double y0 = series.p10(best - 1), y1 = best_p, y2 = series.p10(best + 1);
  const double num = (x1 - x0) * (x1 - x0) * (y1 - y2) - (x1 - x2) * (x1 - x2) * (y1 - y0);
  const double den = (x1 - x0) * (y1 - y2) - (x1 - x2) * (y1 - y0);
  if (den == 0.0) return x1;
  return std::clamp(x1 - 0.5 * num / den, x0, x2);
}

FidelityPoint fidelity_point(const ModelParams& p, Method m, double horizon_periods,
                             int grid_points) {
  FidelityPoint pt;
  pt.g_over_delta_eps = p.g / p.level_splitting();
  pt.method = m;
  try {
    const double horizon = horizon_periods * reference_period(p);
    const auto series = amplitudes(m, p, uniform_grid(horizon, grid_points));
    pt.t_min = find_t_min(series, horizon);
    const auto at = amplitudes(m, p, {pt.t_min});
    pt.f_jj = 1.0 - at.p10(0);
    pt.f_res = at.p01(0);
  } catch (const std::exception& e) {
    pt.error = e.what();
    pt.t_min = pt.f_jj = pt.f_res = std::numeric_limits<double>::quiet_NaN();
  }
  return pt;
}

std::vector<FidelityPoint> fidelity_sweep(const RunConfig& config,
                                          const std::vector<Method>& methods) {
  auto gs = config.g_over_delta_eps.empty() ? default_sweep_grid() : config.g_over_delta_eps;
  if (gs.empty()) throw DomainError("fidelity_sweep: empty g list");
  std::sort(gs.begin(), gs.end());
  std::vector<FidelityPoint> out;
  for (double g : gs)
    for (Method m : methods)
      out.push_back(fidelity_point(config.params(g), m, config.horizon_periods, config.grid_points));
  return out;
}

const AmplitudeSeries* EvolutionRun::find(Method m) const {
  for (const auto& s : series)
    if (s.method == m) return &s;
  return nullptr;
}

EvolutionRun run_evolution(const RunConfig& config, double g_over_delta_eps) {
  EvolutionRun run;
  run.g_over_delta_eps = g_over_delta_eps;
  run.params = config.params(g_over_delta_eps);
  const double period = reference_period(run.params);
  const auto times = uniform_grid(config.time_span_periods * period, config.grid_points);
  const double horizon = config.horizon_periods * period;

  for (Method m : config.methods) {
    try {
      run.series.push_back(amplitudes(m, run.params, times));
      run.t_min[to_string(m)] = find_t_min(run.series.back(), horizon);
    } catch (const NumericalError& e) {
      run.failures.push_back({m, e.what()});
    }
  }
  for (std::size_t a = 0; a < run.series.size(); ++a)
    for (std::size_t b = a + 1; b < run.series.size(); ++b)
      run.pairwise[pair_key(run.series[a].method, run.series[b].method)] =
          sup_difference(run.series[a], run.series[b]);

  // Regime flag from the measured errors against the exact solution.
  constexpr double kAgree = 0.05;
  const auto err = [&](Method m) -> std::optional<double> {
    const auto it = run.pairwise.find(pair_key(Method::exact, m));
    if (it == run.pairwise.end()) return std::nullopt;
    return it->second.max();
  };
  const auto rwa = err(Method::rwa), pert = err(Method::perturbative);
  if (!rwa && !pert) {
    run.regime = "unclassified: needs exact plus an approximate method";
  } else if (rwa && *rwa < kAgree && (!pert || *pert < kAgree)) {
    run.regime = "weak: approximations agree with exact";
  } else if (pert && *pert < kAgree) {
    run.regime = "moderate: rwa fails, perturbative holds";
  } else if (pert) {
    run.regime = "breakdown: rwa and perturbative both deviate from exact";
  } else {
    run.regime = "breakdown: rwa deviates from exact";
  }
  return run;
}

std::vector<EvolutionRun> run_evolution(const RunConfig& config) {
  const auto gs = config.g_over_delta_eps.empty() ? std::vector<double>{0.03, 0.30, 0.50}
                                                  : config.g_over_delta_eps;
  std::vector<EvolutionRun> runs;
  for (double g : gs) runs.push_back(run_evolution(config, g));
  return runs;
}

nlohmann::json summary_json(const std::vector<EvolutionRun>& runs, const RunConfig& config) {
  nlohmann::json out;
  out["config"] = to_json(config);
  out["seconds_per_time_unit"] = config.seconds_per_time_unit();
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& r : runs) {
    nlohmann::json j;
    j["g_over_delta_eps"] = r.g_over_delta_eps;
    j["vacuum_rabi_period"] = r.params.g > 0 ? vacuum_rabi_period(r.params) : 0.0;
    j["regime"] = r.regime;
    for (const auto& [k, e] : r.pairwise)
      j["sup_errors"][k] = {{"p10", e.p10}, {"p01", e.p01}};
    for (const auto& [k, t] : r.t_min) {
      j["t_min"][k] = t;
      j["t_min_ns"][k] = t * config.seconds_per_time_unit() * 1e9;
    }
    if (const auto* pert = r.find(Method::perturbative)) {
      double leak = 0.0;
      for (Eigen::Index i = 0; i < pert->size(); ++i) leak = std::max(leak, pert->leakage(i));
      j["max_inferred_leakage_perturbative"] = leak;
    }
    if (const auto* ex = r.find(Method::exact)) {
      double leak = 0.0, norm_dev = 0.0;
      for (Eigen::Index i = 0; i < ex->size(); ++i) {
        leak = std::max(leak, ex->leakage(i));
        norm_dev = std::max(norm_dev, std::abs(ex->total_probability(i) - 1.0));
      }
      j["max_leakage_exact"] = leak;
      j["max_norm_deviation_exact"] = norm_dev;
    }
    for (const auto& f : r.failures) j["failures"][to_string(f.method)] = f.message;
    arr.push_back(j);
  }
  out["runs"] = arr;
  return out;
}

std::map<std::string, double> track_levels(const ModelParams& p,
                                           const std::vector<DressedIndex>& levels, int steps) {
  if (steps < 1) throw DomainError("track_levels: steps must be >= 1");
  std::vector<VectorXc> prev;
  std::map<std::string, double> out;
  for (int k = 1; k <= steps; ++k) {
    ModelParams q = p;
    q.g = p.g * double(k) / double(steps);
    const auto d = eigh(build_full_hamiltonian(q));
    if (k == 1) {
      for (const auto& idx : levels) prev.push_back(dressed_state(idx, 0.0, q).vector);
    }
    std::vector<bool> taken(std::size_t(d.dim()), false);
    for (std::size_t l = 0; l < levels.size(); ++l) {
      Eigen::Index best = -1;
      double best_o = -1.0;
      for (Eigen::Index a = 0; a < d.dim(); ++a) {
        if (taken[std::size_t(a)]) continue;
        const double o = std::norm(prev[l].dot(d.vectors.col(a)));
        if (o > best_o) {
          best_o = o;
          best = a;
        }
      }
      taken[std::size_t(best)] = true;
      prev[l] = d.vectors.col(best);
      if (k == steps) out[levels[l].label()] = d.values(best);
    }
  }
  return out;
}

std::vector<SpectrumRow> spectrum(const RunConfig& config) {
  const auto gs = config.g_over_delta_eps.empty() ? std::vector<double>{0.03, 0.15, 0.30, 0.50}
                                                  : config.g_over_delta_eps;
  std::vector<DressedIndex> levels{DressedIndex::ground_state()};
  for (int j = 0; j < 3; ++j)
    for (int s : {+1, -1}) levels.push_back(DressedIndex::excited(j, s));

  std::vector<SpectrumRow> rows;
  for (double g : gs) {
    auto p = config.params(g);
    p.n_max = std::max(p.n_max, 3);  // psi_2 needs |0,3>
    const auto exact = g > 0.0 ? track_levels(p, levels) : std::map<std::string, double>{};
    for (const auto& idx : levels) {
      SpectrumRow r;
      r.g_over_delta_eps = g;
      r.level = idx.label();
      r.w_dressed = dressed_energy(idx, 0.0, p);
      try {
        r.e_perturbative =
            idx.ground ? corrected_ground_energy(p) : corrected_energy(idx.j, idx.sigma, p);
      } catch (const DegeneracyError&) {
        r.e_perturbative = std::numeric_limits<double>::quiet_NaN();
      }
      r.e_exact = g > 0.0 ? exact.at(idx.label()) : r.w_dressed;
      rows.push_back(r);
    }
  }
  return rows;
}

}  // namespace jcpt
