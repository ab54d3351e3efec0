#pragma once
// Experiment orchestration: run configuration, evolution runs, the
// state-transfer fidelity sweep, level tracking and the validation suite.

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "json.hpp"

#include "jcpt/dressed.hpp"
#include "jcpt/dynamics.hpp"
#include "jcpt/model.hpp"

namespace jcpt {

/// Junction given by its Josephson and charging energies (eV); the bias is
/// chosen so that the qubit splitting equals h * omega0_hz.
struct JunctionConstants {
  double e_j_ev = 43.1e-3;
  double e_c_ev = 53.4e-9;
};

struct RunConfig {
  std::variant<JunctionConstants, CouplingElements> junction = JunctionConstants{};
  double omega0_hz = 10e9;
  std::vector<double> g_over_delta_eps;  // empty: the subcommand's default
  int n_max = 5;
  double time_span_periods = 2.0;  // in vacuum Rabi periods 2 pi / Omega_0(0)
  int grid_points = 2001;
  std::vector<Method> methods = {Method::exact, Method::rwa, Method::perturbative};
  double horizon_periods = 1.0;  // t_min search window
  // Test hook for the validation suite: added to one off-diagonal entry of H.
  double inject_non_hermitian = 0.0;

  void validate() const;
  CouplingElements coupling() const;
  ModelParams params(double g_over_delta_eps) const;
  /// Seconds per internal time unit 1/omega0.
  double seconds_per_time_unit() const;
};

RunConfig parse_config(const nlohmann::json& j);
RunConfig load_config(const std::string& path);
nlohmann::json to_json(const RunConfig& c);

std::vector<double> default_sweep_grid();  // 0.01, 0.02, ..., 0.50

/// Time of the minimum of |c10(t)|^2 over grid points t <= horizon, refined by
/// a three-point parabola. Earliest minimum wins ties; a minimum on the last
/// admissible grid point is returned unrefined.
double find_t_min(const AmplitudeSeries& series, double horizon);

struct FidelityPoint {
  double g_over_delta_eps = 0.0;
  double t_min = 0.0;
  double f_jj = 0.0;   // 1 - |c10(t_min)|^2
  double f_res = 0.0;  // |c01(t_min)|^2
  Method method = Method::exact;
  std::optional<std::string> error;
};

FidelityPoint fidelity_point(const ModelParams& p, Method m, double horizon_periods = 1.0,
                             int grid_points = 2001);
/// One point per g (config order ignored, output sorted by g); failures are
/// recorded on the point and the sweep continues.
std::vector<FidelityPoint> fidelity_sweep(const RunConfig& config,
                                          const std::vector<Method>& methods = {Method::exact});

struct MethodFailure {
  Method method;
  std::string message;
};

struct EvolutionRun {
  double g_over_delta_eps = 0.0;
  ModelParams params;
  std::vector<AmplitudeSeries> series;
  std::vector<MethodFailure> failures;
  std::map<std::string, SupErrors> pairwise;  // "exact-rwa", ...
  std::map<std::string, double> t_min;        // per method
  std::string regime;

  const AmplitudeSeries* find(Method m) const;
};

EvolutionRun run_evolution(const RunConfig& config, double g_over_delta_eps);
std::vector<EvolutionRun> run_evolution(const RunConfig& config);
nlohmann::json summary_json(const std::vector<EvolutionRun>& runs, const RunConfig& config);

/// Exact eigenvalues of H followed from small g to p.g by maximum overlap,
/// starting from the dressed states. Labels as DressedIndex::label().
std::map<std::string, double> track_levels(const ModelParams& p,
                                           const std::vector<DressedIndex>& levels,
                                           int steps = 40);

struct SpectrumRow {
  double g_over_delta_eps;
  std::string level;
  double w_dressed;
  double e_perturbative;
  double e_exact;
};
std::vector<SpectrumRow> spectrum(const RunConfig& config);

/// Least-squares slope of log |E_perturbative - E_exact| against log g for the
/// tracked levels 00, 0+-, 1+-, 2+-. Exact levels come from track_levels.
std::map<std::string, double> energy_error_slopes(const CouplingElements& coupling,
                                                  const std::vector<double>& g_over_delta_eps,
                                                  int n_max = 10);

/// Finite-difference test that D(g) = G_00(g) - G_00^RWA(g) has no linear term
/// at g = 0: with d1 = (4D(h) - D(2h)) / 2h and d2 = (D(2h) - 2D(h)) / h^2 the
/// returned ratio |d1| / (h |d2|) is O(h) for an even leading order and O(1/h)
/// with a first-order term. Norms are Frobenius over the 2x2 (sigma, sigma').
struct OrderCheck {
  double evenness_ratio = 0.0;
  double order_estimate = 0.0;  // log2 |D(2h)| / |D(h)|
};
OrderCheck propagator_order_check(const CouplingElements& coupling, double h, double t);

enum class CheckStatus { pass, fail, skipped };
std::string to_string(CheckStatus s);

struct CheckResult {
  std::string name;
  CheckStatus status = CheckStatus::pass;
  double measured = 0.0;
  double threshold = 0.0;
  std::string detail;
};

struct ValidationReport {
  double g_over_delta_eps = 0.0;
  std::vector<CheckResult> checks;
  bool passed() const;
};

ValidationReport validate(const RunConfig& config);
nlohmann::json to_json(const ValidationReport& r);

}  // namespace jcpt
