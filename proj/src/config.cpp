#include <cmath>
#include <fstream>
#include <numbers>
#include <set>

#include "jcpt/errors.hpp"
#include "jcpt/experiments.hpp"

namespace jcpt {
namespace {

using nlohmann::json;

double number(const json& j, const char* key) {
  if (!j.is_number()) throw ConfigError(std::string("config: '") + key + "' must be a number");
  return j.get<double>();
}

int integer(const json& j, const char* key) {
  if (!j.is_number_integer())
    throw ConfigError(std::string("config: '") + key + "' must be an integer");
  return j.get<int>();
}

void only_keys(const json& obj, const std::set<std::string>& allowed, const std::string& where) {
  for (const auto& [k, v] : obj.items())
    if (!allowed.count(k)) throw ConfigError("config: unknown key '" + k + "' in " + where);
}

}  // namespace

void RunConfig::validate() const {
  if (!(omega0_hz > 0.0)) throw ConfigError("config: omega0_hz must be > 0");
  for (double g : g_over_delta_eps)
    if (!(g >= 0.0 && g <= 1.0))
      throw ConfigError("config: g_over_delta_eps entries must lie in [0, 1]");
  if (n_max < 2) throw ConfigError("config: n_max must be >= 2");
  if (grid_points < 2) throw ConfigError("config: grid_points must be >= 2");
  if (!(time_span_periods > 0.0)) throw ConfigError("config: time_span_periods must be > 0");
  if (!(horizon_periods > 0.0)) throw ConfigError("config: horizon_periods must be > 0");
  if (methods.empty()) throw ConfigError("config: methods must not be empty");
  if (const auto* jc = std::get_if<JunctionConstants>(&junction)) {
    if (!(jc->e_j_ev > 0.0) || !(jc->e_c_ev > 0.0))
      throw ConfigError("config: junction energies must be > 0");
  }
}

CouplingElements RunConfig::coupling() const {
  if (const auto* c = std::get_if<CouplingElements>(&junction)) return *c;
  const auto& jc = std::get<JunctionConstants>(junction);
  JunctionSpec spec;
  spec.josephson_energy = jc.e_j_ev;
  spec.charging_energy = jc.e_c_ev;
  spec.target_level_splitting = kPlanckEvSeconds * omega0_hz;
  return derive_junction(spec);
}

ModelParams RunConfig::params(double g_over_delta_eps) const {
  return ModelParams::resonant(g_over_delta_eps, coupling(), n_max);
}

double RunConfig::seconds_per_time_unit() const {
  return 1.0 / (2.0 * std::numbers::pi * omega0_hz);
}

RunConfig parse_config(const json& j) {
  if (!j.is_object()) throw ConfigError("config: top level must be a JSON object");
  only_keys(j,
            {"junction", "coupling", "omega0_hz", "g_over_delta_eps", "n_max",
             "time_span_periods", "grid_points", "methods", "horizon_periods",
             "inject_non_hermitian"},
            "top level");
  RunConfig c;
  if (j.contains("junction") && j.contains("coupling"))
    throw ConfigError("config: give either 'junction' or 'coupling', not both");
  if (j.contains("junction")) {
    const auto& jj = j.at("junction");
    if (!jj.is_object()) throw ConfigError("config: 'junction' must be an object");
    only_keys(jj, {"e_j_ev", "e_c_ev"}, "junction");
    JunctionConstants jc;
    if (jj.contains("e_j_ev")) jc.e_j_ev = number(jj.at("e_j_ev"), "junction.e_j_ev");
    if (jj.contains("e_c_ev")) jc.e_c_ev = number(jj.at("e_c_ev"), "junction.e_c_ev");
    c.junction = jc;
  }
  if (j.contains("coupling")) {
    const auto& cj = j.at("coupling");
    if (!cj.is_object()) throw ConfigError("config: 'coupling' must be an object");
    only_keys(cj, {"x00", "x01", "x11"}, "coupling");
    for (const char* k : {"x00", "x01", "x11"})
      if (!cj.contains(k)) throw ConfigError(std::string("config: coupling.") + k + " missing");
    try {
      c.junction = CouplingElements::from_elements(number(cj.at("x00"), "coupling.x00"),
                                                   number(cj.at("x01"), "coupling.x01"),
                                                   number(cj.at("x11"), "coupling.x11"));
    } catch (const DomainError& e) {
      throw ConfigError(std::string("config: ") + e.what());
    }
  }
  if (j.contains("omega0_hz")) c.omega0_hz = number(j.at("omega0_hz"), "omega0_hz");
  if (j.contains("g_over_delta_eps")) {
    const auto& g = j.at("g_over_delta_eps");
    if (g.is_array()) {
      for (const auto& v : g) c.g_over_delta_eps.push_back(number(v, "g_over_delta_eps[]"));
      if (c.g_over_delta_eps.empty()) throw ConfigError("config: g_over_delta_eps is empty");
    } else {
      c.g_over_delta_eps = {number(g, "g_over_delta_eps")};
    }
  }
  if (j.contains("n_max")) c.n_max = integer(j.at("n_max"), "n_max");
  if (j.contains("time_span_periods"))
    c.time_span_periods = number(j.at("time_span_periods"), "time_span_periods");
  if (j.contains("grid_points")) c.grid_points = integer(j.at("grid_points"), "grid_points");
  if (j.contains("horizon_periods"))
    c.horizon_periods = number(j.at("horizon_periods"), "horizon_periods");
  if (j.contains("methods")) {
    const auto& m = j.at("methods");
    if (!m.is_array()) throw ConfigError("config: 'methods' must be an array of strings");
    c.methods.clear();
    for (const auto& v : m) {
      if (!v.is_string()) throw ConfigError("config: 'methods' must be an array of strings");
      try {
        c.methods.push_back(parse_method(v.get<std::string>()));
      } catch (const DomainError& e) {
        throw ConfigError(std::string("config: ") + e.what());
      }
    }
  }
  if (j.contains("inject_non_hermitian"))
    c.inject_non_hermitian = number(j.at("inject_non_hermitian"), "inject_non_hermitian");
  c.validate();
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError("config: cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::parse_error& e) {
    throw ConfigError("config: " + path + ": " + e.what());
  }
  return parse_config(j);
}

json to_json(const RunConfig& c) {
  json j;
  if (const auto* jc = std::get_if<JunctionConstants>(&c.junction)) {
    j["junction"] = {{"e_j_ev", jc->e_j_ev}, {"e_c_ev", jc->e_c_ev}};
  } else {
    const auto& x = std::get<CouplingElements>(c.junction);
    j["coupling"] = {{"x00", x.x00}, {"x01", x.x01}, {"x11", x.x11}};
  }
  j["omega0_hz"] = c.omega0_hz;
  j["g_over_delta_eps"] = c.g_over_delta_eps;
  j["n_max"] = c.n_max;
  j["time_span_periods"] = c.time_span_periods;
  j["grid_points"] = c.grid_points;
  j["horizon_periods"] = c.horizon_periods;
  json methods = json::array();
  for (auto m : c.methods) methods.push_back(to_string(m));
  j["methods"] = methods;
  return j;
}

std::vector<double> default_sweep_grid() {
  std::vector<double> g;
  for (int k = 1; k <= 50; ++k) g.push_back(k / 100.0);
  return g;
}

}  // namespace jcpt
