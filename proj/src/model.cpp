#include "jcpt/model.hpp"

#include <cmath>

namespace jcpt {

void JunctionSpec::validate() const {
  if (!(josephson_energy > 0.0)) throw DomainError("JunctionSpec: josephson_energy must be > 0");
  if (!(charging_energy > 0.0)) throw DomainError("JunctionSpec: charging_energy must be > 0");
  if (!(target_level_splitting > 0.0))
    throw DomainError("JunctionSpec: target_level_splitting must be > 0");
}

CouplingElements CouplingElements::from_elements(double x00, double x01, double x11) {
  if (x01 == 0.0 || !std::isfinite(x01))
    throw DomainError("CouplingElements: x01 must be finite and nonzero");
  if (!std::isfinite(x00) || !std::isfinite(x11))
    throw DomainError("CouplingElements: x00 and x11 must be finite");
  CouplingElements c;
  c.x00 = x00;
  c.x01 = x01;
  c.x11 = x11;
  return c;
}

CouplingElements derive_junction(const JunctionSpec& spec) {
  spec.validate();
  const double s = spec.target_level_splitting;
  double cos_dm = s * s / (8.0 * spec.charging_energy * spec.josephson_energy);
  if (cos_dm > 1.0 && cos_dm <= 1.0 + 1e-12) cos_dm = 1.0;  // rounding at zero bias
  if (cos_dm > 1.0)
    throw DomainError("derive_junction: no resonant bias point (cos(delta_min) = " +
                      std::to_string(cos_dm) + " > 1)");
  const double dm = std::acos(cos_dm);
  CouplingElements c;
  c.x01 = std::pow(2.0 * spec.charging_energy / (spec.josephson_energy * cos_dm), 0.25);
  c.x00 = dm;
  c.x11 = dm;
  c.delta_min = dm;
  c.cos_delta_min = cos_dm;
  return c;
}

void ModelParams::validate() const {
  if (n_max < 0) throw DomainError("ModelParams: n_max must be >= 0");
  if (!(g >= 0.0) || !std::isfinite(g)) throw DomainError("ModelParams: g must be finite and >= 0");
  if (!(omega0 > 0.0)) throw DomainError("ModelParams: omega0 must be > 0");
  if (coupling.x01 == 0.0) throw DomainError("ModelParams: coupling.x01 must be nonzero");
}

ModelParams ModelParams::resonant(double g_over_delta_eps, const CouplingElements& coupling,
                                  int n_max) {
  ModelParams p;
  p.epsilon0 = 0.0;
  p.omega0 = 1.0;
  p.epsilon1 = 1.0;
  p.g = g_over_delta_eps * p.level_splitting();
  p.coupling = coupling;
  p.n_max = n_max;
  p.validate();
  return p;
}

Eigen::Index state_index(int m, int n, int n_max) {
  if (m < 0 || m > 1) throw DomainError("state_index: qubit level m=" + std::to_string(m) +
                                        " outside {0,1}");
  if (n < 0 || n > n_max)
    throw DomainError("state_index: phonon number n=" + std::to_string(n) + " outside [0, " +
                      std::to_string(n_max) + "]");
  return Eigen::Index(m) * (n_max + 1) + n;
}

}  // namespace jcpt
