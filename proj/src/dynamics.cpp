#include "jcpt/dynamics.hpp"

#include <cmath>
#include <numbers>

#include "jcpt/dressed.hpp"
#include "jcpt/errors.hpp"
#include "jcpt/linalg.hpp"
#include "jcpt/perturbation.hpp"

namespace jcpt {
namespace {

void require_times(const std::vector<double>& times) {
  if (times.empty()) throw DomainError("amplitudes: time grid is empty");
  for (double t : times)
    if (!(t >= 0.0)) throw DomainError("amplitudes: times must be nonnegative");
}

AmplitudeSeries two_state_series(Method m, const std::vector<double>& times) {
  AmplitudeSeries s;
  s.method = m;
  s.times = times;
  s.states = {{1, 0}, {0, 1}};
  s.amplitudes.resize(Eigen::Index(times.size()), 2);
  return s;
}

}  // namespace

std::string to_string(Method m) {
  switch (m) {
    case Method::exact: return "exact";
    case Method::rwa: return "rwa";
    case Method::perturbative: return "perturbative";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  if (name == "exact") return Method::exact;
  if (name == "rwa") return Method::rwa;
  if (name == "perturbative" || name == "pert") return Method::perturbative;
  throw DomainError("unknown method '" + name + "'");
}

Eigen::Index AmplitudeSeries::column(BasisLabel s) const {
  for (std::size_t k = 0; k < states.size(); ++k)
    if (states[k] == s) return Eigen::Index(k);
  throw DomainError("AmplitudeSeries: state |" + std::to_string(s.m) + std::to_string(s.n) +
                    "> is not tracked by the " + to_string(method) + " series");
}

double vacuum_rabi_period(const ModelParams& p) {
  const double om = resonant_rabi_frequency(0, p);
  if (!(om > 0.0)) throw DomainError("vacuum_rabi_period: undefined for g = 0");
  return 2.0 * std::numbers::pi / om;
}

std::vector<double> time_grid(const ModelParams& p, double periods, int points) {
  if (points < 2) throw DomainError("time_grid: need at least 2 points");
  if (!(periods > 0.0)) throw DomainError("time_grid: span must be positive");
  const double span = periods * vacuum_rabi_period(p);
  std::vector<double> t(static_cast<std::size_t>(points));
  for (int i = 0; i < points; ++i) t[std::size_t(i)] = span * double(i) / double(points - 1);
  return t;
}

AmplitudeSeries exact_amplitudes(const ModelParams& p, const std::vector<double>& times) {
  require_times(times);
  const auto h = build_full_hamiltonian(p);
  const auto decomp = eigh(h);
  VectorXc psi0 = VectorXc::Zero(p.dim());
  psi0(state_index(1, 0, p.n_max)) = 1.0;
  const SpectralEvolution<double> evo(decomp, psi0);

  AmplitudeSeries s;
  s.method = Method::exact;
  s.times = times;
  for (int m = 0; m <= 1; ++m)
    for (int n = 0; n <= p.n_max; ++n) s.states.push_back({m, n});
  s.amplitudes.resize(Eigen::Index(times.size()), p.dim());

  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const VectorXc psi = evo.at(t);
    for (const auto& st : s.states) {
      const auto k = state_index(st.m, st.n, p.n_max);
      const double e_mn = (st.m == 0 ? p.epsilon0 : p.epsilon1) + st.n * p.omega0;
      s.amplitudes(Eigen::Index(i), k) = std::polar(1.0, e_mn * t) * psi(k);
    }
  }
  return s;
}

AmplitudeSeries rwa_amplitudes(const ModelParams& p, const std::vector<double>& times) {
  require_times(times);
  if (!p.is_resonant()) throw DomainError("rwa_amplitudes: only the resonant case is supported");
  auto s = two_state_series(Method::rwa, times);
  const double wp = resonant_energy(0, +1, p);
  const double wm = resonant_energy(0, -1, p);
  const double e01 = p.epsilon0 + p.omega0;
  const double e10 = p.epsilon1;
  const Complex I(0.0, 1.0);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const double t = times[i];
    const Complex gp = std::polar(1.0, -wp * t), gm = std::polar(1.0, -wm * t);
    // G_00 diagonal: c01 = (i/2)(G++ - G--), c10 = (1/2)(G++ + G--).
    s.amplitudes(Eigen::Index(i), 0) = 0.5 * std::polar(1.0, e10 * t) * (gp + gm);
    s.amplitudes(Eigen::Index(i), 1) = 0.5 * I * std::polar(1.0, e01 * t) * (gp - gm);
  }
  return s;
}

AmplitudeSeries perturbative_amplitudes(const ModelParams& p, const std::vector<double>& times) {
  require_times(times);
  auto s = two_state_series(Method::perturbative, times);
  const DressedPropagator g(p);
  for (std::size_t i = 0; i < times.size(); ++i) {
    const auto c = pert_amplitudes(times[i], g, p);
    s.amplitudes(Eigen::Index(i), 0) = c.c10;
    s.amplitudes(Eigen::Index(i), 1) = c.c01;
  }
  return s;
}

AmplitudeSeries amplitudes(Method m, const ModelParams& p, const std::vector<double>& times) {
  switch (m) {
    case Method::exact: return exact_amplitudes(p, times);
    case Method::rwa: return rwa_amplitudes(p, times);
    case Method::perturbative: return perturbative_amplitudes(p, times);
  }
  throw DomainError("amplitudes: unknown method");
}

SupErrors sup_difference(const AmplitudeSeries& a, const AmplitudeSeries& b) {
  if (a.times != b.times) throw DomainError("sup_difference: series use different time grids");
  SupErrors e;
  for (Eigen::Index i = 0; i < a.size(); ++i) {
    e.p10 = std::max(e.p10, std::abs(a.p10(i) - b.p10(i)));
    e.p01 = std::max(e.p01, std::abs(a.p01(i) - b.p01(i)));
  }
  return e;
}

}  // namespace jcpt
