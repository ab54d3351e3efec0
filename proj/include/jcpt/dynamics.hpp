#pragma once
// Interaction-picture amplitudes c_mn(t) = e^{i E_mn t} <mn| e^{-iHt} |10>
// for the exact, rotating-wave and perturbative methods. Every method is
// evaluated pointwise in closed or spectral form; there is no integrator.

#include <Eigen/Dense>

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "jcpt/model.hpp"

namespace jcpt {

enum class Method { exact, rwa, perturbative };

std::string to_string(Method m);
Method parse_method(const std::string& name);

struct BasisLabel {
  int m = 0;
  int n = 0;
  friend bool operator==(const BasisLabel&, const BasisLabel&) = default;
};

struct AmplitudeSeries {
  Method method = Method::exact;
  std::vector<double> times;
  std::vector<BasisLabel> states;  // tracked states, one column each
  MatrixXc amplitudes;             // rows: time points

  Eigen::Index size() const { return Eigen::Index(times.size()); }
  Eigen::Index column(BasisLabel s) const;
  Complex amplitude(BasisLabel s, Eigen::Index i) const { return amplitudes(i, column(s)); }
  Complex c10(Eigen::Index i) const { return amplitude({1, 0}, i); }
  Complex c01(Eigen::Index i) const { return amplitude({0, 1}, i); }
  double p10(Eigen::Index i) const { return std::norm(c10(i)); }
  double p01(Eigen::Index i) const { return std::norm(c01(i)); }
  /// 1 - p10 - p01. For the perturbative method this is inferred, not computed.
  double leakage(Eigen::Index i) const { return 1.0 - p10(i) - p01(i); }
  /// sum over tracked states of |c|^2 (exact: total probability).
  double total_probability(Eigen::Index i) const { return amplitudes.row(i).squaredNorm(); }
};

/// 2 pi / Omega_0(0): one period of the vacuum Rabi population oscillation.
double vacuum_rabi_period(const ModelParams& p);

/// `points` uniform samples over [0, periods * vacuum_rabi_period].
std::vector<double> time_grid(const ModelParams& p, double periods = 2.0, int points = 2001);

AmplitudeSeries exact_amplitudes(const ModelParams& p, const std::vector<double>& times);
AmplitudeSeries rwa_amplitudes(const ModelParams& p, const std::vector<double>& times);
AmplitudeSeries perturbative_amplitudes(const ModelParams& p, const std::vector<double>& times);

AmplitudeSeries amplitudes(Method m, const ModelParams& p, const std::vector<double>& times);

/// Largest pointwise difference over the shared grid of |c10|^2 and |c01|^2.
struct SupErrors {
  double p10 = 0.0;
  double p01 = 0.0;
  double max() const { return std::max(p10, p01); }
};
SupErrors sup_difference(const AmplitudeSeries& a, const AmplitudeSeries& b);

}  // namespace jcpt
