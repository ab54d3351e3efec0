#pragma once
// Second-order dressed-state perturbation theory at resonance.
//
// V has no matrix elements diagonal in j, so the leading corrections to the
// dressed propagator are O(V^2). Everything here is a closed form for the
// untruncated phonon ladder and does not depend on ModelParams::n_max.

#include <Eigen/Dense>

#include <array>

#include "jcpt/dressed.hpp"
#include "jcpt/model.hpp"

namespace jcpt {

/// Every energy denominator must satisfy |d| >= kDegeneracyGuard * omega0.
inline constexpr double kDegeneracyGuard = 1e-9;

/// Corrected energies and normalization constants for |00> and j = 0, 1, 2.
struct CorrectedSpectrum {
  double e_ground = 0.0;                          // E_00
  double a_ground = 1.0;                          // A_00
  std::array<std::array<double, 2>, 3> e_excited{};  // [j][sigma == +1 ? 0 : 1]
  std::array<std::array<double, 2>, 3> a_excited{};

  double energy(int j, int sigma) const { return e_excited.at(j)[sigma > 0 ? 0 : 1]; }
  double norm(int j, int sigma) const { return a_excited.at(j)[sigma > 0 ? 0 : 1]; }
};

struct Normalizations {
  double a_ground = 1.0;
  std::array<std::array<double, 2>, 3> a_excited{};

  double norm(int j, int sigma) const { return a_excited.at(j)[sigma > 0 ? 0 : 1]; }
};

/// E_00 = -(g^2/2) sum_sigma (x00^2 / W_0^sigma + x01^2 / W_1^sigma)
double corrected_ground_energy(const ModelParams& p);

/// E_jsigma = W_j^sigma + |<psi_j^sigma|V|00>|^2 / W_j^sigma
///          + sum_{j' != j, sigma'} |<psi_j^sigma|V|psi_j'^sigma'>|^2 / (W_j^sigma - W_j'^sigma'),
/// j in {0, 1, 2}.
double corrected_energy(int j, int sigma, const ModelParams& p);

/// A_00, A_0sigma, A_1sigma, A_2sigma.
Normalizations normalizations(const ModelParams& p);

CorrectedSpectrum corrected_spectrum(const ModelParams& p);

/// X_{sigma sigma'} = sqrt(2) x00 + sigma sigma' x11
double x_combination(int sigma, int sigma_p, const CouplingElements& x);

/// Largest |V_ab / (W_a - W_b)| over the couplings entering the G_00 closed
/// form; a cheap indicator of how far the expansion is being pushed.
double expansion_ratio(const ModelParams& p);

/// Second-order G_00^{sigma sigma'}(t) = <psi_0^sigma| e^{-iHt} |psi_0^sigma'>.
/// Builds the corrected spectrum once; evaluate at as many times as needed.
class DressedPropagator {
 public:
  explicit DressedPropagator(const ModelParams& p);

  Complex operator()(int sigma, int sigma_p, double t) const;
  /// Rows/cols ordered (+, -).
  Eigen::Matrix2cd matrix(double t) const;

  const CorrectedSpectrum& spectrum() const { return spectrum_; }

 private:
  // Coefficient/frequency pairs for each (sigma, sigma') entry.
  struct Term {
    double coefficient;
    double energy;
  };
  std::array<std::array<std::vector<Term>, 2>, 2> terms_;
  CorrectedSpectrum spectrum_;
};

Complex g00_propagator(int sigma, int sigma_p, double t, const ModelParams& p);

struct PerturbativeAmplitudes {
  Complex c10;
  Complex c01;
};

/// c_10 and c_01 for the initial state |10>, interaction picture.
PerturbativeAmplitudes pert_amplitudes(double t, const ModelParams& p);
PerturbativeAmplitudes pert_amplitudes(double t, const DressedPropagator& g, const ModelParams& p);

}  // namespace jcpt
