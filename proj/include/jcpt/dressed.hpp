#pragma once
// Closed-form Jaynes-Cummings machinery: Rabi frequencies, dressed states
// |psi_j^sigma> and energies W_j^sigma, and the matrix elements of the
// counter-rotating perturbation V between dressed states.
//
// Sigma is the integer +1 or -1 everywhere so formulas read literally.
// The dressed-state phase convention assumes x01 > 0; a negative x01 is the
// same physics after |1> -> -|1>, and is rejected here.

#include <string>
#include <vector>

#include "jcpt/model.hpp"

namespace jcpt {

struct DressedIndex {
  bool ground = true;  // |00>
  int j = 0;
  int sigma = 0;

  static DressedIndex ground_state() { return {}; }
  static DressedIndex excited(int j, int sigma);

  std::string label() const;  // "00", "0+", "2-", ...
  friend bool operator==(const DressedIndex&, const DressedIndex&) = default;
};

struct DressedState {
  DressedIndex index;
  VectorXc vector;  // coefficients in the |m,n> basis
  double energy = 0.0;
};

/// Omega_j(0) = sqrt(j+1) * 2 g |x01|
double resonant_rabi_frequency(int j, const ModelParams& p);
/// Omega_j(omega_d) = sqrt(Omega_j(0)^2 + omega_d^2)
double rabi_frequency(int j, double detuning, const ModelParams& p);

/// W_j^sigma = eps0 + (j+1) omega0 - omega_d/2 + sigma Omega_j(omega_d)/2; 0 for |00>.
double dressed_energy(const DressedIndex& index, double detuning, const ModelParams& p);
/// Resonant shorthand, W_j^sigma = eps0 + (j+1) omega0 + sigma sqrt(j+1) Omega_0(0)/2.
double resonant_energy(int j, int sigma, const ModelParams& p);

/// Eigenstate of the Jaynes-Cummings Hamiltonian whose splitting is eps0 + omega0 - detuning.
DressedState dressed_state(const DressedIndex& index, double detuning, const ModelParams& p);

/// <psi_j^sigma|V|psi_j'^sigma'> at resonance.
Complex v_element(const DressedIndex& row, const DressedIndex& col, const ModelParams& p);
/// <psi_j^sigma|V|00> at resonance.
Complex v_ground_element(const DressedIndex& row, const ModelParams& p);

/// {00, (0,+), (0,-), (1,+), ..., (n_max-1,-)}: every dressed state that fits the truncation.
std::vector<DressedIndex> dressed_ladder(int n_max);

/// Columns are the resonant dressed states in `dressed_ladder` order.
MatrixXc dressed_basis(const ModelParams& p);

}  // namespace jcpt
