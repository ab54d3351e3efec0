#pragma once
// Qubit-resonator model: parameters, junction matrix elements and the
// truncated Hamiltonians over the product basis |m,n> = |m>_qubit (x) |n>_phonon.
//
// Internal units throughout: hbar = 1, omega0 = 1, epsilon0 = 0. Energies are
// in units of hbar*omega0 and times in units of 1/omega0.

#include <Eigen/Dense>

#include <cmath>
#include <complex>
#include <optional>
#include <string>

#include "jcpt/errors.hpp"

namespace jcpt {

template <typename Real>
using MatrixC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Real>
using VectorC = Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1>;
template <typename Real>
using VectorR = Eigen::Matrix<Real, Eigen::Dynamic, 1>;

using Complex = std::complex<double>;
using MatrixXc = MatrixC<double>;
using VectorXc = VectorC<double>;

inline constexpr double kPlanckEvSeconds = 4.135667696e-15;  // h in eV*s

/// Device constants of a current-biased junction, all in eV.
struct JunctionSpec {
  double josephson_energy = 0.0;
  double charging_energy = 0.0;
  /// Qubit splitting the bias point is chosen to produce.
  double target_level_splitting = 0.0;

  void validate() const;
};

/// Phase matrix elements x_mm' = <m|delta|m'> of the two lowest junction levels.
struct CouplingElements {
  double x00 = 0.0;
  double x01 = 0.0;
  double x11 = 0.0;
  // Set only when derived from a JunctionSpec.
  std::optional<double> delta_min;
  std::optional<double> cos_delta_min;

  /// Explicit elements; rejects x01 == 0.
  static CouplingElements from_elements(double x00, double x01, double x11);
};

/// Harmonic expansion of the tilted washboard at its minimum:
/// cos(delta_min) = splitting^2 / (8 E_c E_J), x01 = (2 E_c / (E_J cos delta_min))^(1/4),
/// x00 = x11 = delta_min.
CouplingElements derive_junction(const JunctionSpec& spec);

struct ModelParams {
  double epsilon0 = 0.0;
  double epsilon1 = 1.0;
  double omega0 = 1.0;
  double g = 0.0;
  CouplingElements coupling;
  int n_max = 5;

  double level_splitting() const { return epsilon1 - epsilon0; }
  /// omega_d = omega0 - (epsilon1 - epsilon0).
  double detuning() const { return omega0 - level_splitting(); }
  bool is_resonant(double tol = 1e-12) const { return std::abs(detuning()) <= tol * omega0; }
  Eigen::Index dim() const { return 2 * (Eigen::Index(n_max) + 1); }

  void validate() const;

  /// Resonant parameters with g = g_over_delta_eps * (epsilon1 - epsilon0).
  static ModelParams resonant(double g_over_delta_eps, const CouplingElements& coupling,
                              int n_max = 5);
};

/// Index of |m,n> in the product basis: m * (n_max + 1) + n.
Eigen::Index state_index(int m, int n, int n_max);

/// Dense complex matrix that is supposed to be Hermitian. The invariant is
/// checked by `hermiticity_residual` and enforced by consumers such as `eigh`.
template <typename Real = double>
class HermitianOperator {
 public:
  using Matrix = MatrixC<Real>;

  HermitianOperator() = default;
  explicit HermitianOperator(Matrix entries) : entries_(std::move(entries)) {
    if (entries_.rows() != entries_.cols())
      throw DomainError("HermitianOperator: matrix must be square");
  }

  Eigen::Index dim() const { return entries_.rows(); }
  const Matrix& matrix() const { return entries_; }
  std::complex<Real> operator()(Eigen::Index i, Eigen::Index j) const { return entries_(i, j); }

  /// max |H_ij - conj(H_ji)|
  Real hermiticity_residual() const {
    if (entries_.size() == 0) return Real(0);
    return (entries_ - entries_.adjoint()).cwiseAbs().maxCoeff();
  }

  friend HermitianOperator operator+(const HermitianOperator& a, const HermitianOperator& b) {
    return HermitianOperator(a.entries_ + b.entries_);
  }

 private:
  Matrix entries_;
};

namespace detail {

// Truncated phonon annihilation operator, <n-1|a|n> = sqrt(n).
template <typename Real>
MatrixC<Real> annihilation(int n_max) {
  const Eigen::Index n = n_max + 1;
  MatrixC<Real> a = MatrixC<Real>::Zero(n, n);
  for (Eigen::Index k = 1; k < n; ++k) a(k - 1, k) = std::sqrt(Real(k));
  return a;
}

// Places `block` into the (m, m') qubit block of a 2(n_max+1) matrix, scaled.
template <typename Real>
void add_qubit_block(MatrixC<Real>& h, int m, int mp, const MatrixC<Real>& block,
                     std::complex<Real> scale) {
  const Eigen::Index n = block.rows();
  h.block(m * n, mp * n, n, n) += scale * block;
}

template <typename Real>
MatrixC<Real> uncoupled_part(const ModelParams& p) {
  const Eigen::Index n = p.n_max + 1;
  MatrixC<Real> h = MatrixC<Real>::Zero(2 * n, 2 * n);
  for (Eigen::Index k = 0; k < n; ++k) {
    h(k, k) = Real(p.epsilon0) + Real(k) * Real(p.omega0);
    h(n + k, n + k) = Real(p.epsilon1) + Real(k) * Real(p.omega0);
  }
  return h;
}

}  // namespace detail

/// Two-level restriction of the full junction-resonator Hamiltonian,
///   H = sum_m eps_m |m><m| + omega0 a^dag a - i g sum_mm' x_mm' |m><m'| (a - a^dag).
template <typename Real = double>
HermitianOperator<Real> build_full_hamiltonian(const ModelParams& p) {
  p.validate();
  const auto a = detail::annihilation<Real>(p.n_max);
  const MatrixC<Real> quad = a - a.adjoint();
  const std::complex<Real> mig(Real(0), -Real(p.g));
  const auto& x = p.coupling;

  MatrixC<Real> h = detail::uncoupled_part<Real>(p);
  detail::add_qubit_block<Real>(h, 0, 0, quad, mig * Real(x.x00));
  detail::add_qubit_block<Real>(h, 0, 1, quad, mig * Real(x.x01));
  detail::add_qubit_block<Real>(h, 1, 0, quad, mig * Real(x.x01));
  detail::add_qubit_block<Real>(h, 1, 1, quad, mig * Real(x.x11));
  return HermitianOperator<Real>(std::move(h));
}

template <typename Real = double>
struct JcSplit {
  HermitianOperator<Real> jc;  // excitation-conserving part
  HermitianOperator<Real> v;   // counter-rotating and diagonal-displacement part
};

/// H = H_JC + V with
///   H_JC = eps0 |0><0| + eps1 |1><1| + omega0 a^dag a - i g x01 (|1><0| a - |0><1| a^dag)
///   V    = -i g [x00 |0><0|(a - a^dag) + x01 |0><1| a - x01 |1><0| a^dag + x11 |1><1|(a - a^dag)]
template <typename Real = double>
JcSplit<Real> build_jc_and_v(const ModelParams& p) {
  p.validate();
  const auto a = detail::annihilation<Real>(p.n_max);
  const MatrixC<Real> ad = a.adjoint();
  const MatrixC<Real> quad = a - ad;
  const std::complex<Real> mig(Real(0), -Real(p.g));
  const auto& x = p.coupling;
  const Eigen::Index d = p.dim();

  MatrixC<Real> jc = detail::uncoupled_part<Real>(p);
  detail::add_qubit_block<Real>(jc, 1, 0, a, mig * Real(x.x01));
  detail::add_qubit_block<Real>(jc, 0, 1, ad, -mig * Real(x.x01));

  MatrixC<Real> v = MatrixC<Real>::Zero(d, d);
  detail::add_qubit_block<Real>(v, 0, 0, quad, mig * Real(x.x00));
  detail::add_qubit_block<Real>(v, 0, 1, a, mig * Real(x.x01));
  detail::add_qubit_block<Real>(v, 1, 0, ad, -mig * Real(x.x01));
  detail::add_qubit_block<Real>(v, 1, 1, quad, mig * Real(x.x11));
  return {HermitianOperator<Real>(std::move(jc)), HermitianOperator<Real>(std::move(v))};
}

}  // namespace jcpt
