#include "jcpt/dressed.hpp"

#include <cmath>

namespace jcpt {
namespace {

void require_sigma(int sigma) {
  if (sigma != 1 && sigma != -1)
    throw DomainError("dressed: sigma must be +1 or -1, got " + std::to_string(sigma));
}

void require_positive_x01(const ModelParams& p) {
  if (!(p.coupling.x01 > 0.0))
    throw DomainError("dressed: the dressed-state convention requires x01 > 0");
}

void require_resonant(const ModelParams& p, const char* what) {
  if (!p.is_resonant())
    throw DomainError(std::string(what) + ": only defined at resonance (detuning = " +
                      std::to_string(p.detuning()) + ")");
}

void require_excited(const DressedIndex& idx, const char* what) {
  if (idx.ground) throw DomainError(std::string(what) + ": expects an excited dressed index");
}

double delta(int a, int b) { return a == b ? 1.0 : 0.0; }

}  // namespace

DressedIndex DressedIndex::excited(int j, int sigma) {
  if (j < 0) throw DomainError("DressedIndex: j must be >= 0");
  require_sigma(sigma);
  return DressedIndex{false, j, sigma};
}

std::string DressedIndex::label() const {
  if (ground) return "00";
  return std::to_string(j) + (sigma > 0 ? "+" : "-");
}

double resonant_rabi_frequency(int j, const ModelParams& p) {
  if (j < 0) throw DomainError("rabi_frequency: j must be >= 0");
  return std::sqrt(double(j) + 1.0) * 2.0 * p.g * std::abs(p.coupling.x01);
}

double rabi_frequency(int j, double detuning, const ModelParams& p) {
  return std::hypot(resonant_rabi_frequency(j, p), detuning);
}

double dressed_energy(const DressedIndex& index, double detuning, const ModelParams& p) {
  if (index.ground) return 0.0;
  require_sigma(index.sigma);
  return p.epsilon0 + (index.j + 1) * p.omega0 - detuning / 2.0 +
         index.sigma * rabi_frequency(index.j, detuning, p) / 2.0;
}

double resonant_energy(int j, int sigma, const ModelParams& p) {
  require_sigma(sigma);
  return p.epsilon0 + (j + 1) * p.omega0 +
         sigma * std::sqrt(double(j) + 1.0) * resonant_rabi_frequency(0, p) / 2.0;
}

DressedState dressed_state(const DressedIndex& index, double detuning, const ModelParams& p) {
  DressedState out;
  out.index = index;
  out.vector = VectorXc::Zero(p.dim());
  if (index.ground) {
    out.vector(state_index(0, 0, p.n_max)) = 1.0;
    out.energy = 0.0;
    return out;
  }
  require_sigma(index.sigma);
  require_positive_x01(p);
  if (index.j > p.n_max - 1)
    throw DomainError("dressed_state: j=" + std::to_string(index.j) +
                      " needs |0,j+1>, beyond n_max=" + std::to_string(p.n_max));

  const int j = index.j;
  const double s = index.sigma;
  Complex c0, c1;  // on |0,j+1> and |1,j>
  if (detuning == 0.0) {
    c0 = 1.0 / std::sqrt(2.0);
    c1 = Complex(0.0, -s / std::sqrt(2.0));
  } else {
    const double om = rabi_frequency(j, detuning, p);
    const double om0 = resonant_rabi_frequency(j, p);
    // Omega + sigma*omega_d, written without cancellation when sigma*omega_d < 0.
    const double top = s * detuning >= 0.0 ? om + std::abs(detuning)
                                            : om0 * om0 / (om + std::abs(detuning));
    if (top > 0.0) {
      c0 = std::sqrt(top / (2.0 * om));
      c1 = Complex(0.0, -s * om0 / std::sqrt(2.0 * om * top));
    } else {
      // Decoupled and detuned the wrong way: the state is the bare |1,j>.
      c0 = 0.0;
      c1 = Complex(0.0, -s);
    }
  }
  out.vector(state_index(0, j + 1, p.n_max)) = c0;
  out.vector(state_index(1, j, p.n_max)) = c1;
  out.energy = dressed_energy(index, detuning, p);
  return out;
}

Complex v_element(const DressedIndex& row, const DressedIndex& col, const ModelParams& p) {
  require_excited(row, "v_element");
  require_excited(col, "v_element");
  require_resonant(p, "v_element");
  require_sigma(row.sigma);
  require_sigma(col.sigma);
  const int j = row.j, jp = col.j;
  const double s = row.sigma, sp = col.sigma;
  const auto& x = p.coupling;
  const double sq_j = std::sqrt(double(j));
  const double sq_j1 = std::sqrt(double(j) + 1.0);
  const double sq_j2 = std::sqrt(double(j) + 2.0);
  const Complex I(0.0, 1.0);

  const Complex bracket = sq_j2 * x.x00 * delta(j + 1, jp) - sq_j1 * x.x00 * delta(j, jp + 1) -
                          I * s * sq_j * x.x01 * delta(j, jp + 2) -
                          I * sp * sq_j2 * x.x01 * delta(j + 2, jp) +
                          s * sp * x.x11 * (sq_j1 * delta(j + 1, jp) - sq_j * delta(j, jp + 1));
  return -I * (p.g / 2.0) * bracket;
}

Complex v_ground_element(const DressedIndex& row, const ModelParams& p) {
  require_excited(row, "v_ground_element");
  require_resonant(p, "v_ground_element");
  require_sigma(row.sigma);
  if (row.j == 0) return Complex(0.0, p.g * p.coupling.x00 / std::sqrt(2.0));
  // The frequency Omega_0(0) enters as the energy hbar*Omega_0(0) (hbar = 1).
  if (row.j == 1) return Complex(-row.sigma * resonant_rabi_frequency(0, p) / (2.0 * std::sqrt(2.0)), 0.0);
  return 0.0;
}

std::vector<DressedIndex> dressed_ladder(int n_max) {
  std::vector<DressedIndex> out{DressedIndex::ground_state()};
  for (int j = 0; j + 1 <= n_max; ++j) {
    out.push_back(DressedIndex::excited(j, +1));
    out.push_back(DressedIndex::excited(j, -1));
  }
  return out;
}

MatrixXc dressed_basis(const ModelParams& p) {
  const auto ladder = dressed_ladder(p.n_max);
  MatrixXc t(p.dim(), Eigen::Index(ladder.size()));
  for (std::size_t k = 0; k < ladder.size(); ++k)
    t.col(Eigen::Index(k)) = dressed_state(ladder[k], 0.0, p).vector;
  return t;
}

}  // namespace jcpt
