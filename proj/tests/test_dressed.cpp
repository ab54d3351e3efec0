#include "doctest.h"

#include "jcpt/dressed.hpp"
#include "jcpt/linalg.hpp"
#include "oracles.hpp"

using namespace jcpt;

namespace {

CouplingElements device() {
  JunctionSpec s;
  s.josephson_energy = 43.1e-3;
  s.charging_energy = 53.4e-9;
  s.target_level_splitting = kPlanckEvSeconds * 10e9;
  return derive_junction(s);
}

oracle::Pieces pieces(const ModelParams& p, double detuning = 0.0) {
  const auto& x = p.coupling;
  return oracle::hamiltonian(p.epsilon0, p.epsilon0 + p.omega0 - detuning, p.omega0, p.g, x.x00,
                             x.x01, x.x11, p.n_max);
}

// Eigenvalues and eigenvectors of the two-state block {|1,j>, |0,j+1>}.
Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd> block(const MatrixXc& jc, int j, int n_max) {
  const auto a = state_index(1, j, n_max), b = state_index(0, j + 1, n_max);
  Eigen::Matrix2cd m;
  m << jc(a, a), jc(a, b), jc(b, a), jc(b, b);
  return Eigen::SelfAdjointEigenSolver<Eigen::Matrix2cd>(m);
}

Eigen::Vector2cd block_part(const VectorXc& v, int j, int n_max) {
  return {v(state_index(1, j, n_max)), v(state_index(0, j + 1, n_max))};
}

}  // namespace

TEST_CASE("Rabi frequencies") {
  const auto p = ModelParams::resonant(0.1, device());
  const double om0 = 2.0 * p.g * p.coupling.x01;
  CHECK(rabi_frequency(0, 0.0, p) == doctest::Approx(om0).epsilon(1e-15));
  CHECK(resonant_rabi_frequency(0, p) == doctest::Approx(om0).epsilon(1e-15));
  CHECK(rabi_frequency(3, 0.0, p) == doctest::Approx(2.0 * om0).epsilon(1e-15));
  const double big = 1e3 * om0;
  CHECK(rabi_frequency(0, big, p) == doctest::Approx(big).epsilon(1e-6));
}

TEST_CASE("resonant dressed states and energies") {
  const auto p = ModelParams::resonant(0.1, device());
  const auto s = dressed_state(DressedIndex::excited(0, +1), 0.0, p);
  const double r = 1.0 / std::sqrt(2.0);
  CHECK(std::abs(s.vector(state_index(0, 1, p.n_max)) - Complex(r, 0.0)) < 1e-15);
  CHECK(std::abs(s.vector(state_index(1, 0, p.n_max)) - Complex(0.0, -r)) < 1e-15);
  CHECK(s.vector.norm() == doctest::Approx(1.0).epsilon(1e-15));

  const auto g0 = dressed_state(DressedIndex::ground_state(), 0.0, p);
  CHECK(g0.energy == 0.0);
  CHECK(std::abs(g0.vector(0) - 1.0) == 0.0);

  const double om0 = resonant_rabi_frequency(0, p);
  for (int sg : {+1, -1})
    CHECK(dressed_energy(DressedIndex::excited(0, sg), 0.0, p) ==
          doctest::Approx(p.omega0 + sg * om0 / 2.0).epsilon(1e-15));

  const auto q = ModelParams::resonant(0.0, device());
  for (int j = 0; j < 4; ++j)
    for (int sg : {+1, -1})
      CHECK(dressed_energy(DressedIndex::excited(j, sg), 0.0, q) == doctest::Approx(j + 1.0));
}

TEST_CASE("detuned dressed states match the diagonalized excitation block") {
  const auto p = ModelParams::resonant(0.2, device());
  struct Case {
    int j, sigma;
    double detuning;
  };
  for (const auto c : {Case{1, -1, resonant_rabi_frequency(1, p)}, Case{2, -1, 0.3},
                       Case{0, +1, -0.05}, Case{3, +1, 0.0}, Case{2, +1, -0.7}}) {
    const auto jc = pieces(p, c.detuning).jc;
    const auto es = block(jc, c.j, p.n_max);
    const int col = c.sigma > 0 ? 1 : 0;
    const auto st = dressed_state(DressedIndex::excited(c.j, c.sigma), c.detuning, p);
    CHECK(st.energy == doctest::Approx(es.eigenvalues()(col)).epsilon(1e-13));
    const Complex overlap = es.eigenvectors().col(col).dot(block_part(st.vector, c.j, p.n_max));
    CHECK(std::abs(overlap) == doctest::Approx(1.0).epsilon(1e-13));
    CHECK((jc * st.vector - st.energy * st.vector).norm() < 1e-13);
  }
}

TEST_CASE("detuning continuity") {
  const auto p = ModelParams::resonant(0.1, device());
  for (int j = 0; j < 3; ++j)
    for (int sg : {+1, -1}) {
      const auto idx = DressedIndex::excited(j, sg);
      const auto r = dressed_state(idx, 0.0, p).vector;
      for (double wd : {1e-8, -1e-8})
        CHECK((dressed_state(idx, wd * p.omega0, p).vector - r).cwiseAbs().maxCoeff() < 1e-6);
    }
}

TEST_CASE("dressed basis is orthonormal, complete up to |1,n_max> and diagonalizes H_JC") {
  const auto p = ModelParams::resonant(0.3, device(), 6);
  const MatrixXc t = dressed_basis(p);
  const auto ladder = dressed_ladder(p.n_max);
  REQUIRE(t.cols() == Eigen::Index(ladder.size()));
  CHECK((t.adjoint() * t - MatrixXc::Identity(t.cols(), t.cols())).cwiseAbs().maxCoeff() < 1e-12);

  MatrixXc defect = MatrixXc::Identity(p.dim(), p.dim()) - t * t.adjoint();
  const auto top = state_index(1, p.n_max, p.n_max);
  defect(top, top) -= 1.0;
  CHECK(defect.cwiseAbs().maxCoeff() < 1e-12);

  const auto jc = pieces(p).jc;
  for (std::size_t k = 0; k < ladder.size(); ++k) {
    const double w = dressed_energy(ladder[k], 0.0, p);
    CHECK((jc * t.col(Eigen::Index(k)) - w * t.col(Eigen::Index(k))).norm() <= 1e-10);
  }
}

TEST_CASE("V elements: closed forms against change of basis") {
  const auto p = ModelParams::resonant(0.3, device(), 8);
  const auto ladder = dressed_ladder(p.n_max);
  const MatrixXc t = dressed_basis(p);
  const MatrixXc vd = t.adjoint() * pieces(p).v * t;
  double worst = 0.0, worst_ground = 0.0;
  for (std::size_t a = 1; a < ladder.size(); ++a) {
    if (ladder[a].j > p.n_max - 3) continue;
    worst_ground = std::max(worst_ground, std::abs(v_ground_element(ladder[a], p) - vd(Eigen::Index(a), 0)));
    for (std::size_t b = 1; b < ladder.size(); ++b) {
      if (ladder[b].j > p.n_max - 3) continue;
      const Complex f = v_element(ladder[a], ladder[b], p);
      worst = std::max(worst, std::abs(f - vd(Eigen::Index(a), Eigen::Index(b))));
      CHECK(std::abs(f - std::conj(v_element(ladder[b], ladder[a], p))) < 1e-15);
    }
  }
  CHECK(worst < 1e-12);
  CHECK(worst_ground < 1e-12);
}

TEST_CASE("V elements: documented values") {
  const auto p = ModelParams::resonant(0.2, device());
  const auto& x = p.coupling;
  for (int sg : {+1, -1})
    for (int sp : {+1, -1})
      CHECK(std::abs(v_element(DressedIndex::excited(0, sg), DressedIndex::excited(0, sp), p)) == 0.0);
  const Complex e01 = v_element(DressedIndex::excited(0, +1), DressedIndex::excited(1, +1), p);
  CHECK(std::abs(e01 - Complex(0.0, -p.g / 2.0) * (std::sqrt(2.0) * x.x00 + x.x11)) < 1e-15);

  for (int sg : {+1, -1})
    CHECK(std::abs(v_ground_element(DressedIndex::excited(2, sg), p)) == 0.0);
  CHECK(std::abs(v_ground_element(DressedIndex::excited(0, +1), p) -
                 Complex(0.0, p.g * x.x00 / std::sqrt(2.0))) < 1e-15);
  CHECK(std::abs(v_ground_element(DressedIndex::excited(1, -1), p) -
                 resonant_rabi_frequency(0, p) / (2.0 * std::sqrt(2.0))) < 1e-15);
}

TEST_CASE("dressed preconditions") {
  auto p = ModelParams::resonant(0.2, device(), 3);
  CHECK_THROWS_AS(dressed_state(DressedIndex::excited(3, +1), 0.0, p), DomainError);
  CHECK_THROWS_AS(DressedIndex::excited(0, 2), DomainError);
  p.coupling.x01 = -p.coupling.x01;
  CHECK_THROWS_AS(dressed_state(DressedIndex::excited(0, +1), 0.0, p), DomainError);
  auto q = ModelParams::resonant(0.2, device(), 5);
  q.epsilon1 = 0.9;
  CHECK_THROWS_AS(v_element(DressedIndex::excited(0, 1), DressedIndex::excited(1, 1), q), DomainError);
  CHECK(DressedIndex::excited(2, -1).label() == "2-");
  CHECK(DressedIndex::ground_state().label() == "00");
}
