#include "jcpt/perturbation.hpp"

#include <cmath>
#include <sstream>

#include "jcpt/errors.hpp"

namespace jcpt {
namespace {

constexpr int kSigmas[2] = {+1, -1};

int slot(int sigma) { return sigma > 0 ? 0 : 1; }

std::string level(int j, int sigma) { return std::to_string(j) + (sigma > 0 ? "+" : "-"); }

void require_preconditions(const ModelParams& p) {
  p.validate();
  if (!p.is_resonant())
    throw DomainError("perturbation: only the resonant case is supported (detuning = " +
                      std::to_string(p.detuning()) + ")");
  if (!(p.coupling.x01 > 0.0)) throw DomainError("perturbation: requires x01 > 0");
}

double guarded(double denominator, const ModelParams& p, const std::string& what) {
  if (std::abs(denominator) < kDegeneracyGuard * p.omega0) {
    std::ostringstream os;
    os << "degenerate denominator: perturbation theory invalid at this g (" << what << " = "
       << denominator << ", g = " << p.g << ")";
    throw DegeneracyError(os.str());
  }
  return denominator;
}

double W(int j, int sigma, const ModelParams& p) { return resonant_energy(j, sigma, p); }

double Wg(int j, int sigma, const ModelParams& p) {
  return guarded(W(j, sigma, p), p, "W_" + level(j, sigma));
}

double Wdiff(int j, int sigma, int jp, int sigma_p, const ModelParams& p) {
  return guarded(W(j, sigma, p) - W(jp, sigma_p, p), p,
                 "W_" + level(j, sigma) + " - W_" + level(jp, sigma_p));
}

double sq(double v) { return v * v; }

}  // namespace

double x_combination(int sigma, int sigma_p, const CouplingElements& x) {
  return std::sqrt(2.0) * x.x00 + sigma * sigma_p * x.x11;
}

double corrected_ground_energy(const ModelParams& p) {
  require_preconditions(p);
  const auto& x = p.coupling;
  double sum = 0.0;
  for (int s : kSigmas) sum += sq(x.x00) / Wg(0, s, p) + sq(x.x01) / Wg(1, s, p);
  return -sq(p.g) / 2.0 * sum;
}

double corrected_energy(int j, int sigma, const ModelParams& p) {
  require_preconditions(p);
  if (j < 0 || j > 2) throw DomainError("corrected_energy: j must be in {0,1,2}");
  const auto row = DressedIndex::excited(j, sigma);
  const double w = Wg(j, sigma, p);
  double e = w + std::norm(v_ground_element(row, p)) / w;
  // V couples j only to j +- 1 and j +- 2.
  for (int jp = std::max(0, j - 2); jp <= j + 2; ++jp) {
    if (jp == j) continue;
    for (int sp : kSigmas) {
      const double v2 = std::norm(v_element(row, DressedIndex::excited(jp, sp), p));
      e += v2 / Wdiff(j, sigma, jp, sp, p);
    }
  }
  return e;
}

Normalizations normalizations(const ModelParams& p) {
  require_preconditions(p);
  const auto& x = p.coupling;
  const double g2 = sq(p.g);
  const double r2 = std::sqrt(2.0), r3 = std::sqrt(3.0);
  Normalizations out;

  double s00 = 0.0;
  for (int s : kSigmas) s00 += sq(x.x00) / sq(Wg(0, s, p)) + sq(x.x01) / sq(Wg(1, s, p));
  out.a_ground = 1.0 / std::sqrt(1.0 + g2 / 2.0 * s00);

  for (int s : kSigmas) {
    double sum0 = 0.0, sum1 = 0.0, sum2 = 0.0;
    for (int sp : kSigmas) {
      const double ss = s * sp;
      sum0 += sq(r2 * x.x00 + ss * x.x11) / sq(Wdiff(0, s, 1, sp, p)) +
              2.0 * sq(x.x01) / sq(Wdiff(0, s, 2, sp, p));
      sum1 += sq(r2 * x.x00 + ss * x.x11) / sq(Wdiff(1, s, 0, sp, p)) +
              sq(r3 * x.x00 + r2 * ss * x.x11) / sq(Wdiff(1, s, 2, sp, p)) +
              3.0 * sq(x.x01) / sq(Wdiff(1, s, 3, sp, p));
      sum2 += 2.0 * sq(x.x01) / sq(Wdiff(2, s, 0, sp, p)) +
              sq(r3 * x.x00 + r2 * ss * x.x11) / sq(Wdiff(2, s, 1, sp, p)) +
              sq(2.0 * x.x00 + r3 * ss * x.x11) / sq(Wdiff(2, s, 3, sp, p)) +
              4.0 * sq(x.x01) / sq(Wdiff(2, s, 4, sp, p));
    }
    out.a_excited[0][slot(s)] = 1.0 / std::sqrt(1.0 + g2 * sq(x.x00) / (2.0 * sq(Wg(0, s, p))) +
                                                g2 / 4.0 * sum0);
    out.a_excited[1][slot(s)] = 1.0 / std::sqrt(1.0 + g2 * sq(x.x01) / (2.0 * sq(Wg(1, s, p))) +
                                                g2 / 4.0 * sum1);
    out.a_excited[2][slot(s)] = 1.0 / std::sqrt(1.0 + g2 / 4.0 * sum2);
  }
  return out;
}

CorrectedSpectrum corrected_spectrum(const ModelParams& p) {
  CorrectedSpectrum out;
  out.e_ground = corrected_ground_energy(p);
  const auto a = normalizations(p);
  out.a_ground = a.a_ground;
  out.a_excited = a.a_excited;
  for (int j = 0; j < 3; ++j)
    for (int s : kSigmas) out.e_excited[j][slot(s)] = corrected_energy(j, s, p);
  return out;
}

double expansion_ratio(const ModelParams& p) {
  require_preconditions(p);
  double worst = 0.0;
  for (int j = 0; j < 3; ++j) {
    for (int s : kSigmas) {
      const auto row = DressedIndex::excited(j, s);
      worst = std::max(worst, std::abs(v_ground_element(row, p)) / std::abs(Wg(j, s, p)));
      for (int jp = std::max(0, j - 2); jp <= j + 2; ++jp) {
        if (jp == j) continue;
        for (int sp : kSigmas)
          worst = std::max(worst, std::abs(v_element(row, DressedIndex::excited(jp, sp), p)) /
                                      std::abs(Wdiff(j, s, jp, sp, p)));
      }
    }
  }
  return worst;
}

DressedPropagator::DressedPropagator(const ModelParams& p) : spectrum_(corrected_spectrum(p)) {
  const auto& x = p.coupling;
  const double g2 = sq(p.g);
  const auto& sp_ = spectrum_;

  for (int s : kSigmas) {
    for (int t : kSigmas) {  // t plays sigma'
      auto& out = terms_[slot(s)][slot(t)];
      if (s == t) out.push_back({sq(sp_.norm(0, s)), sp_.energy(0, s)});
      out.push_back({sq(sp_.a_ground) * g2 * sq(x.x00) / (2.0 * Wg(0, s, p) * Wg(0, t, p)),
                     sp_.e_ground});

      if (s != t && p.g != 0.0) {
        // Mixing of psi_0^+ and psi_0^- through |00>, psi_1 and psi_2.
        auto bracket = [&](int a) {
          double b = g2 * sq(x.x00) / (2.0 * Wg(0, a, p));
          for (int sb : kSigmas) {
            b += g2 * x_combination(s, sb, x) * x_combination(t, sb, x) /
                     (4.0 * Wdiff(0, a, 1, sb, p)) +
                 g2 * sq(x.x01) / (2.0 * Wdiff(0, a, 2, sb, p));
          }
          return b;
        };
        const double d = Wdiff(0, s, 0, t, p);
        out.push_back({sq(sp_.norm(0, s)) / d * bracket(s), sp_.energy(0, s)});
        out.push_back({-sq(sp_.norm(0, t)) / d * bracket(t), sp_.energy(0, t)});
      }

      for (int sb : kSigmas) {
        out.push_back({0.25 * sq(sp_.norm(1, sb)) * g2 * x_combination(s, sb, x) *
                           x_combination(t, sb, x) / (Wdiff(1, sb, 0, s, p) * Wdiff(1, sb, 0, t, p)),
                       sp_.energy(1, sb)});
        out.push_back({0.5 * sq(sp_.norm(2, sb)) * g2 * sq(x.x01) /
                           (Wdiff(2, sb, 0, s, p) * Wdiff(2, sb, 0, t, p)),
                       sp_.energy(2, sb)});
      }
    }
  }
}

Complex DressedPropagator::operator()(int sigma, int sigma_p, double t) const {
  if ((sigma != 1 && sigma != -1) || (sigma_p != 1 && sigma_p != -1))
    throw DomainError("g00_propagator: sigma must be +1 or -1");
  Complex sum = 0.0;
  for (const auto& term : terms_[slot(sigma)][slot(sigma_p)])
    sum += term.coefficient * std::polar(1.0, -term.energy * t);
  return sum;
}

Eigen::Matrix2cd DressedPropagator::matrix(double t) const {
  Eigen::Matrix2cd m;
  m << (*this)(+1, +1, t), (*this)(+1, -1, t), (*this)(-1, +1, t), (*this)(-1, -1, t);
  return m;
}

Complex g00_propagator(int sigma, int sigma_p, double t, const ModelParams& p) {
  return DressedPropagator(p)(sigma, sigma_p, t);
}

PerturbativeAmplitudes pert_amplitudes(double t, const DressedPropagator& g, const ModelParams& p) {
  const auto m = g.matrix(t);
  const double e01 = p.epsilon0 + p.omega0;
  const double e10 = p.epsilon1;
  const Complex I(0.0, 1.0);
  PerturbativeAmplitudes out;
  out.c01 = 0.5 * I * std::polar(1.0, e01 * t) * (m(0, 0) - m(0, 1) + m(1, 0) - m(1, 1));
  out.c10 = 0.5 * std::polar(1.0, e10 * t) * (m(0, 0) - m(0, 1) - m(1, 0) + m(1, 1));
  return out;
}

PerturbativeAmplitudes pert_amplitudes(double t, const ModelParams& p) {
  return pert_amplitudes(t, DressedPropagator(p), p);
}

}  // namespace jcpt
