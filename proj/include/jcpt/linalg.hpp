#pragma once
// Dense complex Hermitian eigendecomposition (cyclic Jacobi) and spectral
// time evolution psi(t) = V exp(-i diag(values) t) V^dag psi(0).

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <complex>
#include <numeric>
#include <sstream>
#include <vector>

#include "jcpt/errors.hpp"
#include "jcpt/model.hpp"

namespace jcpt {

template <typename Real>
using StateVector = VectorC<Real>;

template <typename Real = double>
struct EigenDecomposition {
  VectorR<Real> values;   // ascending
  MatrixC<Real> vectors;  // column k pairs with values(k)

  Eigen::Index dim() const { return values.size(); }

  /// max |V^dag V - I|
  Real unitarity_residual() const {
    const auto n = dim();
    return (vectors.adjoint() * vectors - MatrixC<Real>::Identity(n, n)).cwiseAbs().maxCoeff();
  }

  MatrixC<Real> reconstruct() const {
    return vectors * values.template cast<std::complex<Real>>().asDiagonal() * vectors.adjoint();
  }
};

struct EighOptions {
  int max_sweeps = 100;
  double off_tolerance = 1e-12;        // relative to the Frobenius norm
  double hermitian_tolerance = 1e-12;  // relative to max(1, max |H_ij|)
};

namespace detail {

template <typename Real>
Real off_diagonal_norm(const MatrixC<Real>& a) {
  Real s(0);
  const auto n = a.rows();
  for (Eigen::Index q = 0; q < n; ++q)
    for (Eigen::Index p = 0; p < n; ++p)
      if (p != q) s += std::norm(a(p, q));
  return std::sqrt(s);
}

// One cyclic sweep of complex Jacobi rotations. For the (p,q) pivot with
// a_pq = r e^{i phi} the rotation is U = diag(1, e^{-i phi}) * [[c, s], [-s, c]],
// which reduces the pivot to a real symmetric 2x2 and annihilates it.
template <typename Real>
void jacobi_sweep(MatrixC<Real>& a, MatrixC<Real>& v) {
  using C = std::complex<Real>;
  const auto n = a.rows();
  for (Eigen::Index p = 0; p + 1 < n; ++p) {
    for (Eigen::Index q = p + 1; q < n; ++q) {
      const C apq = a(p, q);
      const Real r = std::abs(apq);
      if (r == Real(0)) continue;
      const C phase = apq / r;  // e^{i phi}
      const Real app = std::real(a(p, p));
      const Real aqq = std::real(a(q, q));
      const Real theta = (aqq - app) / (Real(2) * r);
      const Real t = (theta >= Real(0) ? Real(1) : Real(-1)) /
                     (std::abs(theta) + std::sqrt(theta * theta + Real(1)));
      const Real c = Real(1) / std::sqrt(t * t + Real(1));
      const Real s = t * c;
      const C up_q = -s * std::conj(phase);  // U(q,p)
      const C uq_q = c * std::conj(phase);   // U(q,q)

      // A <- A U (columns p, q)
      for (Eigen::Index k = 0; k < n; ++k) {
        const C akp = a(k, p), akq = a(k, q);
        a(k, p) = c * akp + up_q * akq;
        a(k, q) = s * akp + uq_q * akq;
      }
      // A <- U^dag A (rows p, q)
      for (Eigen::Index k = 0; k < n; ++k) {
        const C apk = a(p, k), aqk = a(q, k);
        a(p, k) = c * apk + std::conj(up_q) * aqk;
        a(q, k) = s * apk + std::conj(uq_q) * aqk;
      }
      a(p, q) = C(0);
      a(q, p) = C(0);
      a(p, p) = C(std::real(a(p, p)), Real(0));
      a(q, q) = C(std::real(a(q, q)), Real(0));
      // V <- V U
      for (Eigen::Index k = 0; k < n; ++k) {
        const C vkp = v(k, p), vkq = v(k, q);
        v(k, p) = c * vkp + up_q * vkq;
        v(k, q) = s * vkp + uq_q * vkq;
      }
    }
  }
}

}  // namespace detail

/// Eigendecomposition of a Hermitian matrix. Values are ascending (ties keep
/// input order); each eigenvector is rescaled so its largest-magnitude
/// component (earliest on ties) is real and positive.
template <typename Derived>
EigenDecomposition<typename Eigen::NumTraits<typename Derived::Scalar>::Real> eigh(
    const Eigen::MatrixBase<Derived>& h, const EighOptions& opts = {}) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  using C = std::complex<Real>;
  if (h.rows() != h.cols()) throw DomainError("eigh: matrix must be square");
  const Eigen::Index n = h.rows();

  MatrixC<Real> a = h.template cast<C>();
  const Real scale_abs = n ? std::max(Real(1), a.cwiseAbs().maxCoeff()) : Real(1);
  const Real herm = n ? (a - a.adjoint()).cwiseAbs().maxCoeff() : Real(0);
  if (herm > Real(opts.hermitian_tolerance) * scale_abs) {
    std::ostringstream os;
    os << "eigh: input is not Hermitian (max |H - H^dag| = " << herm << ")";
    throw ValidationError(os.str());
  }
  a = (a + a.adjoint()) * Real(0.5);

  MatrixC<Real> v = MatrixC<Real>::Identity(n, n);
  const Real frob = a.norm();
  const Real target = Real(opts.off_tolerance) * frob;
  Real off = detail::off_diagonal_norm(a);
  int sweep = 0;
  while (off > target) {
    if (sweep == opts.max_sweeps) {
      std::ostringstream os;
      os << "eigh: no convergence after " << sweep << " sweeps (off-diagonal norm " << off << ")";
      throw ConvergenceError(os.str(), double(off));
    }
    detail::jacobi_sweep(a, v);
    ++sweep;
    off = detail::off_diagonal_norm(a);
  }
  // Convergence is quadratic; one extra sweep takes the residual to rounding level.
  if (off > Real(0)) detail::jacobi_sweep(a, v);

  std::vector<Eigen::Index> order(n);
  std::iota(order.begin(), order.end(), Eigen::Index(0));
  std::stable_sort(order.begin(), order.end(), [&](Eigen::Index i, Eigen::Index j) {
    return std::real(a(i, i)) < std::real(a(j, j));
  });

  EigenDecomposition<Real> out;
  out.values.resize(n);
  out.vectors.resize(n, n);
  for (Eigen::Index k = 0; k < n; ++k) {
    const auto src = order[k];
    out.values(k) = std::real(a(src, src));
    auto col = v.col(src);
    Eigen::Index imax = 0;
    Real best(-1);
    for (Eigen::Index i = 0; i < n; ++i) {
      const Real m = std::abs(col(i));
      if (m > best * (Real(1) + Real(64) * Eigen::NumTraits<Real>::epsilon())) {
        best = m;
        imax = i;
      }
    }
    const C fix = best > Real(0) ? std::conj(col(imax)) / best : C(1);
    out.vectors.col(k) = col * fix;
    out.vectors(imax, k) = C(std::abs(out.vectors(imax, k)), Real(0));
  }
  return out;
}

template <typename Real>
EigenDecomposition<Real> eigh(const HermitianOperator<Real>& h, const EighOptions& opts = {}) {
  return eigh(h.matrix(), opts);
}

/// Spectral propagator for one initial state; caches V^dag psi0 so that many
/// time points cost one matrix-vector product each.
template <typename Real = double>
class SpectralEvolution {
 public:
  SpectralEvolution(const EigenDecomposition<Real>& decomp, const StateVector<Real>& psi0)
      : decomp_(&decomp) {
    if (psi0.size() != decomp.dim())
      throw DomainError("evolve: state dimension " + std::to_string(psi0.size()) +
                        " does not match decomposition dimension " +
                        std::to_string(decomp.dim()));
    weights_ = decomp.vectors.adjoint() * psi0;
  }

  StateVector<Real> at(Real t) const {
    StateVector<Real> phased(weights_.size());
    for (Eigen::Index k = 0; k < weights_.size(); ++k)
      phased(k) = std::polar(Real(1), -decomp_->values(k) * t) * weights_(k);
    return decomp_->vectors * phased;
  }

 private:
  const EigenDecomposition<Real>* decomp_;
  StateVector<Real> weights_;
};

template <typename Real>
StateVector<Real> evolve(const EigenDecomposition<Real>& decomp, Real t,
                         const StateVector<Real>& psi0) {
  return SpectralEvolution<Real>(decomp, psi0).at(t);
}

}  // namespace jcpt
