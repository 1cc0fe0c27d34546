// Copyright 2026 The hamsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "hamsim/verify.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Eigenvalues>
#include <Eigen/SVD>

namespace hamsim {

void check_qubit_cap(int n, int cap) {
  if (n < 1) throw std::invalid_argument("dense oracle needs n >= 1");
  if (n > cap) {
    throw std::invalid_argument("n=" + std::to_string(n) +
                                " exceeds the dense-oracle cap of " +
                                std::to_string(cap) + " qubits");
  }
  if (cap > 30) throw std::invalid_argument("qubit cap too large");
}

namespace {

template <class Real>
CMatrix<Real> identity(int n) {
  const Eigen::Index dim = Eigen::Index{1} << n;
  return CMatrix<Real>::Identity(dim, dim);
}

template <class Real>
Eigen::Matrix<std::complex<Real>, 2, 2> pauli_matrix(PauliLetter letter) {
  using C = std::complex<Real>;
  Eigen::Matrix<C, 2, 2> m;
  switch (letter) {
    case PauliLetter::I:
      m << C(1), C(0), C(0), C(1);
      break;
    case PauliLetter::X:
      m << C(0), C(1), C(1), C(0);
      break;
    case PauliLetter::Y:
      m << C(0), C(0, -1), C(0, 1), C(0);
      break;
    case PauliLetter::Z:
      m << C(1), C(0), C(0), C(-1);
      break;
  }
  return m;
}

template <class Real>
CMatrix<Real> kron(const CMatrix<Real>& a,
                   const Eigen::Matrix<std::complex<Real>, 2, 2>& b) {
  CMatrix<Real> out(a.rows() * 2, a.cols() * 2);
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    for (Eigen::Index j = 0; j < a.cols(); ++j) {
      out.template block<2, 2>(2 * i, 2 * j) = a(i, j) * b;
    }
  }
  return out;
}

void check_term_fits(const PauliTerm& term, int n) {
  if (!term.empty() && term.max_qubit() > static_cast<Qubit>(n)) {
    throw std::invalid_argument("term " + term.letters_string() +
                                " acts outside n=" + std::to_string(n));
  }
}

}  // namespace

template <class Real>
CMatrix<Real> term_matrix(const PauliTerm& term, int n, int cap) {
  check_qubit_cap(n, cap);
  check_term_fits(term, n);
  CMatrix<Real> m = CMatrix<Real>::Ones(1, 1);
  for (int q = 1; q <= n; ++q) {
    m = kron<Real>(m, pauli_matrix<Real>(term.at(static_cast<Qubit>(q))));
  }
  return m * std::complex<Real>(static_cast<Real>(term.coefficient()));
}

template <class Real>
CMatrix<Real> hamiltonian_matrix(const HamiltonianSpec& spec, int cap) {
  check_qubit_cap(spec.n, cap);
  const Eigen::Index dim = Eigen::Index{1} << spec.n;
  CMatrix<Real> h = CMatrix<Real>::Zero(dim, dim);
  for (const auto& term : spec.terms) h += term_matrix<Real>(term, spec.n, cap);
  return h;
}

template <class Real>
ExactEvolution<Real>::ExactEvolution(const HamiltonianSpec& spec, int cap) {
  const CMatrix<Real> h = hamiltonian_matrix<Real>(spec, cap);
  Eigen::SelfAdjointEigenSolver<CMatrix<Real>> solver(h);
  if (solver.info() != Eigen::Success) {
    throw std::runtime_error("Hermitian eigendecomposition failed");
  }
  eigenvalues_ = solver.eigenvalues();
  eigenvectors_ = solver.eigenvectors();
}

template <class Real>
CMatrix<Real> ExactEvolution<Real>::unitary(Real t) const {
  Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, 1> phases(
      eigenvalues_.size());
  for (Eigen::Index i = 0; i < eigenvalues_.size(); ++i) {
    const Real angle = -eigenvalues_(i) * t;
    phases(i) = std::complex<Real>(std::cos(angle), std::sin(angle));
  }
  return eigenvectors_ * phases.asDiagonal() * eigenvectors_.adjoint();
}

template <class Real>
Real ExactEvolution<Real>::norm() const {
  return eigenvalues_.cwiseAbs().maxCoeff();
}

template <class Real>
CMatrix<Real> exact_unitary(const HamiltonianSpec& spec, Real t, int cap) {
  return ExactEvolution<Real>(spec, cap).unitary(t);
}

template <class Real>
CMatrix<Real> sequence_unitary(const HamiltonianSpec& spec,
                               const ExponentialSeq& seq, int cap) {
  check_qubit_cap(spec.n, cap);
  if (seq.m != spec.m()) {
    throw std::invalid_argument("sequence does not match the spec");
  }
  std::vector<PauliMask> masks;
  masks.reserve(spec.m());
  for (const auto& term : spec.terms) {
    check_term_fits(term, spec.n);
    masks.push_back(to_mask(term, spec.n));
  }
  CMatrix<Real> u = identity<Real>(spec.n);
  for (const SeqEntry& e : seq.entries) {
    if (e.term >= spec.m()) {
      throw std::invalid_argument("sequence entry outside the spec");
    }
    const Real theta = static_cast<Real>(spec.terms[e.term].coefficient()) *
                       static_cast<Real>(e.duration);
    kernels::omp::pauli_rotation<Real>(u, masks[e.term], theta);
  }
  return u;
}

template <class Real>
CMatrix<Real> matrix_power(const CMatrix<Real>& u, std::int64_t r) {
  if (r < 0) throw std::invalid_argument("negative matrix power");
  CMatrix<Real> result = CMatrix<Real>::Identity(u.rows(), u.cols());
  CMatrix<Real> base = u;
  while (r > 0) {
    if (r & 1) result = base * result;
    r >>= 1;
    if (r > 0) base = base * base;
  }
  return result;
}

template <class Real>
Real trotter_error(const HamiltonianSpec& spec, double t, int chi,
                   std::int64_t r, int cap) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  ExponentialSeq seq = build_ts_step(spec, t / static_cast<double>(r), chi);
  seq.r = r;
  const CMatrix<Real> approx =
      matrix_power<Real>(sequence_unitary<Real>(spec, seq, cap), r);
  return spectral_distance<Real>(exact_unitary<Real>(spec, Real(t), cap),
                                 approx);
}

DenseUnitary circuit_unitary(const GateIR& ir, int cap) {
  check_qubit_cap(ir.n, cap);
  ir.validate();
  using C = std::complex<double>;
  const double s = 1.0 / std::numbers::sqrt2;
  kernels::Gate2<double> h, t;
  h << C(s), C(s), C(s), C(-s);
  t << C(1), C(0), C(0), std::polar(1.0, std::numbers::pi / 4);
  DenseUnitary u = identity<double>(ir.n);
  const auto bit = [&ir](Qubit q) { return ir.n - static_cast<int>(q); };
  for (const Gate& g : ir.gates) {
    switch (g.kind) {
      case GateKind::kH:
        kernels::omp::single_qubit<double>(u, bit(g.q0), h);
        break;
      case GateKind::kT:
        kernels::omp::single_qubit<double>(u, bit(g.q0), t);
        break;
      case GateKind::kRz: {
        kernels::Gate2<double> rz;
        rz << std::polar(1.0, -g.angle / 2), C(0), C(0),
            std::polar(1.0, g.angle / 2);
        kernels::omp::single_qubit<double>(u, bit(g.q0), rz);
        break;
      }
      case GateKind::kCnot:
        kernels::omp::cnot<double>(u, bit(g.q0), bit(g.q1));
        break;
    }
  }
  return u;
}

template <class Real>
Real spectral_norm(const CMatrix<Real>& m) {
  if (m.size() == 0) return Real(0);
  Eigen::BDCSVD<CMatrix<Real>> svd(m);
  return svd.singularValues()(0);
}

template <class Real>
Real spectral_distance(const CMatrix<Real>& a, const CMatrix<Real>& b,
                       bool phase_invariant) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) {
    throw std::invalid_argument("spectral_distance: dimension mismatch");
  }
  if (!phase_invariant) return spectral_norm<Real>(a - b);

  const auto f = [&](Real phi) {
    return spectral_norm<Real>(
        a - std::complex<Real>(std::cos(phi), std::sin(phi)) * b);
  };
  // Coarse grid seeded with the trace-overlap phase, then golden section
  // around the best grid point.
  const Real two_pi = 2 * std::numbers::pi_v<Real>;
  constexpr int kGrid = 64;
  const Real step = two_pi / kGrid;
  const Real phi0 = std::arg((b.adjoint() * a).trace());
  Real best_phi = phi0;
  Real best = f(phi0);
  for (int i = 1; i < kGrid; ++i) {
    const Real phi = phi0 + step * i;
    const Real v = f(phi);
    if (v < best) {
      best = v;
      best_phi = phi;
    }
  }
  const Real ratio = (std::sqrt(Real(5)) - 1) / 2;
  Real lo = best_phi - step, hi = best_phi + step;
  Real x1 = hi - ratio * (hi - lo), x2 = lo + ratio * (hi - lo);
  Real f1 = f(x1), f2 = f(x2);
  for (int it = 0; it < 80 && hi - lo > Real(1e-14); ++it) {
    if (f1 < f2) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - ratio * (hi - lo);
      f1 = f(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + ratio * (hi - lo);
      f2 = f(x2);
    }
  }
  return std::min({best, f1, f2});
}

template <class Real>
Real unitarity_defect(const CMatrix<Real>& u) {
  return spectral_norm<Real>(u.adjoint() * u -
                             CMatrix<Real>::Identity(u.cols(), u.cols()));
}

#define HAMSIM_VERIFY_INSTANTIATE(Real)                                       \
  template CMatrix<Real> term_matrix<Real>(const PauliTerm&, int, int);       \
  template CMatrix<Real> hamiltonian_matrix<Real>(const HamiltonianSpec&,     \
                                                  int);                       \
  template class ExactEvolution<Real>;                                        \
  template CMatrix<Real> exact_unitary<Real>(const HamiltonianSpec&, Real,    \
                                             int);                            \
  template CMatrix<Real> sequence_unitary<Real>(const HamiltonianSpec&,       \
                                                const ExponentialSeq&, int);  \
  template CMatrix<Real> matrix_power<Real>(const CMatrix<Real>&,             \
                                            std::int64_t);                    \
  template Real trotter_error<Real>(const HamiltonianSpec&, double, int,      \
                                    std::int64_t, int);                       \
  template Real spectral_norm<Real>(const CMatrix<Real>&);                    \
  template Real spectral_distance<Real>(const CMatrix<Real>&,                 \
                                        const CMatrix<Real>&, bool);          \
  template Real unitarity_defect<Real>(const CMatrix<Real>&);

HAMSIM_VERIFY_INSTANTIATE(double)
HAMSIM_VERIFY_INSTANTIATE(long double)

}  // namespace hamsim
