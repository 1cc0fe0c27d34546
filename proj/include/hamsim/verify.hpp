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

#pragma once

#include <cstdint>

#include <Eigen/Core>

#include "hamsim/circuit.hpp"
#include "hamsim/hamiltonian.hpp"
#include "hamsim/kernels.hpp"
#include "hamsim/pauli.hpp"
#include "hamsim/trotter.hpp"

namespace hamsim {

/// Largest register the dense oracle accepts by default (256 x 256).
inline constexpr int kDefaultQubitCap = 8;

template <class Real>
using CMatrix = kernels::CMatrix<Real>;
using DenseUnitary = CMatrix<double>;

/// Throws std::invalid_argument when n is outside [1, cap].
void check_qubit_cap(int n, int cap);

/// Kronecker product of the term's Pauli factors with identities on the
/// remaining qubits (qubit 1 is the leftmost factor), times the coefficient.
template <class Real = double>
CMatrix<Real> term_matrix(const PauliTerm& term, int n,
                          int cap = kDefaultQubitCap);

template <class Real = double>
CMatrix<Real> hamiltonian_matrix(const HamiltonianSpec& spec,
                                 int cap = kDefaultQubitCap);

/// exp(-i H t) from one Hermitian eigendecomposition, reusable across t.
template <class Real = double>
class ExactEvolution {
 public:
  explicit ExactEvolution(const HamiltonianSpec& spec,
                          int cap = kDefaultQubitCap);
  CMatrix<Real> unitary(Real t) const;
  /// Spectral norm of H, max |eigenvalue|.
  Real norm() const;

 private:
  Eigen::Matrix<Real, Eigen::Dynamic, 1> eigenvalues_;
  CMatrix<Real> eigenvectors_;
};

template <class Real = double>
CMatrix<Real> exact_unitary(const HamiltonianSpec& spec, Real t,
                            int cap = kDefaultQubitCap);

/// Product of exp(-i a_j h_j d) over the entries, entry 0 applied first.
template <class Real = double>
CMatrix<Real> sequence_unitary(const HamiltonianSpec& spec,
                               const ExponentialSeq& seq,
                               int cap = kDefaultQubitCap);

/// U^r by repeated squaring.
template <class Real = double>
CMatrix<Real> matrix_power(const CMatrix<Real>& u, std::int64_t r);

/// ||exp(-iHt) - U_chi(t/r)^r||.
template <class Real = double>
Real trotter_error(const HamiltonianSpec& spec, double t, int chi,
                   std::int64_t r, int cap = kDefaultQubitCap);

/// Product of the gate matrices, first gate applied first.
DenseUnitary circuit_unitary(const GateIR& ir, int cap = kDefaultQubitCap);

/// Largest singular value.
template <class Real = double>
Real spectral_norm(const CMatrix<Real>& m);

/// ||A - B||, or min over phi of ||A - e^{i phi} B|| when `phase_invariant`.
template <class Real = double>
Real spectral_distance(const CMatrix<Real>& a, const CMatrix<Real>& b,
                       bool phase_invariant = false);

/// ||U^dag U - I||.
template <class Real = double>
Real unitarity_defect(const CMatrix<Real>& u);

#define HAMSIM_VERIFY_EXTERN(Real)                                            \
  extern template CMatrix<Real> term_matrix<Real>(const PauliTerm&, int, int); \
  extern template CMatrix<Real> hamiltonian_matrix<Real>(                     \
      const HamiltonianSpec&, int);                                           \
  extern template class ExactEvolution<Real>;                                 \
  extern template CMatrix<Real> exact_unitary<Real>(const HamiltonianSpec&,   \
                                                    Real, int);               \
  extern template CMatrix<Real> sequence_unitary<Real>(                       \
      const HamiltonianSpec&, const ExponentialSeq&, int);                    \
  extern template CMatrix<Real> matrix_power<Real>(const CMatrix<Real>&,      \
                                                   std::int64_t);             \
  extern template Real trotter_error<Real>(const HamiltonianSpec&, double,    \
                                           int, std::int64_t, int);           \
  extern template Real spectral_norm<Real>(const CMatrix<Real>&);             \
  extern template Real spectral_distance<Real>(                               \
      const CMatrix<Real>&, const CMatrix<Real>&, bool);                      \
  extern template Real unitarity_defect<Real>(const CMatrix<Real>&);

HAMSIM_VERIFY_EXTERN(double)
HAMSIM_VERIFY_EXTERN(long double)
#undef HAMSIM_VERIFY_EXTERN

}  // namespace hamsim
