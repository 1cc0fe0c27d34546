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

// Data-parallel inner loops of the dense oracle and the Solovay-Kitaev net
// search. Each kernel exists twice with identical signatures: `serial` is
// the reference implementation kept for tests and benchmarks, `omp` is the
// OpenMP version the library calls. Matrices are column-major, so the
// left-multiplying kernels parallelise over columns.

#include <array>
#include <bit>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <span>

#include <Eigen/Core>

#include "hamsim/pauli.hpp"

namespace hamsim::kernels {

template <class Real>
using CMatrix =
    Eigen::Matrix<std::complex<Real>, Eigen::Dynamic, Eigen::Dynamic>;
template <class Real>
using Gate2 = Eigen::Matrix<std::complex<Real>, 2, 2>;

using Quaternion = std::array<double, 4>;

namespace detail {

// i^k for k mod 4.
template <class Real>
std::complex<Real> i_power(int k) {
  switch (((k % 4) + 4) % 4) {
    case 0:
      return {1, 0};
    case 1:
      return {0, 1};
    case 2:
      return {-1, 0};
    default:
      return {0, -1};
  }
}

// Column update for M <- exp(-i theta P) M.
template <class Real>
inline void pauli_rotation_column(std::complex<Real>* col, Eigen::Index dim,
                                  const PauliMask& p, Real c, Real s,
                                  std::complex<Real> y_phase) {
  const std::complex<Real> minus_i_s(0, -s);
  if (p.x == 0) {
    const std::complex<Real> plus(c, -s), minus(c, s);
    for (Eigen::Index b = 0; b < dim; ++b) {
      const bool odd = std::popcount(p.z & static_cast<std::uint64_t>(b)) & 1;
      col[b] *= odd ? minus : plus;
    }
    return;
  }
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    const std::uint64_t uc = ub ^ p.x;
    if (uc < ub) continue;
    const Eigen::Index cidx = static_cast<Eigen::Index>(uc);
    const Real sign_c = (std::popcount(p.z & uc) & 1) ? Real(-1) : Real(1);
    const Real sign_b = (std::popcount(p.z & ub) & 1) ? Real(-1) : Real(1);
    const std::complex<Real> fb = minus_i_s * y_phase * sign_c;
    const std::complex<Real> fc = minus_i_s * y_phase * sign_b;
    const std::complex<Real> vb = col[b];
    const std::complex<Real> vc = col[cidx];
    col[b] = c * vb + fb * vc;
    col[cidx] = c * vc + fc * vb;
  }
}

template <class Real>
inline void single_qubit_column(std::complex<Real>* col, Eigen::Index dim,
                                std::uint64_t mask, const Gate2<Real>& g) {
  for (Eigen::Index b = 0; b < dim; ++b) {
    if (static_cast<std::uint64_t>(b) & mask) continue;
    const Eigen::Index b1 = b | static_cast<Eigen::Index>(mask);
    const std::complex<Real> a0 = col[b];
    const std::complex<Real> a1 = col[b1];
    col[b] = g(0, 0) * a0 + g(0, 1) * a1;
    col[b1] = g(1, 0) * a0 + g(1, 1) * a1;
  }
}

inline void cnot_column_indices(Eigen::Index dim, std::uint64_t cmask,
                                std::uint64_t tmask, auto&& swap_rows) {
  for (Eigen::Index b = 0; b < dim; ++b) {
    const auto ub = static_cast<std::uint64_t>(b);
    if ((ub & cmask) && !(ub & tmask)) {
      swap_rows(b, static_cast<Eigen::Index>(ub | tmask));
    }
  }
}

inline double abs_dot(const Quaternion& a, const Quaternion& b) {
  return std::abs(a[0] * b[0] + a[1] * b[1] + a[2] * b[2] + a[3] * b[3]);
}

}  // namespace detail

namespace serial {

/// M <- exp(-i theta P) M.
template <class Real>
void pauli_rotation(CMatrix<Real>& m, const PauliMask& p, Real theta) {
  const Real c = std::cos(theta), s = std::sin(theta);
  const auto y_phase = detail::i_power<Real>(p.num_y);
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    detail::pauli_rotation_column(m.col(j).data(), m.rows(), p, c, s, y_phase);
  }
}

/// M <- G_bit M, where `bit` is the row-index bit of the target qubit.
template <class Real>
void single_qubit(CMatrix<Real>& m, int bit, const Gate2<Real>& g) {
  const std::uint64_t mask = std::uint64_t{1} << bit;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    detail::single_qubit_column(m.col(j).data(), m.rows(), mask, g);
  }
}

template <class Real>
void cnot(CMatrix<Real>& m, int control_bit, int target_bit) {
  const std::uint64_t cm = std::uint64_t{1} << control_bit;
  const std::uint64_t tm = std::uint64_t{1} << target_bit;
  for (Eigen::Index j = 0; j < m.cols(); ++j) {
    auto* col = m.col(j).data();
    detail::cnot_column_indices(m.rows(), cm, tm,
                                [col](Eigen::Index a, Eigen::Index b) {
                                  std::swap(col[a], col[b]);
                                });
  }
}

/// Index of the point with the largest |<q, p>|; ties go to the lowest
/// index.
inline std::size_t nearest_point(std::span<const Quaternion> points,
                                 const Quaternion& q) {
  std::size_t best = 0;
  double best_dot = -1.0;
  for (std::size_t i = 0; i < points.size(); ++i) {
    const double d = detail::abs_dot(points[i], q);
    if (d > best_dot) {
      best_dot = d;
      best = i;
    }
  }
  return best;
}

}  // namespace serial

namespace omp {

// Below this many rows the fork/join overhead dominates.
inline constexpr Eigen::Index kParallelDim = 64;

template <class Real>
void pauli_rotation(CMatrix<Real>& m, const PauliMask& p, Real theta) {
  const Real c = std::cos(theta), s = std::sin(theta);
  const auto y_phase = detail::i_power<Real>(p.num_y);
  const Eigen::Index cols = m.cols(), rows = m.rows();
#pragma omp parallel for schedule(static) if (rows >= kParallelDim)
  for (Eigen::Index j = 0; j < cols; ++j) {
    detail::pauli_rotation_column(m.col(j).data(), rows, p, c, s, y_phase);
  }
}

template <class Real>
void single_qubit(CMatrix<Real>& m, int bit, const Gate2<Real>& g) {
  const std::uint64_t mask = std::uint64_t{1} << bit;
  const Eigen::Index cols = m.cols(), rows = m.rows();
#pragma omp parallel for schedule(static) if (rows >= kParallelDim)
  for (Eigen::Index j = 0; j < cols; ++j) {
    detail::single_qubit_column(m.col(j).data(), rows, mask, g);
  }
}

template <class Real>
void cnot(CMatrix<Real>& m, int control_bit, int target_bit) {
  const std::uint64_t cm = std::uint64_t{1} << control_bit;
  const std::uint64_t tm = std::uint64_t{1} << target_bit;
  const Eigen::Index cols = m.cols(), rows = m.rows();
#pragma omp parallel for schedule(static) if (rows >= kParallelDim)
  for (Eigen::Index j = 0; j < cols; ++j) {
    auto* col = m.col(j).data();
    detail::cnot_column_indices(rows, cm, tm,
                                [col](Eigen::Index a, Eigen::Index b) {
                                  std::swap(col[a], col[b]);
                                });
  }
}

inline std::size_t nearest_point(std::span<const Quaternion> points,
                                 const Quaternion& q) {
  std::size_t best = 0;
  double best_dot = -1.0;
  const auto count = static_cast<std::ptrdiff_t>(points.size());
#pragma omp parallel if (count >= 4096)
  {
    std::size_t local = 0;
    double local_dot = -1.0;
#pragma omp for schedule(static) nowait
    for (std::ptrdiff_t i = 0; i < count; ++i) {
      const double d = detail::abs_dot(points[i], q);
      if (d > local_dot) {
        local_dot = d;
        local = static_cast<std::size_t>(i);
      }
    }
#pragma omp critical(hamsim_nearest_point)
    {
      if (local_dot > best_dot || (local_dot == best_dot && local < best)) {
        best_dot = local_dot;
        best = local;
      }
    }
  }
  return best;
}

}  // namespace omp

}  // namespace hamsim::kernels
