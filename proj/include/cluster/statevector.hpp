// Copyright 2026 The Photonic Cluster Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

// Dense statevector reference simulator. Deliberately naive: every operation
// is a full pass over the 2^n amplitudes, qubit q being bit q of the index.

#include <Eigen/Dense>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cluster/clifford.hpp"
#include "cluster/graph_state.hpp"
#include "cluster/tableau.hpp"

namespace cluster::oracle {

inline constexpr std::size_t kMaxQubits = 14;

enum class Basis { X, Y, Z };

template <typename Real>
using Matrix2 = Eigen::Matrix<std::complex<Real>, 2, 2>;
template <typename Real>
using Matrix4 = Eigen::Matrix<std::complex<Real>, 4, 4>;

template <typename Real = double>
class StateVector {
 public:
  using Scalar = std::complex<Real>;
  using Amplitudes = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

  /// |0…0⟩ on n qubits.
  explicit StateVector(std::size_t n = 0) : n_(n), amps_(Amplitudes::Zero(dimension_for(n))) { amps_(0) = 1; }

  StateVector(std::size_t n, Amplitudes amps) : n_(n), amps_(std::move(amps)) {
    if (static_cast<std::size_t>(amps_.size()) != dimension_for(n)) {
      throw std::invalid_argument("amplitude count must be 2^n");
    }
  }

  std::size_t size() const { return n_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amps_.size()); }
  const Amplitudes& amplitudes() const { return amps_; }
  Amplitudes& amplitudes() { return amps_; }
  Real norm() const { return amps_.norm(); }

  static std::size_t dimension_for(std::size_t n) {
    if (n > kMaxQubits) throw std::invalid_argument("oracle size limit");
    return std::size_t{1} << n;
  }

 private:
  std::size_t n_;
  Amplitudes amps_;
};

/// Amplitude 2^{-n/2} (-1)^{#edges inside the excited set}; qubit i is the
/// i-th smallest vertex id.
template <typename Real = double>
StateVector<Real> graph_state_vector(const GraphState& g) {
  const auto verts = g.vertices();
  const std::size_t n = verts.size();
  const std::size_t dim = StateVector<Real>::dimension_for(n);
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < n; ++i) pos[verts[i]] = i;
  std::vector<std::uint64_t> masks;
  for (auto [u, v] : g.edges()) masks.push_back((std::uint64_t{1} << pos[u]) | (std::uint64_t{1} << pos[v]));
  typename StateVector<Real>::Amplitudes amps(dim);
  const Real mag = std::pow(Real(2), -Real(n) / 2);
  for (std::size_t b = 0; b < dim; ++b) {
    int parity = 0;
    for (auto m : masks) parity ^= (b & m) == m ? 1 : 0;
    amps(static_cast<Eigen::Index>(b)) = parity ? -mag : mag;
  }
  return StateVector<Real>(n, std::move(amps));
}

template <typename Derived>
void require_unitary(const Eigen::MatrixBase<Derived>& u) {
  using Real = typename Eigen::NumTraits<typename Derived::Scalar>::Real;
  const auto id = Derived::Identity(u.rows(), u.cols());
  if ((u.adjoint() * u - id).norm() > Real(1e-10)) throw std::invalid_argument("matrix is not unitary");
}

template <typename Real>
StateVector<Real> apply_unitary(StateVector<Real> v, const Matrix2<Real>& u, std::size_t q) {
  require_unitary(u);
  if (q >= v.size()) throw std::out_of_range("qubit index out of range");
  auto& a = v.amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(i), i1 = static_cast<Eigen::Index>(i | bit);
    const auto a0 = a(i0), a1 = a(i1);
    a(i0) = u(0, 0) * a0 + u(0, 1) * a1;
    a(i1) = u(1, 0) * a0 + u(1, 1) * a1;
  }
  return v;
}

/// Two-qubit gate; row/column index of u is 2·bit(q1) + bit(q2).
template <typename Real>
StateVector<Real> apply_unitary(StateVector<Real> v, const Matrix4<Real>& u, std::size_t q1, std::size_t q2) {
  require_unitary(u);
  if (q1 >= v.size() || q2 >= v.size()) throw std::out_of_range("qubit index out of range");
  if (q1 == q2) throw std::invalid_argument("two-qubit gate on a single qubit");
  auto& a = v.amplitudes();
  const std::size_t b1 = std::size_t{1} << q1, b2 = std::size_t{1} << q2;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i & (b1 | b2)) continue;
    const std::array<Eigen::Index, 4> idx = {static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i | b2),
                                             static_cast<Eigen::Index>(i | b1),
                                             static_cast<Eigen::Index>(i | b1 | b2)};
    Eigen::Matrix<std::complex<Real>, 4, 1> in;
    for (int k = 0; k < 4; ++k) in(k) = a(idx[static_cast<std::size_t>(k)]);
    const Eigen::Matrix<std::complex<Real>, 4, 1> out = u * in;
    for (int k = 0; k < 4; ++k) a(idx[static_cast<std::size_t>(k)]) = out(k);
  }
  return v;
}

template <typename Real = double>
Matrix2<Real> gate_matrix(Gate1 g) {
  using C = std::complex<Real>;
  const Real r = Real(1) / std::sqrt(Real(2));
  Matrix2<Real> m;
  switch (g) {
    case Gate1::H: m << C(r), C(r), C(r), C(-r); break;
    case Gate1::S: m << C(1), C(0), C(0), C(0, 1); break;
    case Gate1::X: m << C(0), C(1), C(1), C(0); break;
    case Gate1::Y: m << C(0), C(0, -1), C(0, 1), C(0); break;
    case Gate1::Z: m << C(1), C(0), C(0), C(-1); break;
  }
  return m;
}

/// Representative unitary of c (global phase arbitrary).
template <typename Real = double>
Matrix2<Real> clifford_matrix(Clifford1 c) {
  Matrix2<Real> m = Matrix2<Real>::Identity();
  for (char g : c.word()) m = gate_matrix<Real>(gate_from_char(g)) * m;
  return m;
}

template <typename Real = double>
Matrix4<Real> two_qubit_matrix(TwoQubitGate g) {
  Matrix4<Real> m = Matrix4<Real>::Zero();
  switch (g) {
    case TwoQubitGate::CZ: m.diagonal() << 1, 1, 1, -1; break;
    case TwoQubitGate::CNOT: m(0, 0) = m(1, 1) = m(2, 3) = m(3, 2) = 1; break;
    case TwoQubitGate::SWAP: m(0, 0) = m(1, 2) = m(2, 1) = m(3, 3) = 1; break;
  }
  return m;
}

template <typename Real = double>
Eigen::Matrix<std::complex<Real>, 2, 1> eigenvector(Basis basis, bool negative) {
  using C = std::complex<Real>;
  const Real r = Real(1) / std::sqrt(Real(2));
  Eigen::Matrix<C, 2, 1> e;
  switch (basis) {
    case Basis::Z: e << (negative ? C(0) : C(1)), (negative ? C(1) : C(0)); break;
    case Basis::X: e << C(r), C(negative ? -r : r); break;
    case Basis::Y: e << C(r), C(0, negative ? -r : r); break;
  }
  return e;
}

/// Projects qubit q onto the ±1 eigenspace of the basis Pauli; returns the
/// renormalized state and the branch probability.
template <typename Real>
std::pair<StateVector<Real>, Real> project_measure(StateVector<Real> v, std::size_t q, Basis basis,
                                                   bool outcome_negative) {
  if (q >= v.size()) throw std::out_of_range("qubit index out of range");
  const auto e = eigenvector<Real>(basis, outcome_negative);
  const Matrix2<Real> proj = e * e.adjoint();
  auto& a = v.amplitudes();
  const std::size_t bit = std::size_t{1} << q;
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    if (i & bit) continue;
    const auto i0 = static_cast<Eigen::Index>(i), i1 = static_cast<Eigen::Index>(i | bit);
    const auto a0 = a(i0), a1 = a(i1);
    a(i0) = proj(0, 0) * a0 + proj(0, 1) * a1;
    a(i1) = proj(1, 0) * a0 + proj(1, 1) * a1;
  }
  const Real prob = a.squaredNorm();
  if (prob <= Real(1e-12)) throw std::invalid_argument("zero-probability measurement branch");
  a /= std::sqrt(prob);
  return {std::move(v), prob};
}

template <typename Real>
bool equal_up_to_global_phase(const StateVector<Real>& a, const StateVector<Real>& b, Real tol = Real(1e-10)) {
  if (a.dimension() != b.dimension()) throw std::invalid_argument("dimension mismatch");
  return std::abs(a.amplitudes().dot(b.amplitudes())) >= Real(1) - tol;
}

/// P|v⟩ including the sign of p.
template <typename Real>
StateVector<Real> apply_pauli(StateVector<Real> v, const PauliString& p) {
  if (p.size() != v.size()) throw std::invalid_argument("Pauli length mismatch");
  for (std::size_t q = 0; q < p.size(); ++q) {
    switch (p.get(q)) {
      case Pauli::I: break;
      case Pauli::X: v = apply_unitary(std::move(v), gate_matrix<Real>(Gate1::X), q); break;
      case Pauli::Y: v = apply_unitary(std::move(v), gate_matrix<Real>(Gate1::Y), q); break;
      case Pauli::Z: v = apply_unitary(std::move(v), gate_matrix<Real>(Gate1::Z), q); break;
    }
  }
  if (p.negative()) v.amplitudes() = -v.amplitudes();
  return v;
}

/// Whether P|v⟩ = |v⟩ exactly (within tol), not merely up to phase.
template <typename Real>
bool is_stabilized_by(const StateVector<Real>& v, const PauliString& p, Real tol = Real(1e-10)) {
  return (apply_pauli(v, p).amplitudes() - v.amplitudes()).norm() <= tol;
}

/// Type-I fusion success as the parity map |0⟩⟨00| + |1⟩⟨11| on (a, b):
/// qubit a carries the merged qubit, qubit b is removed. Renormalized.
template <typename Real>
StateVector<Real> fuse_parity(const StateVector<Real>& v, std::size_t a, std::size_t b) {
  if (a >= v.size() || b >= v.size() || a == b) throw std::invalid_argument("bad fusion qubits");
  const std::size_t n = v.size();
  typename StateVector<Real>::Amplitudes out = StateVector<Real>::Amplitudes::Zero(
      static_cast<Eigen::Index>(std::size_t{1} << (n - 1)));
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    const bool ba = (i >> a) & 1u, bb = (i >> b) & 1u;
    if (ba != bb) continue;
    const std::size_t low = i & ((std::size_t{1} << b) - 1);
    const std::size_t high = (i >> (b + 1)) << b;
    out(static_cast<Eigen::Index>(low | high)) += v.amplitudes()(static_cast<Eigen::Index>(i));
  }
  const Real nrm = out.norm();
  if (nrm <= Real(1e-12)) throw std::invalid_argument("zero-probability fusion branch");
  out /= nrm;
  return StateVector<Real>(n - 1, std::move(out));
}

/// ⟨ket|_q |v⟩, renormalized: removes a qubit known to be in state `ket`.
template <typename Real>
StateVector<Real> contract_qubit(const StateVector<Real>& v, std::size_t q,
                                 const Eigen::Matrix<std::complex<Real>, 2, 1>& ket) {
  if (q >= v.size()) throw std::out_of_range("qubit index out of range");
  const std::size_t n = v.size();
  typename StateVector<Real>::Amplitudes out = StateVector<Real>::Amplitudes::Zero(
      static_cast<Eigen::Index>(std::size_t{1} << (n - 1)));
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    const std::size_t bit = (i >> q) & 1u;
    const std::size_t low = i & ((std::size_t{1} << q) - 1);
    const std::size_t high = (i >> (q + 1)) << q;
    out(static_cast<Eigen::Index>(low | high)) +=
        std::conj(ket(static_cast<Eigen::Index>(bit))) * v.amplitudes()(static_cast<Eigen::Index>(i));
  }
  const Real nrm = out.norm();
  if (nrm <= Real(1e-12)) throw std::invalid_argument("qubit orthogonal to the contracted state");
  out /= nrm;
  return StateVector<Real>(n - 1, std::move(out));
}

/// (⊗ frame)|g⟩ with qubit i = i-th smallest vertex id.
template <typename Real = double>
StateVector<Real> framed_graph_state(const GraphState& g, const LocalFrame& frame) {
  auto v = graph_state_vector<Real>(g);
  const auto verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) {
    const Clifford1 c = frame.at(verts[i]);
    if (!c.is_identity()) v = apply_unitary(std::move(v), clifford_matrix<Real>(c), i);
  }
  return v;
}

template <typename Real>
std::string to_csv(const StateVector<Real>& v) {
  std::ostringstream os;
  os.precision(17);
  os << "index,re,im\n";
  for (std::size_t i = 0; i < v.dimension(); ++i) {
    const auto a = v.amplitudes()(static_cast<Eigen::Index>(i));
    os << i << ',' << a.real() << ',' << a.imag() << '\n';
  }
  return os.str();
}

}  // namespace cluster::oracle
