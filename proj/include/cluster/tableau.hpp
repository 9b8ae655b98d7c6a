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

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluster/clifford.hpp"
#include "cluster/graph_state.hpp"

namespace cluster {

class RngStream;

/// Hermitian Pauli string with a ±1 sign, bit-packed 64 qubits per word.
class PauliString {
 public:
  PauliString() = default;
  explicit PauliString(std::size_t n);
  /// "+XZI" / "-YY" / "XZ" (sign optional, defaults to +).
  static PauliString parse(std::string_view text);
  static PauliString single(std::size_t n, std::size_t qubit, Pauli p, bool negative = false);

  std::size_t size() const { return n_; }
  Pauli get(std::size_t q) const;
  void set(std::size_t q, Pauli p);
  bool negative() const { return negative_; }
  void set_negative(bool neg) { negative_ = neg; }

  bool x(std::size_t q) const { return (xs_[q / 64] >> (q % 64)) & 1u; }
  bool z(std::size_t q) const { return (zs_[q / 64] >> (q % 64)) & 1u; }

  bool commutes(const PauliString& other) const;
  bool same_operator(const PauliString& other) const { return xs_ == other.xs_ && zs_ == other.zs_; }
  bool is_identity() const;

  /// this <- this · rhs. Both must commute (product stays Hermitian).
  void multiply_by(const PauliString& rhs);

  std::string to_string() const;

  friend bool operator==(const PauliString&, const PauliString&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<std::uint64_t> xs_;
  std::vector<std::uint64_t> zs_;
  bool negative_ = false;
};

enum class TwoQubitGate { CZ, CNOT, SWAP };

/// n commuting, independent stabilizer generators of a pure state.
class StabilizerTableau {
 public:
  StabilizerTableau() = default;
  /// |0…0⟩: generators Z_q.
  explicit StabilizerTableau(std::size_t n);
  static StabilizerTableau from_rows(std::vector<PauliString> rows);

  std::size_t size() const { return n_; }
  const std::vector<PauliString>& rows() const { return rows_; }

  /// Throws std::logic_error when generators fail to commute or are dependent.
  void validate() const;

  /// One generator per line, in canonical order.
  std::string dump() const;

  PauliString& row(std::size_t i) { return rows_[i]; }

  friend bool operator==(const StabilizerTableau&, const StabilizerTableau&) = default;

 private:
  std::size_t n_ = 0;
  std::vector<PauliString> rows_;
};

/// Generators K_v = X_v ∏_{u∈N(v)} Z_u, qubit i = i-th smallest vertex id.
StabilizerTableau from_graph(const GraphState& g);

StabilizerTableau apply_gate(StabilizerTableau t, Gate1 gate, std::size_t q);
StabilizerTableau apply_local_clifford(StabilizerTableau t, Clifford1 c, std::size_t q);
StabilizerTableau apply_two_qubit(StabilizerTableau t, TwoQubitGate gate, std::size_t q1, std::size_t q2);

struct MeasureResult {
  StabilizerTableau tableau;
  bool outcome_negative = false;  ///< outcome -1
  bool was_deterministic = false;
};

/// Measures the observable p. A random outcome is taken from `forced` when
/// given, otherwise from one draw of `rng`. Forcing a deterministic
/// measurement to the impossible outcome throws.
MeasureResult measure_pauli(StabilizerTableau t, const PauliString& p, std::optional<bool> forced_negative,
                            RngStream* rng = nullptr);

/// Gauss-Jordan reduced generator set (X block columns, then Z block).
StabilizerTableau canonical_form(StabilizerTableau t);
bool canonical_equal(const StabilizerTableau& a, const StabilizerTableau& b);

/// True iff ±p (with p's own sign) is in the stabilizer group.
bool stabilizes(const StabilizerTableau& t, const PauliString& p);

struct GraphForm {
  GraphState graph;
  LocalFrame frame;
};

/// Local-Clifford reduction to graph form: the state of t equals
/// (⊗ frame) |graph⟩. Vertex ids are labels[q] (default q).
GraphForm to_graph(const StabilizerTableau& t, const std::vector<VertexId>& labels = {});

/// Tableau of (⊗ frame)|g⟩ with qubit order = ascending vertex ids.
StabilizerTableau from_graph(const GraphState& g, const LocalFrame& frame);

}  // namespace cluster
