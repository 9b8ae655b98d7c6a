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

#include "cluster/tableau.hpp"

#include <bit>
#include <stdexcept>
#include <utility>

#include "cluster/rng.hpp"

namespace cluster {
namespace {

std::size_t words_for(std::size_t n) { return (n + 63) / 64; }

void require_qubit(const StabilizerTableau& t, std::size_t q) {
  if (q >= t.size()) throw std::out_of_range("qubit index out of range");
}

// Column c < n is X_c, column c >= n is Z_{c-n}.
bool column_bit(const PauliString& p, std::size_t n, std::size_t c) { return c < n ? p.x(c) : p.z(c - n); }

// Gauss-Jordan on columns [0, last); returns the pivot column of each leading row.
std::vector<std::size_t> reduce_rows(StabilizerTableau& t, std::size_t last) {
  const std::size_t n = t.size();
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
  for (std::size_t c = 0; c < last && rank < n; ++c) {
    std::size_t r = rank;
    while (r < n && !column_bit(t.rows()[r], n, c)) ++r;
    if (r == n) continue;
    if (r != rank) std::swap(t.row(r), t.row(rank));
    for (std::size_t j = 0; j < n; ++j) {
      if (j != rank && column_bit(t.rows()[j], n, c)) t.row(j).multiply_by(t.rows()[rank]);
    }
    pivots.push_back(c);
    ++rank;
  }
  return pivots;
}

}  // namespace

PauliString::PauliString(std::size_t n) : n_(n), xs_(words_for(n), 0), zs_(words_for(n), 0) {}

PauliString PauliString::parse(std::string_view text) {
  bool neg = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    neg = text.front() == '-';
    text.remove_prefix(1);
  }
  PauliString p(text.size());
  for (std::size_t q = 0; q < text.size(); ++q) {
    switch (text[q]) {
      case 'I': case '_': break;
      case 'X': p.set(q, Pauli::X); break;
      case 'Y': p.set(q, Pauli::Y); break;
      case 'Z': p.set(q, Pauli::Z); break;
      default: throw std::invalid_argument("bad Pauli character in '" + std::string(text) + "'");
    }
  }
  p.negative_ = neg;
  return p;
}

PauliString PauliString::single(std::size_t n, std::size_t qubit, Pauli pauli, bool negative) {
  if (qubit >= n) throw std::out_of_range("qubit index out of range");
  PauliString p(n);
  p.set(qubit, pauli);
  p.negative_ = negative;
  return p;
}

Pauli PauliString::get(std::size_t q) const { return make_pauli(x(q), z(q)); }

void PauliString::set(std::size_t q, Pauli p) {
  const std::uint64_t bit = std::uint64_t{1} << (q % 64);
  auto& xw = xs_[q / 64];
  auto& zw = zs_[q / 64];
  xw = x_bit(p) ? (xw | bit) : (xw & ~bit);
  zw = z_bit(p) ? (zw | bit) : (zw & ~bit);
}

bool PauliString::commutes(const PauliString& other) const {
  if (n_ != other.n_) throw std::invalid_argument("Pauli length mismatch");
  std::uint64_t parity = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    parity ^= (xs_[w] & other.zs_[w]) ^ (zs_[w] & other.xs_[w]);
  }
  return std::popcount(parity) % 2 == 0;
}

bool PauliString::is_identity() const {
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    if (xs_[w] | zs_[w]) return false;
  }
  return true;
}

void PauliString::multiply_by(const PauliString& rhs) {
  if (n_ != rhs.n_) throw std::invalid_argument("Pauli length mismatch");
  // Per qubit, an anticommuting pair contributes ±i; count the -i lanes.
  unsigned anti = 0;
  unsigned minus = 0;
  for (std::size_t w = 0; w < xs_.size(); ++w) {
    const std::uint64_t x1 = xs_[w], z1 = zs_[w], x2 = rhs.xs_[w], z2 = rhs.zs_[w];
    const std::uint64_t a = (x1 & z2) ^ (z1 & x2);
    const std::uint64_t m = (x1 & ~z1 & ~x2 & z2) | (x1 & z1 & x2 & ~z2) | (~x1 & z1 & x2 & z2);
    anti += static_cast<unsigned>(std::popcount(a));
    minus += static_cast<unsigned>(std::popcount(m));
    xs_[w] = x1 ^ x2;
    zs_[w] = z1 ^ z2;
  }
  const unsigned log_i = (anti + 2 * minus + 2 * ((negative_ ? 1u : 0u) + (rhs.negative_ ? 1u : 0u))) % 4;
  if (log_i % 2 != 0) throw std::logic_error("product of anticommuting Pauli strings");
  negative_ = log_i == 2;
}

std::string PauliString::to_string() const {
  std::string s(1, negative_ ? '-' : '+');
  for (std::size_t q = 0; q < n_; ++q) s.push_back(pauli_char(get(q)));
  return s;
}

StabilizerTableau::StabilizerTableau(std::size_t n) : n_(n) {
  rows_.reserve(n);
  for (std::size_t q = 0; q < n; ++q) rows_.push_back(PauliString::single(n, q, Pauli::Z));
}

StabilizerTableau StabilizerTableau::from_rows(std::vector<PauliString> rows) {
  StabilizerTableau t;
  t.n_ = rows.size();
  for (const auto& r : rows) {
    if (r.size() != t.n_) throw std::invalid_argument("generator length must equal generator count");
  }
  t.rows_ = std::move(rows);
  t.validate();
  return t;
}

void StabilizerTableau::validate() const {
  for (std::size_t i = 0; i < n_; ++i) {
    for (std::size_t j = i + 1; j < n_; ++j) {
      if (!rows_[i].commutes(rows_[j])) throw std::logic_error("stabilizer generators do not commute");
    }
  }
  StabilizerTableau copy = *this;
  if (reduce_rows(copy, 2 * n_).size() != n_) throw std::logic_error("stabilizer generators are dependent");
}

std::string StabilizerTableau::dump() const {
  std::string out;
  const StabilizerTableau canon = canonical_form(*this);
  for (const auto& r : canon.rows()) {
    out += r.to_string();
    out += '\n';
  }
  return out;
}

StabilizerTableau from_graph(const GraphState& g) {
  const auto verts = g.vertices();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < verts.size(); ++i) pos[verts[i]] = i;
  std::vector<PauliString> rows;
  rows.reserve(verts.size());
  for (std::size_t i = 0; i < verts.size(); ++i) {
    PauliString p(verts.size());
    p.set(i, Pauli::X);
    for (VertexId u : g.neighbors(verts[i])) p.set(pos[u], Pauli::Z);
    rows.push_back(std::move(p));
  }
  StabilizerTableau t;
  t = StabilizerTableau(verts.size());
  for (std::size_t i = 0; i < rows.size(); ++i) t.row(i) = std::move(rows[i]);
  return t;
}

StabilizerTableau from_graph(const GraphState& g, const LocalFrame& frame) {
  StabilizerTableau t = from_graph(g);
  const auto verts = g.vertices();
  for (std::size_t i = 0; i < verts.size(); ++i) t = apply_local_clifford(std::move(t), frame.at(verts[i]), i);
  return t;
}

StabilizerTableau apply_gate(StabilizerTableau t, Gate1 gate, std::size_t q) {
  require_qubit(t, q);
  for (std::size_t i = 0; i < t.size(); ++i) {
    PauliString& r = t.row(i);
    const bool x = r.x(q), z = r.z(q);
    switch (gate) {
      case Gate1::H:
        r.set_negative(r.negative() ^ (x && z));
        r.set(q, make_pauli(z, x));
        break;
      case Gate1::S:
        r.set_negative(r.negative() ^ (x && z));
        r.set(q, make_pauli(x, z ^ x));
        break;
      case Gate1::X: r.set_negative(r.negative() ^ z); break;
      case Gate1::Z: r.set_negative(r.negative() ^ x); break;
      case Gate1::Y: r.set_negative(r.negative() ^ (x ^ z)); break;
    }
  }
  return t;
}

StabilizerTableau apply_local_clifford(StabilizerTableau t, Clifford1 c, std::size_t q) {
  require_qubit(t, q);
  for (char g : c.word()) t = apply_gate(std::move(t), gate_from_char(g), q);
  return t;
}

StabilizerTableau apply_two_qubit(StabilizerTableau t, TwoQubitGate gate, std::size_t a, std::size_t b) {
  require_qubit(t, a);
  require_qubit(t, b);
  if (a == b) throw std::invalid_argument("two-qubit gate on a single qubit");
  for (std::size_t i = 0; i < t.size(); ++i) {
    PauliString& r = t.row(i);
    const bool xa = r.x(a), za = r.z(a), xb = r.x(b), zb = r.z(b);
    switch (gate) {
      case TwoQubitGate::CZ:
        r.set_negative(r.negative() ^ (xa && xb && (za ^ zb)));
        r.set(a, make_pauli(xa, za ^ xb));
        r.set(b, make_pauli(xb, zb ^ xa));
        break;
      case TwoQubitGate::CNOT:
        r.set_negative(r.negative() ^ (xa && zb && !(xb ^ za)));
        r.set(a, make_pauli(xa, za ^ zb));
        r.set(b, make_pauli(xb ^ xa, zb));
        break;
      case TwoQubitGate::SWAP:
        r.set(a, make_pauli(xb, zb));
        r.set(b, make_pauli(xa, za));
        break;
    }
  }
  return t;
}

StabilizerTableau canonical_form(StabilizerTableau t) {
  reduce_rows(t, 2 * t.size());
  return t;
}

bool canonical_equal(const StabilizerTableau& a, const StabilizerTableau& b) {
  if (a.size() != b.size()) throw std::invalid_argument("tableau size mismatch");
  return canonical_form(a) == canonical_form(b);
}

namespace {

// Product of generators matching p's bits, or nullopt if p is not in the group
// up to sign. Requires a canonical tableau and its pivot columns.
std::optional<PauliString> group_element(const StabilizerTableau& canon, const std::vector<std::size_t>& pivots,
                                         const PauliString& p) {
  const std::size_t n = canon.size();
  PauliString acc(n);
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (column_bit(p, n, pivots[i])) acc.multiply_by(canon.rows()[i]);
  }
  if (!acc.same_operator(p)) return std::nullopt;
  return acc;
}

}  // namespace

bool stabilizes(const StabilizerTableau& t, const PauliString& p) {
  if (p.size() != t.size()) throw std::invalid_argument("Pauli length mismatch");
  StabilizerTableau canon = t;
  const auto pivots = reduce_rows(canon, 2 * t.size());
  auto elem = group_element(canon, pivots, p);
  return elem && elem->negative() == p.negative();
}

MeasureResult measure_pauli(StabilizerTableau t, const PauliString& p, std::optional<bool> forced_negative,
                            RngStream* rng) {
  if (p.size() != t.size()) throw std::invalid_argument("Pauli length mismatch");
  std::vector<std::size_t> anti;
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (!t.rows()[i].commutes(p)) anti.push_back(i);
  }
  MeasureResult out;
  if (anti.empty()) {
    StabilizerTableau canon = t;
    const auto pivots = reduce_rows(canon, 2 * t.size());
    auto elem = group_element(canon, pivots, p);
    if (!elem) throw std::logic_error("commuting Pauli outside a full-rank stabilizer group");
    out.outcome_negative = elem->negative() != p.negative();
    out.was_deterministic = true;
    if (forced_negative && *forced_negative != out.outcome_negative) {
      throw std::invalid_argument("forced outcome contradicts stabilizer");
    }
    out.tableau = std::move(t);
    return out;
  }
  bool negative;
  if (forced_negative) {
    negative = *forced_negative;
  } else if (rng != nullptr) {
    negative = (rng->next() >> 63) != 0;
  } else {
    throw std::invalid_argument("random measurement needs a forced outcome or an RngStream");
  }
  const std::size_t k = anti.front();
  for (std::size_t idx = 1; idx < anti.size(); ++idx) t.row(anti[idx]).multiply_by(t.rows()[k]);
  PauliString replacement = p;
  replacement.set_negative(p.negative() ^ negative);
  t.row(k) = std::move(replacement);
  out.tableau = std::move(t);
  out.outcome_negative = negative;
  out.was_deterministic = false;
  return out;
}

GraphForm to_graph(const StabilizerTableau& t, const std::vector<VertexId>& labels) {
  const std::size_t n = t.size();
  if (!labels.empty() && labels.size() != n) throw std::invalid_argument("label count must match qubit count");
  auto label = [&](std::size_t q) { return labels.empty() ? static_cast<VertexId>(q) : labels[q]; };

  StabilizerTableau work = t;
  // Per-qubit gates applied to reach graph form, in time order.
  std::vector<Clifford1> applied(n);

  const auto x_pivots = reduce_rows(work, n);
  std::vector<bool> is_pivot(n, false);
  for (std::size_t c : x_pivots) is_pivot[c] = true;
  for (std::size_t q = 0; q < n; ++q) {
    if (is_pivot[q]) continue;
    work = apply_gate(std::move(work), Gate1::H, q);
    applied[q] = Clifford1::from_gate(Gate1::H) * applied[q];
  }
  if (reduce_rows(work, n).size() != n) throw std::logic_error("X block not invertible after Hadamards");
  for (std::size_t q = 0; q < n; ++q) {
    if (!work.rows()[q].z(q)) continue;
    work = apply_gate(std::move(work), Gate1::S, q);
    applied[q] = Clifford1::from_gate(Gate1::S) * applied[q];
  }
  for (std::size_t q = 0; q < n; ++q) {
    if (!work.rows()[q].negative()) continue;
    work = apply_gate(std::move(work), Gate1::Z, q);
    applied[q] = Clifford1::from_gate(Gate1::Z) * applied[q];
  }

  GraphState by_position;
  for (std::size_t q = 0; q < n; ++q) by_position.add_vertex(static_cast<VertexId>(q));
  for (std::size_t i = 0; i < n; ++i) {
    const PauliString& r = work.rows()[i];
    for (std::size_t j = 0; j < n; ++j) {
      if (r.x(j) != (i == j)) throw std::logic_error("X block is not the identity");
      if (r.z(j) != work.rows()[j].z(i)) throw std::logic_error("Z block is not symmetric");
      if (j > i && r.z(j)) by_position.add_edge(static_cast<VertexId>(i), static_cast<VertexId>(j));
    }
  }
  LocalFrame frame_by_position;
  for (std::size_t q = 0; q < n; ++q) frame_by_position.set(static_cast<VertexId>(q), applied[q].inverse());
  if (!canonical_equal(from_graph(by_position, frame_by_position), t)) {
    throw std::logic_error("graph form does not reproduce the tableau");
  }

  std::map<VertexId, VertexId> rename;
  for (std::size_t q = 0; q < n; ++q) rename[static_cast<VertexId>(q)] = label(q);
  GraphForm out{relabel(by_position, rename), relabel(frame_by_position, rename)};
  return out;
}

}  // namespace cluster
