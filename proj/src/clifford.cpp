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

#include "cluster/clifford.hpp"

#include <stdexcept>
#include <string>

namespace cluster {
namespace {

// Image of X and Z under conjugation; Y follows from Y = iXZ.
struct Action {
  SignedPauli x_image;
  SignedPauli z_image;
  friend bool operator==(const Action&, const Action&) = default;
};

// Exponent k of i in P·Q = i^k R for Hermitian single-qubit Paulis.
int product_phase(Pauli p, Pauli q) {
  if (p == Pauli::I || q == Pauli::I || p == q) return 0;
  // Cyclic X -> Y -> Z gives +i.
  auto ord = [](Pauli a) { return a == Pauli::X ? 0 : a == Pauli::Y ? 1 : 2; };
  return (ord(q) - ord(p) + 3) % 3 == 1 ? 1 : 3;
}

SignedPauli apply_action(const Action& a, Pauli p) {
  switch (p) {
    case Pauli::I: return {Pauli::I, false};
    case Pauli::X: return a.x_image;
    case Pauli::Z: return a.z_image;
    case Pauli::Y: {
      // U Y U† = i (U X U†)(U Z U†).
      const auto& xi = a.x_image;
      const auto& zi = a.z_image;
      int k = 1 + product_phase(xi.pauli, zi.pauli) + (xi.negative ? 2 : 0) + (zi.negative ? 2 : 0);
      k %= 4;
      if (k % 2 != 0) throw std::logic_error("non-Hermitian Clifford image");
      auto r = static_cast<Pauli>(static_cast<std::uint8_t>(xi.pauli) ^ static_cast<std::uint8_t>(zi.pauli));
      return {r, k == 2};
    }
  }
  return {};
}

SignedPauli apply_action(const Action& a, SignedPauli p) {
  auto r = apply_action(a, p.pauli);
  r.negative ^= p.negative;
  return r;
}

Action compose(const Action& outer, const Action& inner) {
  return {apply_action(outer, inner.x_image), apply_action(outer, inner.z_image)};
}

Action gate_action(Gate1 g) {
  switch (g) {
    case Gate1::H: return {{Pauli::Z, false}, {Pauli::X, false}};
    case Gate1::S: return {{Pauli::Y, false}, {Pauli::Z, false}};
    case Gate1::X: return {{Pauli::X, false}, {Pauli::Z, true}};
    case Gate1::Y: return {{Pauli::X, true}, {Pauli::Z, true}};
    case Gate1::Z: return {{Pauli::X, true}, {Pauli::Z, false}};
  }
  return {};
}

constexpr std::array<std::string_view, 6> kCosetLabels = {"", "H", "S", "HS", "SH", "HSH"};
constexpr std::array<std::string_view, 4> kPauliLabels = {"", "X", "Y", "Z"};

struct Table {
  std::array<std::string, Clifford1::kCount> labels;
  std::array<std::string, Clifford1::kCount> words;
  std::array<Action, Clifford1::kCount> actions;
  std::array<std::array<std::uint8_t, Clifford1::kCount>, Clifford1::kCount> product;
  std::array<std::uint8_t, Clifford1::kCount> inverse;
};

Table build_table() {
  Table t;
  for (std::size_t c = 0; c < 6; ++c) {
    for (std::size_t p = 0; p < 4; ++p) {
      const std::size_t idx = 4 * c + p;
      std::string label = std::string(kPauliLabels[p]) + std::string(kCosetLabels[c]);
      if (label.empty()) label = "I";
      t.labels[idx] = label;
      Action act = {{Pauli::X, false}, {Pauli::Z, false}};
      std::string word;
      if (label != "I") {
        // Matrix product left to right; conjugation applies the rightmost first.
        for (auto it = label.rbegin(); it != label.rend(); ++it) {
          act = compose(gate_action(gate_from_char(*it)), act);
          word.push_back(*it);
        }
      }
      t.actions[idx] = act;
      t.words[idx] = word;
    }
  }
  auto find = [&](const Action& a) -> std::uint8_t {
    for (std::size_t i = 0; i < Clifford1::kCount; ++i) {
      if (t.actions[i] == a) return static_cast<std::uint8_t>(i);
    }
    throw std::logic_error("Clifford action outside the enumerated group");
  };
  for (std::size_t a = 0; a < Clifford1::kCount; ++a) {
    for (std::size_t b = 0; b < Clifford1::kCount; ++b) {
      t.product[a][b] = find(compose(t.actions[a], t.actions[b]));
    }
  }
  for (std::size_t a = 0; a < Clifford1::kCount; ++a) {
    for (std::size_t b = 0; b < Clifford1::kCount; ++b) {
      if (t.product[a][b] == 0) t.inverse[a] = static_cast<std::uint8_t>(b);
    }
  }
  return t;
}

const Table& table() {
  static const Table t = build_table();
  return t;
}

}  // namespace

char pauli_char(Pauli p) {
  switch (p) {
    case Pauli::I: return 'I';
    case Pauli::X: return 'X';
    case Pauli::Y: return 'Y';
    case Pauli::Z: return 'Z';
  }
  return '?';
}

Gate1 gate_from_char(char c) {
  switch (c) {
    case 'H': return Gate1::H;
    case 'S': return Gate1::S;
    case 'X': return Gate1::X;
    case 'Y': return Gate1::Y;
    case 'Z': return Gate1::Z;
    default: throw std::invalid_argument(std::string("unknown gate '") + c + "'");
  }
}

Clifford1 Clifford1::from_gate(Gate1 g) {
  switch (g) {
    case Gate1::H: return Clifford1(4);
    case Gate1::S: return Clifford1(8);
    case Gate1::X: return Clifford1(1);
    case Gate1::Y: return Clifford1(2);
    case Gate1::Z: return Clifford1(3);
  }
  return {};
}

Clifford1 Clifford1::from_index(std::size_t index) {
  if (index >= kCount) throw std::out_of_range("Clifford index out of range");
  return Clifford1(static_cast<std::uint8_t>(index));
}

std::optional<Clifford1> Clifford1::from_label(std::string_view label) {
  const auto& t = table();
  for (std::size_t i = 0; i < kCount; ++i) {
    if (t.labels[i] == label) return Clifford1(static_cast<std::uint8_t>(i));
  }
  return std::nullopt;
}

const std::array<Clifford1, Clifford1::kCount>& Clifford1::all() {
  static const auto elems = [] {
    std::array<Clifford1, kCount> out;
    for (std::size_t i = 0; i < kCount; ++i) out[i] = Clifford1(static_cast<std::uint8_t>(i));
    return out;
  }();
  return elems;
}

std::string_view Clifford1::label() const { return table().labels[index_]; }
std::string_view Clifford1::word() const { return table().words[index_]; }

SignedPauli Clifford1::conjugate(Pauli p) const { return apply_action(table().actions[index_], p); }
SignedPauli Clifford1::conjugate(SignedPauli p) const { return apply_action(table().actions[index_], p); }

Clifford1 Clifford1::inverse() const { return Clifford1(table().inverse[index_]); }

Clifford1 operator*(Clifford1 a, Clifford1 b) { return Clifford1(table().product[a.index_][b.index_]); }

}  // namespace cluster
