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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace cluster {

/// Hermitian single-qubit Pauli, encoded as (x bit) | (z bit << 1).
enum class Pauli : std::uint8_t { I = 0, X = 1, Z = 2, Y = 3 };

constexpr bool x_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 1u) != 0; }
constexpr bool z_bit(Pauli p) { return (static_cast<std::uint8_t>(p) & 2u) != 0; }
constexpr Pauli make_pauli(bool x, bool z) {
  return static_cast<Pauli>((x ? 1u : 0u) | (z ? 2u : 0u));
}
char pauli_char(Pauli p);

struct SignedPauli {
  Pauli pauli = Pauli::I;
  bool negative = false;
  friend bool operator==(const SignedPauli&, const SignedPauli&) = default;
};

/// Elementary single-qubit gates a Clifford word is spelled with.
enum class Gate1 : std::uint8_t { H, S, X, Y, Z };

/// Single-qubit Clifford modulo global phase.
///
/// The 24 elements are enumerated as P·C with C one of the six coset
/// representatives {I, H, S, HS, SH, HSH} and P one of {I, X, Y, Z}; the index
/// is 4·coset + pauli. Labels spell the matrix product left to right, so "XH"
/// is the matrix X·H (H acts first).
class Clifford1 {
 public:
  static constexpr std::size_t kCount = 24;

  constexpr Clifford1() = default;

  static Clifford1 identity() { return Clifford1(); }
  static Clifford1 from_gate(Gate1 g);
  static Clifford1 from_index(std::size_t index);
  static std::optional<Clifford1> from_label(std::string_view label);
  static const std::array<Clifford1, kCount>& all();

  std::size_t index() const { return index_; }
  std::string_view label() const;
  bool is_identity() const { return index_ == 0; }
  bool is_pauli() const { return index_ < 4; }

  /// U P U† for Hermitian P.
  SignedPauli conjugate(Pauli p) const;
  SignedPauli conjugate(SignedPauli p) const;

  /// Gates in application (time) order; applying them in sequence realizes U.
  std::string_view word() const;

  Clifford1 inverse() const;

  /// Matrix product: (a * b) applies b first, then a.
  friend Clifford1 operator*(Clifford1 a, Clifford1 b);
  friend bool operator==(Clifford1, Clifford1) = default;

 private:
  explicit constexpr Clifford1(std::uint8_t index) : index_(index) {}
  std::uint8_t index_ = 0;
};

Gate1 gate_from_char(char c);

}  // namespace cluster
