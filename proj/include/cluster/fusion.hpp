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

#include "cluster/graph_state.hpp"
#include "cluster/rng.hpp"

namespace cluster {

inline constexpr double kTypeOneSuccessProbability = 0.5;

/// Bond-cost accounting. Bonds are charged only when a measurement or fusion
/// failure destroys them; bonds created by local unitaries or by a successful
/// fusion are free.
struct CostLedger {
  std::uint64_t bonds_consumed = 0;
  std::uint64_t qubits_consumed = 0;
  std::uint64_t fusion_attempts = 0;
  std::uint64_t fusion_successes = 0;

  CostLedger& operator+=(const CostLedger& d) {
    bonds_consumed += d.bonds_consumed;
    qubits_consumed += d.qubits_consumed;
    fusion_attempts += d.fusion_attempts;
    fusion_successes += d.fusion_successes;
    return *this;
  }
  friend CostLedger operator+(CostLedger a, const CostLedger& b) { return a += b; }
  friend bool operator==(const CostLedger&, const CostLedger&) = default;
};

/// "S", "F,S", "F*3,S" -> forced fusion outcomes (true = success).
std::vector<bool> parse_schedule(std::string_view text);
std::string format_schedule(const std::vector<bool>& schedule);

/// Source of fusion outcomes: one RngStream draw per attempt, with the
/// outcome overridden by the next forced entry while any remain.
class OutcomeSource {
 public:
  /// Throws std::invalid_argument unless 0 < success_probability <= 1.
  explicit OutcomeSource(RngStream rng, std::vector<bool> forced = {},
                         double success_probability = kTypeOneSuccessProbability);
  static OutcomeSource forced_only(std::vector<bool> forced) { return OutcomeSource(RngStream(0), std::move(forced)); }

  bool draw_success();
  double success_probability() const { return p_; }

  std::size_t draws() const { return draws_; }
  std::size_t forced_remaining() const { return forced_.size() - next_forced_; }

 private:
  RngStream rng_;
  std::vector<bool> forced_;
  std::size_t next_forced_ = 0;
  std::size_t draws_ = 0;
  double p_;
};

struct FusionOutcome {
  std::optional<VertexId> merged;  ///< set on success
  bool success() const { return merged.has_value(); }
  friend bool operator==(const FusionOutcome&, const FusionOutcome&) = default;
};

enum class FusionRule {
  /// Both targets have degree <= 1 (chain ends, dangling arms).
  leaf,
  /// Any non-adjacent pair; the merged neighbourhood is N(a) Δ N(b).
  generalized,
};

struct FusionResult {
  GraphState graph;
  FusionOutcome outcome;
  CostLedger delta;
};

/// Type-I fusion of a and b. Success replaces both by a fresh vertex
/// (max id + 1) adjacent to N(a) Δ N(b); failure removes both as σz
/// measurements would.
FusionResult type1_fuse(GraphState g, VertexId a, VertexId b, OutcomeSource& source,
                        FusionRule rule = FusionRule::leaf);
FusionResult type1_fuse(GraphState g, VertexId a, VertexId b, bool success, FusionRule rule = FusionRule::leaf);
/// Throws RewriteError when (a, b) is not a valid target pair under `rule`.
void check_fusion_targets(const GraphState& g, VertexId a, VertexId b, FusionRule rule);

GraphState merge_disjoint(const GraphState& a, const GraphState& b);

}  // namespace cluster
