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
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cluster/fusion.hpp"
#include "cluster/graph_state.hpp"

namespace cluster {

enum class StepKind { input, chain_to_box, measure_z, measure_y, fuse, relabel, local_unitary, discard };

std::string_view step_name(StepKind k);
std::optional<StepKind> step_from_name(std::string_view name);

/// One executed step. Only the fields relevant to `kind` are populated.
struct TraceStep {
  StepKind kind = StepKind::input;
  /// Segment (chain_to_box), measured/discarded vertex, or fusion pair.
  std::vector<VertexId> vertices;
  GraphState input;
  std::map<VertexId, VertexId> mapping;
  LocalFrame gates;
  FusionRule rule = FusionRule::leaf;
  bool success = false;
  std::optional<VertexId> merged;
  CostLedger delta;

  friend bool operator==(const TraceStep&, const TraceStep&) = default;
};

/// Structural bookkeeping for the growth recipes; not serialized.
struct Layout {
  /// Ordered chain vertex lists; consecutive entries are bonded.
  std::vector<std::vector<VertexId>> backbones;
  std::vector<VertexId> rungs;
  std::map<std::string, VertexId> marks;
};

struct RecipeResult {
  std::string recipe;
  GraphState graph;
  LocalFrame frame;
  CostLedger ledger;
  std::vector<TraceStep> trace;
  Layout layout;
};

/// A retry loop ran out of chain qubits; `partial` holds everything done so far.
class ResourceExhausted : public std::runtime_error {
 public:
  ResourceExhausted(const std::string& what, RecipeResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const RecipeResult& partial() const { return partial_; }

 private:
  RecipeResult partial_;
};

/// Executes steps against a graph + frame + ledger while recording the trace.
/// Recipes and replay share it, which keeps replay bit-exact.
class RecipeBuilder {
 public:
  explicit RecipeBuilder(std::string recipe);
  explicit RecipeBuilder(RecipeResult start) : r_(std::move(start)) {}

  void input(const GraphState& g);
  RewriteReport chain_to_box(const std::array<VertexId, 4>& segment);
  RewriteReport measure_z(VertexId v);
  RewriteReport measure_y(VertexId v);
  FusionOutcome fuse(VertexId a, VertexId b, OutcomeSource& source, FusionRule rule = FusionRule::leaf);
  FusionOutcome fuse_forced(VertexId a, VertexId b, bool success, FusionRule rule = FusionRule::leaf);
  void relabel(const std::map<VertexId, VertexId>& mapping);
  /// Applies single-qubit Cliffords physically and re-derives the graph form
  /// through the stabilizer tableau.
  void local_unitary(const LocalFrame& gates);
  /// Releases an unentangled qubit from the cluster.
  void discard(VertexId v);

  const GraphState& graph() const { return r_.graph; }
  RecipeResult& result() { return r_; }
  const RecipeResult& result() const { return r_; }
  RecipeResult finish() && { return std::move(r_); }

 private:
  void record(TraceStep step);
  RecipeResult r_;
};

RecipeResult replay(const std::string& recipe, const std::vector<TraceStep>& steps);

/// Box rewrite on the segment followed by σz on q2; the arm q3 hangs off q1.
RecipeResult build_L(const GraphState& chain, const std::array<VertexId, 4>& segment);
/// Auto-placed segment: one qubit in from the lower-labelled end when the
/// chain has at least five qubits, at the end otherwise.
RecipeResult build_L(const GraphState& chain);

/// Cross from the chain 1-2-...-7 (extensions beyond 1 and 7 allowed).
RecipeResult build_cross(const GraphState& chain7);

/// Two chains -> L-shapes -> fuse the arms; on failure retry on the
/// shortened chains until success or exhaustion.
RecipeResult build_H(const GraphState& chain_a, const GraphState& chain_b, OutcomeSource& source);

/// Adds rungs between the first two backbones of an H-shape or ladder.
RecipeResult grow_ladder(RecipeResult h, std::size_t rung_count, OutcomeSource& source);
/// Adjoins a parallel chain to the outermost backbone.
RecipeResult grow_depth(RecipeResult h, const GraphState& chain, OutcomeSource& source);

/// Two boxes sharing the middle qubit of a 7-chain. No measurements.
RecipeResult build_fig4b(const GraphState& chain7);
/// Three boxes in a row on a 10-chain, consecutive boxes sharing one qubit.
RecipeResult build_fig4f(const GraphState& chain10);

enum class Fig4Stage {
  both_fused,     ///< two joined 4b shapes (recipe fig4c)
  second_failed,  ///< one-fusion remnant (recipe fig4d)
  first_failed,   ///< input for salvage_first_fusion
};

struct Fig4Pair {
  RecipeResult result;
  Fig4Stage stage;
};

/// Joins two 4b shapes (disjoint ids) with two fusions in succession.
/// Successful outcomes are relabelled to the documented 4c/4d numbering.
Fig4Pair fuse_fig4_pair(const RecipeResult& x, const RecipeResult& y, OutcomeSource& source);

/// From the 4d remnant: fuse(10,12) then σy on 6 and 11; if that fusion
/// fails, fuse(6,11); if both fail the 4b structure remains.
RecipeResult extend_fig4e(const RecipeResult& d, OutcomeSource& source);

/// After a failed first fusion: one more fusion and two σz measurements
/// give another 4b structure on success.
RecipeResult salvage_first_fusion(const RecipeResult& remnant, OutcomeSource& source);

/// 9-chain -> fuse the ends into an 8-ring -> H on 1,4,5,8 -> relabel 1<->5, 4<->8.
RecipeResult build_ring8(const GraphState& chain9, OutcomeSource& source);

/// σy on a degree-2 rung vertex, leaving a direct bond between its neighbours.
RecipeResult nodeless_rung(const RecipeResult& h, VertexId rung);
RecipeResult nodeless_rung(const GraphState& g, VertexId rung);

}  // namespace cluster
