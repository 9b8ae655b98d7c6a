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

#include "cluster/recipes.hpp"

#include <algorithm>
#include <iterator>

#include "cluster/tableau.hpp"

namespace cluster {
namespace {

constexpr std::array<std::pair<StepKind, std::string_view>, 8> kStepNames = {{
    {StepKind::input, "input"},
    {StepKind::chain_to_box, "chain_to_box"},
    {StepKind::measure_z, "measure_z"},
    {StepKind::measure_y, "measure_y"},
    {StepKind::fuse, "fuse"},
    {StepKind::relabel, "relabel"},
    {StepKind::local_unitary, "local_unitary"},
    {StepKind::discard, "discard"},
}};

// Composes a rewrite's byproduct into the frame and drops removed vertices.
void absorb(LocalFrame& frame, const RewriteReport& report) {
  for (VertexId v : report.vertices_removed) frame.erase(v);
  for (const auto& [v, c] : report.byproduct.entries()) frame.compose_inner(v, c);
}

std::vector<VertexId> require_path(const GraphState& g, const char* what) {
  auto order = path_order(g);
  if (!order) throw RewriteError(std::string(what) + " is not a chain");
  return *order;
}

// Requires the path first, first+1, ..., first+len-1 with interior qubits
// free of outside bonds.
void require_labeled_chain(const GraphState& g, VertexId first, std::size_t len, const char* what) {
  for (std::size_t i = 0; i < len; ++i) {
    const VertexId v = first + static_cast<VertexId>(i);
    if (!g.has_vertex(v)) throw RewriteError(std::string(what) + " is missing qubit " + std::to_string(v));
    if (i + 1 < len && !g.has_edge(v, v + 1)) throw RewriteError(std::string(what) + " is not a labelled chain");
    if (i > 0 && i + 1 < len && g.degree(v) != 2) {
      throw RewriteError(std::string(what) + " has a branch at qubit " + std::to_string(v));
    }
  }
}

struct LPlacement {
  VertexId corner;
  VertexId arm;
};

// Builds an L on backbone[start..start+3] and removes q2, q3 from the backbone.
LPlacement place_L(RecipeBuilder& rb, std::vector<VertexId>& backbone, std::size_t start) {
  const std::array<VertexId, 4> seg = {backbone[start], backbone[start + 1], backbone[start + 2],
                                       backbone[start + 3]};
  rb.chain_to_box(seg);
  rb.measure_z(seg[1]);
  backbone.erase(backbone.begin() + static_cast<std::ptrdiff_t>(start) + 1,
                 backbone.begin() + static_cast<std::ptrdiff_t>(start) + 3);
  return {seg[0], seg[2]};
}

std::size_t chain_start(const std::vector<VertexId>& chain) { return chain.size() >= 5 ? 1 : 0; }

// Bonds of v that do not belong to its own backbone.
bool has_outside_bond(const GraphState& g, const std::vector<VertexId>& backbone, std::size_t i) {
  const std::size_t along = (i > 0 ? 1 : 0) + (i + 1 < backbone.size() ? 1 : 0);
  return g.degree(backbone[i]) > along;
}

// First segment whose corner and middle qubits carry no rung.
std::optional<std::size_t> free_segment(const GraphState& g, const std::vector<VertexId>& backbone) {
  for (std::size_t i = 0; i + 3 < backbone.size(); ++i) {
    if (!has_outside_bond(g, backbone, i) && !has_outside_bond(g, backbone, i + 1) &&
        !has_outside_bond(g, backbone, i + 2)) {
      return i;
    }
  }
  return std::nullopt;
}

void require_identity_frame(const LocalFrame& f, VertexId v) {
  if (!f.at(v).is_identity()) throw RewriteError("fusion target carries a local frame");
}

std::map<std::string, VertexId> prefixed(const std::map<std::string, VertexId>& marks, const std::string& p) {
  std::map<std::string, VertexId> out;
  for (const auto& [k, v] : marks) out[p + k] = v;
  return out;
}

}  // namespace

std::string_view step_name(StepKind k) {
  for (const auto& [kind, name] : kStepNames) {
    if (kind == k) return name;
  }
  return "?";
}

std::optional<StepKind> step_from_name(std::string_view name) {
  for (const auto& [kind, n] : kStepNames) {
    if (n == name) return kind;
  }
  return std::nullopt;
}

RecipeBuilder::RecipeBuilder(std::string recipe) { r_.recipe = std::move(recipe); }

void RecipeBuilder::record(TraceStep step) {
  r_.ledger += step.delta;
  r_.trace.push_back(std::move(step));
}

void RecipeBuilder::input(const GraphState& g) {
  r_.graph = merge_disjoint(r_.graph, g);
  TraceStep s;
  s.kind = StepKind::input;
  s.input = g;
  record(std::move(s));
}

RewriteReport RecipeBuilder::chain_to_box(const std::array<VertexId, 4>& segment) {
  // The Hadamards are applied physically (conjugated by any frame on q2, q3),
  // so the frame itself is unchanged.
  Rewrite rw = cluster::chain_to_box(std::move(r_.graph), segment);
  r_.graph = std::move(rw.graph);
  TraceStep s;
  s.kind = StepKind::chain_to_box;
  s.vertices.assign(segment.begin(), segment.end());
  record(std::move(s));
  return rw.report;
}

RewriteReport RecipeBuilder::measure_z(VertexId v) {
  Rewrite rw = cluster::measure_z(std::move(r_.graph), v);
  r_.graph = std::move(rw.graph);
  absorb(r_.frame, rw.report);
  TraceStep s;
  s.kind = StepKind::measure_z;
  s.vertices = {v};
  s.delta.bonds_consumed = rw.report.bonds_deleted;
  s.delta.qubits_consumed = 1;
  record(std::move(s));
  return rw.report;
}

RewriteReport RecipeBuilder::measure_y(VertexId v) {
  Rewrite rw = cluster::measure_y(std::move(r_.graph), v);
  r_.graph = std::move(rw.graph);
  absorb(r_.frame, rw.report);
  TraceStep s;
  s.kind = StepKind::measure_y;
  s.vertices = {v};
  s.delta.bonds_consumed = rw.report.bonds_deleted;
  s.delta.qubits_consumed = 1;
  record(std::move(s));
  return rw.report;
}

FusionOutcome RecipeBuilder::fuse(VertexId a, VertexId b, OutcomeSource& source, FusionRule rule) {
  require_identity_frame(r_.frame, a);
  require_identity_frame(r_.frame, b);
  // Reject invalid targets before a draw is consumed.
  check_fusion_targets(r_.graph, a, b, rule);
  return fuse_forced(a, b, source.draw_success(), rule);
}

FusionOutcome RecipeBuilder::fuse_forced(VertexId a, VertexId b, bool success, FusionRule rule) {
  require_identity_frame(r_.frame, a);
  require_identity_frame(r_.frame, b);
  FusionResult fr = type1_fuse(std::move(r_.graph), a, b, success, rule);
  r_.graph = std::move(fr.graph);
  TraceStep s;
  s.kind = StepKind::fuse;
  s.vertices = {a, b};
  s.rule = rule;
  s.success = success;
  s.merged = fr.outcome.merged;
  s.delta = fr.delta;
  record(std::move(s));
  return fr.outcome;
}

void RecipeBuilder::relabel(const std::map<VertexId, VertexId>& mapping) {
  r_.graph = cluster::relabel(r_.graph, mapping);
  r_.frame = cluster::relabel(r_.frame, mapping);
  auto rename = [&](VertexId v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };
  for (auto& bb : r_.layout.backbones) {
    for (auto& v : bb) v = rename(v);
  }
  for (auto& v : r_.layout.rungs) v = rename(v);
  for (auto& [k, v] : r_.layout.marks) v = rename(v);
  TraceStep s;
  s.kind = StepKind::relabel;
  s.mapping = mapping;
  record(std::move(s));
}

void RecipeBuilder::local_unitary(const LocalFrame& gates) {
  const auto verts = r_.graph.vertices();
  StabilizerTableau t = from_graph(r_.graph, r_.frame);
  for (const auto& [v, c] : gates.entries()) {
    if (!r_.graph.has_vertex(v)) throw RewriteError("local unitary on unknown vertex " + std::to_string(v));
  }
  for (std::size_t i = 0; i < verts.size(); ++i) t = apply_local_clifford(std::move(t), gates.at(verts[i]), i);
  GraphForm form = to_graph(t, verts);
  r_.graph = std::move(form.graph);
  r_.frame = std::move(form.frame);
  TraceStep s;
  s.kind = StepKind::local_unitary;
  s.gates = gates;
  record(std::move(s));
}

void RecipeBuilder::discard(VertexId v) {
  if (!r_.graph.has_vertex(v)) throw RewriteError("no such vertex " + std::to_string(v));
  if (r_.graph.degree(v) != 0) throw RewriteError("only unentangled qubits can be discarded");
  r_.graph.remove_vertex(v);
  r_.frame.erase(v);
  TraceStep s;
  s.kind = StepKind::discard;
  s.vertices = {v};
  record(std::move(s));
}

RecipeResult replay(const std::string& recipe, const std::vector<TraceStep>& steps) {
  RecipeBuilder rb(recipe);
  for (const TraceStep& s : steps) {
    const CostLedger before = rb.result().ledger;
    auto need = [&](std::size_t k) {
      if (s.vertices.size() != k) throw std::invalid_argument("malformed trace step " + std::string(step_name(s.kind)));
    };
    switch (s.kind) {
      case StepKind::input: rb.input(s.input); break;
      case StepKind::chain_to_box:
        need(4);
        rb.chain_to_box({s.vertices[0], s.vertices[1], s.vertices[2], s.vertices[3]});
        break;
      case StepKind::measure_z: need(1); rb.measure_z(s.vertices[0]); break;
      case StepKind::measure_y: need(1); rb.measure_y(s.vertices[0]); break;
      case StepKind::fuse: {
        need(2);
        auto out = rb.fuse_forced(s.vertices[0], s.vertices[1], s.success, s.rule);
        if (out.merged != s.merged) throw std::invalid_argument("trace merged-vertex id does not replay");
        break;
      }
      case StepKind::relabel: rb.relabel(s.mapping); break;
      case StepKind::local_unitary: rb.local_unitary(s.gates); break;
      case StepKind::discard: need(1); rb.discard(s.vertices[0]); break;
    }
    CostLedger delta = rb.result().ledger;
    delta.bonds_consumed -= before.bonds_consumed;
    delta.qubits_consumed -= before.qubits_consumed;
    delta.fusion_attempts -= before.fusion_attempts;
    delta.fusion_successes -= before.fusion_successes;
    if (!(delta == s.delta)) throw std::invalid_argument("trace ledger delta does not replay");
  }
  return std::move(rb).finish();
}

RecipeResult build_L(const GraphState& chain, const std::array<VertexId, 4>& segment) {
  RecipeBuilder rb("L");
  rb.input(chain);
  rb.chain_to_box(segment);
  rb.measure_z(segment[1]);
  rb.result().layout.marks = {{"corner", segment[0]}, {"arm", segment[2]}};
  return std::move(rb).finish();
}

RecipeResult build_L(const GraphState& chain) {
  const auto order = require_path(chain, "L input");
  if (order.size() < 4) throw RewriteError("invalid box segment: chain shorter than 4");
  const std::size_t s = chain_start(order);
  RecipeResult r = build_L(chain, {order[s], order[s + 1], order[s + 2], order[s + 3]});
  std::vector<VertexId> backbone = order;
  backbone.erase(backbone.begin() + static_cast<std::ptrdiff_t>(s) + 1,
                 backbone.begin() + static_cast<std::ptrdiff_t>(s) + 3);
  r.layout.backbones = {backbone};
  return r;
}

RecipeResult build_cross(const GraphState& chain7) {
  require_labeled_chain(chain7, 1, 7, "cross input");
  RecipeBuilder rb("cross");
  rb.input(chain7);
  rb.chain_to_box({1, 2, 3, 4});
  rb.chain_to_box({4, 5, 6, 7});
  rb.measure_z(3);
  rb.measure_z(5);
  rb.result().layout.marks = {{"center", 4}};
  return std::move(rb).finish();
}

RecipeResult build_fig4b(const GraphState& chain7) {
  const auto p = require_path(chain7, "4b input");
  if (p.size() != 7) throw RewriteError("4b input must be a 7-qubit chain");
  RecipeBuilder rb("fig4b");
  rb.input(chain7);
  rb.chain_to_box({p[0], p[1], p[2], p[3]});
  rb.chain_to_box({p[3], p[4], p[5], p[6]});
  rb.result().layout.marks = {{"box1_near", p[0]}, {"box1_near_twin", p[1]}, {"box1_far", p[2]}, {"center", p[3]},
                              {"box2_far", p[4]},  {"box2_near", p[5]},      {"box2_near_twin", p[6]}};
  return std::move(rb).finish();
}

RecipeResult build_fig4f(const GraphState& chain10) {
  const auto p = require_path(chain10, "4f input");
  if (p.size() != 10) throw RewriteError("4f input must be a 10-qubit chain");
  RecipeBuilder rb("fig4f");
  rb.input(chain10);
  rb.chain_to_box({p[0], p[1], p[2], p[3]});
  rb.chain_to_box({p[3], p[4], p[5], p[6]});
  rb.chain_to_box({p[6], p[7], p[8], p[9]});
  return std::move(rb).finish();
}

RecipeResult build_H(const GraphState& chain_a, const GraphState& chain_b, OutcomeSource& source) {
  std::vector<VertexId> a = require_path(chain_a, "H input A");
  std::vector<VertexId> b = require_path(chain_b, "H input B");
  RecipeBuilder rb("H");
  rb.input(chain_a);
  rb.input(chain_b);
  while (true) {
    if (a.size() < 4 || b.size() < 4) {
      rb.result().layout.backbones = {a, b};
      throw ResourceExhausted("resource chains exhausted", std::move(rb).finish());
    }
    const LPlacement la = place_L(rb, a, chain_start(a));
    const LPlacement lb = place_L(rb, b, chain_start(b));
    const FusionOutcome out = rb.fuse(la.arm, lb.arm, source);
    if (out.success()) {
      auto& layout = rb.result().layout;
      layout.backbones = {a, b};
      layout.rungs = {*out.merged};
      return std::move(rb).finish();
    }
    // Both arms are gone; each L is a chain again, anchored at the old corner end.
  }
}

RecipeResult grow_ladder(RecipeResult h, std::size_t rung_count, OutcomeSource& source) {
  if (h.layout.backbones.size() < 2) throw RewriteError("ladder growth needs two backbones");
  RecipeBuilder rb(std::move(h));
  rb.result().recipe = "ladder";
  for (std::size_t added = 0; added < rung_count;) {
    auto& bbs = rb.result().layout.backbones;
    const auto sa = free_segment(rb.graph(), bbs[0]);
    const auto sb = free_segment(rb.graph(), bbs[1]);
    if (!sa || !sb) throw ResourceExhausted("resource chains exhausted", std::move(rb).finish());
    const LPlacement la = place_L(rb, bbs[0], *sa);
    const LPlacement lb = place_L(rb, bbs[1], *sb);
    const FusionOutcome out = rb.fuse(la.arm, lb.arm, source);
    if (out.success()) {
      rb.result().layout.rungs.push_back(*out.merged);
      ++added;
    }
  }
  return std::move(rb).finish();
}

RecipeResult grow_depth(RecipeResult h, const GraphState& chain, OutcomeSource& source) {
  if (h.layout.backbones.empty()) throw RewriteError("depth growth needs a backbone");
  std::vector<VertexId> fresh = require_path(chain, "depth chain");
  RecipeBuilder rb(std::move(h));
  rb.result().recipe = "depth";
  rb.input(chain);
  while (true) {
    auto& outer = rb.result().layout.backbones.back();
    const auto so = free_segment(rb.graph(), outer);
    if (!so || fresh.size() < 4) throw ResourceExhausted("resource chains exhausted", std::move(rb).finish());
    const LPlacement lo = place_L(rb, outer, *so);
    const LPlacement ln = place_L(rb, fresh, chain_start(fresh));
    const FusionOutcome out = rb.fuse(lo.arm, ln.arm, source);
    if (out.success()) {
      rb.result().layout.backbones.push_back(fresh);
      rb.result().layout.rungs.push_back(*out.merged);
      return std::move(rb).finish();
    }
  }
}

Fig4Pair fuse_fig4_pair(const RecipeResult& x, const RecipeResult& y, OutcomeSource& source) {
  for (const auto* r : {&x, &y}) {
    if (r->recipe != "fig4b" || r->layout.marks.size() != 7) throw RewriteError("fig4 pair needs two 4b shapes");
  }
  RecipeResult combined;
  combined.recipe = "fig4_pair";
  combined.graph = merge_disjoint(x.graph, y.graph);
  if (!x.frame.is_identity() || !y.frame.is_identity()) throw RewriteError("4b inputs must carry no frame");
  combined.ledger = x.ledger + y.ledger;
  combined.trace = x.trace;
  combined.trace.insert(combined.trace.end(), y.trace.begin(), y.trace.end());
  combined.layout.marks = prefixed(x.layout.marks, "x.");
  for (const auto& [k, v] : prefixed(y.layout.marks, "y.")) combined.layout.marks[k] = v;

  RecipeBuilder rb(std::move(combined));
  auto mark = [&](const std::string& k) { return rb.result().layout.marks.at(k); };

  const FusionOutcome first = rb.fuse(mark("x.box1_near"), mark("y.box1_near"), source, FusionRule::generalized);
  if (!first.success()) return {std::move(rb).finish(), Fig4Stage::first_failed};
  rb.result().layout.marks["c1"] = *first.merged;

  const FusionOutcome second = rb.fuse(mark("x.box2_far"), mark("y.box2_far"), source, FusionRule::generalized);
  std::map<VertexId, VertexId> canon = {
      {mark("x.box1_far"), 1},       {mark("x.box1_near_twin"), 2}, {mark("x.center"), 3},
      {mark("c1"), 4},               {mark("y.box1_far"), 5},       {mark("x.box2_near_twin"), 6},
      {mark("y.box1_near_twin"), 7}, {mark("y.center"), 8},         {mark("x.box2_near"), 10},
      {mark("y.box2_near_twin"), 11}, {mark("y.box2_near"), 12},
  };
  if (second.success()) canon[*second.merged] = 9;
  // Route through ids above every current label so the rename is collision free.
  const VertexId offset = std::max<VertexId>(rb.graph().max_vertex(), 12) + 1;
  std::map<VertexId, VertexId> lift, lower;
  for (const auto& [from, to] : canon) {
    lift[from] = offset + to;
    lower[offset + to] = to;
  }
  rb.relabel(lift);
  rb.relabel(lower);
  auto& marks = rb.result().layout.marks;
  for (auto it = marks.begin(); it != marks.end();) {
    it = rb.graph().has_vertex(it->second) ? std::next(it) : marks.erase(it);
  }
  rb.result().recipe = second.success() ? "fig4c" : "fig4d";
  return {std::move(rb).finish(), second.success() ? Fig4Stage::both_fused : Fig4Stage::second_failed};
}

RecipeResult extend_fig4e(const RecipeResult& d, OutcomeSource& source) {
  const GraphState& g = d.graph;
  for (VertexId v : {6u, 10u, 11u, 12u}) {
    if (!g.has_vertex(v) || g.degree(v) != 1) throw RewriteError("4e needs the 4d remnant labelling");
  }
  RecipeBuilder rb(d);
  rb.result().recipe = "fig4e";
  if (rb.fuse(10, 12, source).success()) {
    rb.measure_y(6);
    rb.measure_y(11);
    return std::move(rb).finish();
  }
  rb.fuse(6, 11, source);
  return std::move(rb).finish();
}

RecipeResult salvage_first_fusion(const RecipeResult& remnant, OutcomeSource& source) {
  const auto& marks = remnant.layout.marks;
  for (const char* k : {"x.box2_far", "y.box2_far", "x.box1_near_twin", "y.box1_near_twin"}) {
    if (!marks.contains(k) || !remnant.graph.has_vertex(marks.at(k))) {
      throw RewriteError("salvage needs the remnants of a failed first 4c fusion");
    }
  }
  if (remnant.graph.has_vertex(marks.at("x.box1_near")) || remnant.graph.has_vertex(marks.at("y.box1_near"))) {
    throw RewriteError("salvage needs the remnants of a failed first 4c fusion");
  }
  RecipeBuilder rb(remnant);
  rb.result().recipe = "salvage";
  const FusionOutcome out = rb.fuse(marks.at("x.box2_far"), marks.at("y.box2_far"), source, FusionRule::generalized);
  if (!out.success()) return std::move(rb).finish();
  rb.measure_z(marks.at("x.box1_near_twin"));
  rb.measure_z(marks.at("y.box1_near_twin"));
  rb.discard(marks.at("x.box1_far"));
  rb.discard(marks.at("y.box1_far"));
  rb.result().layout.marks["center"] = *out.merged;
  return std::move(rb).finish();
}

RecipeResult build_ring8(const GraphState& chain9, OutcomeSource& source) {
  require_labeled_chain(chain9, 1, 9, "ring input");
  if (chain9.degree(1) != 1 || chain9.degree(9) != 1) throw RewriteError("ring input ends must be leaves");
  RecipeBuilder rb("ring8");
  rb.input(chain9);
  const FusionOutcome out = rb.fuse(1, 9, source);
  if (!out.success()) return std::move(rb).finish();
  rb.relabel({{*out.merged, 1}});
  LocalFrame hadamards;
  for (VertexId v : {1u, 4u, 5u, 8u}) hadamards.set(v, Clifford1::from_gate(Gate1::H));
  rb.local_unitary(hadamards);
  rb.relabel({{1, 5}, {5, 1}, {4, 8}, {8, 4}});
  return std::move(rb).finish();
}

RecipeResult nodeless_rung(const RecipeResult& h, VertexId rung) {
  if (!h.graph.has_vertex(rung) || h.graph.degree(rung) != 2) throw RewriteError("nodeless rung needs a degree-2 rung");
  RecipeBuilder rb(h);
  rb.result().recipe = "nodeless_rung";
  rb.measure_y(rung);
  auto& rungs = rb.result().layout.rungs;
  rungs.erase(std::remove(rungs.begin(), rungs.end(), rung), rungs.end());
  return std::move(rb).finish();
}

RecipeResult nodeless_rung(const GraphState& g, VertexId rung) {
  RecipeBuilder rb("nodeless_rung");
  rb.input(g);
  RecipeResult start = std::move(rb).finish();
  return nodeless_rung(start, rung);
}

}  // namespace cluster
