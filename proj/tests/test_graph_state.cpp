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

#include <gtest/gtest.h>

#include <queue>
#include <set>

#include "cluster/graph_state.hpp"
#include "cluster/statevector.hpp"
#include "support.hpp"

namespace cluster {
namespace {

using testing::overlap;
using testing::position;
using testing::random_graph;
using Vec = oracle::StateVector<double>;

constexpr double kPi = 3.14159265358979323846;

oracle::Matrix2<double> rotation(Pauli axis, double sign) {
  // exp(sign · i π/4 · P) for P in {X, Z}.
  const std::complex<double> c(std::cos(kPi / 4), 0), s(0, sign * std::sin(kPi / 4));
  oracle::Matrix2<double> m;
  if (axis == Pauli::X) {
    m << c, s, s, c;
  } else {
    m << c + s, 0, 0, c - s;
  }
  return m;
}

// |G ⋆ v⟩ = exp(-iπ/4 X_v) ∏_{u ∈ N(v)} exp(iπ/4 Z_u) |G⟩.
Vec local_complement_oracle(const GraphState& g, VertexId v) {
  Vec s = oracle::graph_state_vector(g);
  for (VertexId u : g.neighbors(v)) s = oracle::apply_unitary(std::move(s), rotation(Pauli::Z, 1), position(g, u));
  return oracle::apply_unitary(std::move(s), rotation(Pauli::X, -1), position(g, v));
}

// Projects v onto the +1 eigenstate of basis and removes it from the register.
Vec measure_oracle(const GraphState& g, VertexId v, oracle::Basis basis) {
  Vec s = oracle::graph_state_vector(g);
  const std::size_t q = position(g, v);
  auto [post, prob] = oracle::project_measure(std::move(s), q, basis, false);
  EXPECT_GT(prob, 0.0);
  return oracle::contract_qubit(post, q, oracle::eigenvector<double>(basis, false));
}

TEST(GraphState, PathAndAccessors) {
  const GraphState g = GraphState::path(3, 4);
  EXPECT_EQ(g.vertices(), (std::vector<VertexId>{3, 4, 5, 6}));
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{3, 4}, {4, 5}, {5, 6}}));
  EXPECT_EQ(g.num_edges(), 3u);
  EXPECT_EQ(g.degree(4), 2u);
  EXPECT_EQ(g.max_vertex(), 6u);
  EXPECT_TRUE(g.has_edge(5, 4));
  EXPECT_FALSE(g.has_edge(3, 5));
  g.validate();
}

TEST(GraphState, FromEdgesRejectsBadInput) {
  EXPECT_THROW(GraphState::from_edges({1, 2}, {{1, 3}}), std::invalid_argument);
  EXPECT_THROW(GraphState::from_edges({{1, 1}}), std::invalid_argument);
  GraphState g = GraphState::from_edges({{2, 1}, {1, 3}});
  EXPECT_EQ(g.edges(), (std::vector<Edge>{{1, 2}, {1, 3}}));
}

TEST(GraphState, EditsKeepAdjacencySorted) {
  GraphState g;
  for (VertexId v : {5u, 1u, 3u}) g.add_vertex(v);
  g.add_edge(5, 1);
  g.add_edge(3, 1);
  EXPECT_EQ(g.neighbors(1), (std::vector<VertexId>{3, 5}));
  g.toggle_edge(1, 3);
  EXPECT_FALSE(g.has_edge(1, 3));
  g.toggle_edge(1, 3);
  g.remove_vertex(1);
  EXPECT_EQ(g.num_edges(), 0u);
  g.validate();
}

TEST(LocalComplement, TogglesNeighbourhood) {
  const GraphState star = GraphState::from_edges({{1, 2}, {1, 3}, {1, 4}});
  const GraphState k4 = local_complement(star, 1);
  EXPECT_EQ(k4.num_edges(), 6u);
  EXPECT_EQ(local_complement(k4, 1), star);
  EXPECT_THROW(local_complement(star, 9), RewriteError);
}

TEST(LocalComplement, InvolutionOnRandomGraphs) {
  RngStream rng(11);
  for (int i = 0; i < 100; ++i) {
    const GraphState g = random_graph(2 + rng.next() % 7, 0.5, rng);
    const VertexId v = 1 + static_cast<VertexId>(rng.next() % g.num_vertices());
    EXPECT_EQ(local_complement(local_complement(g, v), v), g);
  }
}

TEST(LocalComplement, MatchesOracleUnitary) {
  RngStream rng(12);
  for (int i = 0; i < 40; ++i) {
    const GraphState g = random_graph(2 + rng.next() % 5, 0.5, rng);
    const VertexId v = 1 + static_cast<VertexId>(rng.next() % g.num_vertices());
    EXPECT_GT(overlap(local_complement_oracle(g, v), oracle::graph_state_vector(local_complement(g, v))), 1 - 1e-10);
  }
}

TEST(MeasureZ, DeletesVertexAndCountsBonds) {
  const Rewrite r = measure_z(GraphState::path(1, 5), 3);
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{1, 2}, {4, 5}}));
  EXPECT_EQ(r.report.bonds_deleted, 2u);
  EXPECT_EQ(r.report.bonds_added, 0u);
  EXPECT_EQ(r.report.vertices_removed, (std::vector<VertexId>{3}));
  EXPECT_TRUE(r.report.byproduct.is_identity());
  EXPECT_THROW(measure_z(GraphState::path(1, 3), 7), RewriteError);
}

TEST(MeasureZ, CommutesOnDistinctVertices) {
  RngStream rng(13);
  for (int i = 0; i < 100; ++i) {
    const GraphState g = random_graph(3 + rng.next() % 6, 0.5, rng);
    const VertexId u = 1 + static_cast<VertexId>(rng.next() % g.num_vertices());
    VertexId v = 1 + static_cast<VertexId>(rng.next() % g.num_vertices());
    if (u == v) v = v % g.num_vertices() + 1;
    EXPECT_EQ(measure_z(measure_z(g, u).graph, v).graph, measure_z(measure_z(g, v).graph, u).graph);
  }
}

TEST(MeasureZ, MatchesOracleProjection) {
  RngStream rng(14);
  for (int i = 0; i < 40; ++i) {
    const GraphState g = random_graph(2 + rng.next() % 5, 0.5, rng);
    const VertexId v = 1 + static_cast<VertexId>(rng.next() % g.num_vertices());
    const Rewrite r = measure_z(g, v);
    EXPECT_GT(overlap(measure_oracle(g, v, oracle::Basis::Z), oracle::graph_state_vector(r.graph)), 1 - 1e-10);
  }
}

TEST(MeasureY, PathMiddleJoinsNeighbours) {
  const Rewrite r = measure_y(GraphState::path(1, 3), 2);
  EXPECT_EQ(r.graph.edges(), (std::vector<Edge>{{1, 3}}));
  EXPECT_EQ(r.report.bonds_deleted, 2u);
  EXPECT_EQ(r.report.bonds_added, 1u);
  EXPECT_EQ(r.report.byproduct.at(1), Clifford1::from_gate(Gate1::S));
  EXPECT_EQ(r.report.byproduct.at(3), Clifford1::from_gate(Gate1::S));
}

TEST(MeasureY, TriangleCountsExactDelta) {
  // Local complement at 2 removes 1-3, then deleting 2 removes two bonds.
  const Rewrite r = measure_y(GraphState::from_edges({{1, 2}, {2, 3}, {1, 3}}), 2);
  EXPECT_EQ(r.graph.num_edges(), 0u);
  EXPECT_EQ(r.report.bonds_deleted, 3u);
  EXPECT_EQ(r.report.bonds_added, 0u);
}

TEST(MeasureY, MatchesOracleWithByproduct) {
  RngStream rng(15);
  for (int i = 0; i < 60; ++i) {
    const GraphState g = random_graph(2 + rng.next() % 6, 0.5, rng);
    const VertexId v = 1 + static_cast<VertexId>(rng.next() % g.num_vertices());
    const Rewrite r = measure_y(g, v);
    const Vec expected = oracle::framed_graph_state(r.graph, r.report.byproduct);
    EXPECT_GT(overlap(measure_oracle(g, v, oracle::Basis::Y), expected), 1 - 1e-10);
  }
}

TEST(ChainToBox, FourChainGivesBox) {
  const Rewrite r = chain_to_box(GraphState::path(1, 4), {1, 2, 3, 4});
  EXPECT_EQ(r.graph, GraphState::from_edges({{1, 3}, {2, 3}, {2, 4}, {1, 4}}));
  EXPECT_EQ(r.report.bonds_added, 1u);
  EXPECT_EQ(r.report.bonds_deleted, 0u);
  EXPECT_EQ(r.report.local_ops.at(2), Clifford1::from_gate(Gate1::H));
  EXPECT_EQ(r.report.local_ops.at(3), Clifford1::from_gate(Gate1::H));
  EXPECT_TRUE(r.report.byproduct.is_identity());
}

TEST(ChainToBox, EmbeddedSegmentKeepsOuterBonds) {
  const Rewrite r = chain_to_box(GraphState::path(0, 6), {1, 2, 3, 4});
  EXPECT_EQ(r.graph, GraphState::from_edges({{0, 1}, {1, 3}, {2, 3}, {2, 4}, {1, 4}, {4, 5}}));
}

TEST(ChainToBox, OracleHadamardsGiveTheRewrite) {
  for (std::size_t len = 4; len <= 9; ++len) {
    for (VertexId s = 1; s + 3 <= len; ++s) {
      const GraphState chain = GraphState::path(1, len);
      Vec v = oracle::graph_state_vector(chain);
      v = oracle::apply_unitary(std::move(v), oracle::gate_matrix(Gate1::H), s);
      v = oracle::apply_unitary(std::move(v), oracle::gate_matrix(Gate1::H), s + 1);
      const Rewrite r = chain_to_box(chain, {s, s + 1, s + 2, s + 3});
      EXPECT_GT(overlap(v, oracle::graph_state_vector(r.graph)), 1 - 1e-10) << len << " at " << s;
    }
  }
}

TEST(ChainToBox, DrawnOrderNeedsTheSwap) {
  const GraphState chain = GraphState::path(1, 4);
  Vec v = oracle::graph_state_vector(chain);
  v = oracle::apply_unitary(std::move(v), oracle::gate_matrix(Gate1::H), 1);
  v = oracle::apply_unitary(std::move(v), oracle::gate_matrix(Gate1::H), 2);
  const Vec swapped = oracle::apply_unitary(v, oracle::two_qubit_matrix(TwoQubitGate::SWAP), 1, 2);
  const GraphState cycle = GraphState::from_edges({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  EXPECT_GT(overlap(swapped, oracle::graph_state_vector(cycle)), 1 - 1e-10);
  EXPECT_LT(overlap(v, oracle::graph_state_vector(cycle)), 0.9);
}

TEST(ChainToBox, RejectsInvalidSegments) {
  EXPECT_THROW(chain_to_box(GraphState::path(1, 4), {1, 3, 2, 4}), RewriteError);
  EXPECT_THROW(chain_to_box(GraphState::path(1, 4), {1, 2, 3, 3}), RewriteError);
  GraphState branched = GraphState::path(1, 5);
  branched.add_vertex(9);
  branched.add_edge(3, 9);
  EXPECT_THROW(chain_to_box(branched, {1, 2, 3, 4}), RewriteError);
  GraphState ring = GraphState::path(1, 4);
  ring.add_edge(1, 4);
  EXPECT_THROW(chain_to_box(ring, {1, 2, 3, 4}), RewriteError);
}

TEST(Relabel, RenamesGraphAndFrame) {
  const GraphState g = GraphState::path(1, 3);
  const GraphState r = relabel(g, {{1, 10}, {3, 1}});
  EXPECT_EQ(r.edges(), (std::vector<Edge>{{1, 2}, {2, 10}}));
  EXPECT_THROW(relabel(g, {{1, 2}}), std::invalid_argument);
  LocalFrame f;
  f.set(1, Clifford1::from_gate(Gate1::S));
  EXPECT_EQ(relabel(f, {{1, 7}}).at(7), Clifford1::from_gate(Gate1::S));
}

TEST(LocalFrame, IdentityEntriesAreNotStored) {
  LocalFrame f;
  f.set(3, Clifford1::identity());
  EXPECT_TRUE(f.is_identity());
  const Clifford1 s = Clifford1::from_gate(Gate1::S);
  f.compose_inner(3, s);
  f.compose_inner(3, s);
  EXPECT_EQ(f.at(3), Clifford1::from_gate(Gate1::Z));
  f.compose_inner(3, Clifford1::from_gate(Gate1::Z));
  EXPECT_TRUE(f.is_identity());
}

// Labelled orbit computed independently by breadth-first search over edge sets.
std::set<std::vector<Edge>> brute_orbit(const GraphState& g) {
  std::set<std::vector<Edge>> seen{g.edges()};
  std::queue<GraphState> todo;
  todo.push(g);
  while (!todo.empty()) {
    const GraphState cur = todo.front();
    todo.pop();
    for (VertexId v : cur.vertices()) {
      GraphState next = cur;
      const auto& nb = cur.neighbors(v);
      for (std::size_t i = 0; i < nb.size(); ++i) {
        for (std::size_t j = i + 1; j < nb.size(); ++j) next.toggle_edge(nb[i], nb[j]);
      }
      if (seen.insert(next.edges()).second) todo.push(next);
    }
  }
  return seen;
}

TEST(LcEquivalence, OrbitSizesMatchBruteForce) {
  RngStream rng(16);
  for (int i = 0; i < 20; ++i) {
    const GraphState g = random_graph(2 + rng.next() % 5, 0.5, rng);
    EXPECT_EQ(lc_orbit_size(g), brute_orbit(g).size());
  }
  EXPECT_EQ(lc_orbit_size(GraphState::path(1, 3)), 4u);
}

TEST(LcEquivalence, ChainAndBoxAreEquivalentStarIsNot) {
  const GraphState chain = GraphState::path(1, 4);
  const GraphState box = GraphState::from_edges({{1, 3}, {2, 3}, {2, 4}, {1, 4}});
  const GraphState star = GraphState::from_edges({{1, 2}, {1, 3}, {1, 4}});
  EXPECT_TRUE(lc_equivalent(chain, box, true));
  EXPECT_FALSE(lc_equivalent(chain, star, true));
  EXPECT_TRUE(lc_equivalent(star, local_complement(star, 1)));
  EXPECT_FALSE(lc_equivalent(chain, GraphState::path(2, 4)));
}

TEST(LcEquivalence, SearchLimit) {
  EXPECT_THROW(lc_orbit_size(GraphState::path(1, kOrbitSearchLimit + 1)), std::invalid_argument);
}

TEST(Isomorphism, FindsValidMapping) {
  RngStream rng(17);
  for (int i = 0; i < 50; ++i) {
    const GraphState g = random_graph(1 + rng.next() % 9, 0.4, rng);
    // Reverse the labels to get an isomorphic copy.
    std::map<VertexId, VertexId> rev;
    const std::size_t n = g.num_vertices();
    for (VertexId v = 1; v <= n; ++v) rev[v] = static_cast<VertexId>(n + 100 - v);
    const GraphState h = relabel(g, rev);
    const auto m = isomorphic(g, h);
    ASSERT_TRUE(m.has_value());
    EXPECT_EQ(relabel(g, *m), h);
  }
  EXPECT_FALSE(isomorphic(GraphState::path(1, 4), GraphState::from_edges({{1, 2}, {1, 3}, {1, 4}})).has_value());
  EXPECT_FALSE(isomorphic(GraphState::path(1, 4), GraphState::path(1, 5)).has_value());
  EXPECT_THROW(isomorphic(GraphState::path(1, 13), GraphState::path(1, 13)), std::invalid_argument);
}

TEST(PathOrder, StartsAtSmallerEnd) {
  const GraphState g = relabel(GraphState::path(1, 4), {{1, 9}, {2, 5}});
  EXPECT_EQ(*path_order(g), (std::vector<VertexId>{4, 3, 5, 9}));
  EXPECT_FALSE(path_order(GraphState::from_edges({{1, 2}, {1, 3}, {1, 4}})).has_value());
  GraphState two = GraphState::path(1, 2);
  two.add_vertex(7);
  EXPECT_FALSE(path_order(two).has_value());
  EXPECT_EQ(connected_component(two, 7), (std::vector<VertexId>{7}));
  EXPECT_EQ(connected_component(two, 2), (std::vector<VertexId>{1, 2}));
}

}  // namespace
}  // namespace cluster
