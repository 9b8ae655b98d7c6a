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
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cluster/clifford.hpp"

namespace cluster {

using VertexId = std::uint32_t;
using Edge = std::pair<VertexId, VertexId>;

/// Thrown when a rewrite precondition is violated.
class RewriteError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Undirected simple graph describing a graph (cluster) state.
///
/// Adjacency lists are kept sorted; edges are reported with the smaller id
/// first, in lexicographic order.
class GraphState {
 public:
  GraphState() = default;

  /// Path first, first+1, ..., first+length-1.
  static GraphState path(VertexId first, std::size_t length);
  static GraphState from_edges(std::span<const VertexId> vertices, std::span<const Edge> edges);
  static GraphState from_edges(std::initializer_list<VertexId> vertices, std::initializer_list<Edge> edges);
  /// Vertex set inferred from the edges.
  static GraphState from_edges(std::initializer_list<Edge> edges);

  bool has_vertex(VertexId v) const { return adjacency_.contains(v); }
  bool has_edge(VertexId u, VertexId v) const;
  std::size_t degree(VertexId v) const { return neighbors(v).size(); }
  const std::vector<VertexId>& neighbors(VertexId v) const;

  std::size_t num_vertices() const { return adjacency_.size(); }
  std::size_t num_edges() const;
  bool empty() const { return adjacency_.empty(); }
  std::vector<VertexId> vertices() const;
  std::vector<Edge> edges() const;
  VertexId max_vertex() const;

  void add_vertex(VertexId v);
  void remove_vertex(VertexId v);
  void add_edge(VertexId u, VertexId v);
  void remove_edge(VertexId u, VertexId v);
  void toggle_edge(VertexId u, VertexId v);

  /// Checks the simple-graph invariants; throws std::logic_error on violation.
  void validate() const;

  friend bool operator==(const GraphState&, const GraphState&) = default;

 private:
  std::map<VertexId, std::vector<VertexId>> adjacency_;
};

/// Per-vertex single-qubit Clifford corrections: the physical state is
/// (⊗_v F_v) |G⟩. Identity entries are never stored.
class LocalFrame {
 public:
  Clifford1 at(VertexId v) const;
  void set(VertexId v, Clifford1 c);
  /// F_v <- F_v · c (c acts on the graph-state side, before F_v).
  void compose_inner(VertexId v, Clifford1 c);
  void erase(VertexId v) { entries_.erase(v); }
  bool is_identity() const { return entries_.empty(); }
  const std::map<VertexId, Clifford1>& entries() const { return entries_; }

  friend bool operator==(const LocalFrame&, const LocalFrame&) = default;

 private:
  std::map<VertexId, Clifford1> entries_;
};

struct RewriteReport {
  std::size_t bonds_deleted = 0;
  std::size_t bonds_added = 0;
  std::vector<VertexId> vertices_removed;
  /// Local unitaries that physically implement the rewrite (chain_to_box).
  LocalFrame local_ops;
  /// Correction C such that the post-rewrite physical state is C|result⟩.
  LocalFrame byproduct;
};

struct Rewrite {
  GraphState graph;
  RewriteReport report;
};

GraphState local_complement(GraphState g, VertexId v);

/// σz on v, normalized to the +1 branch: v and its bonds are deleted.
Rewrite measure_z(GraphState g, VertexId v);

/// σy on v, +1 branch: local complement at v, then delete v. The remaining
/// state is S on every former neighbour of v applied to the returned graph.
Rewrite measure_y(GraphState g, VertexId v);

/// Box rewrite of the path q1-q2-q3-q4: H on q2 and q3, with the q2/q3 labels
/// exchanged in the drawing, adds the bond q1-q4. Only q1 and q4 may have
/// neighbours outside the segment.
Rewrite chain_to_box(GraphState g, const std::array<VertexId, 4>& segment);

/// Renames vertices; the map must be injective on the vertex set. Unmapped
/// vertices keep their ids.
GraphState relabel(const GraphState& g, const std::map<VertexId, VertexId>& mapping);
LocalFrame relabel(const LocalFrame& f, const std::map<VertexId, VertexId>& mapping);

/// Largest graph the local-complementation orbit search accepts.
inline constexpr std::size_t kOrbitSearchLimit = 8;
/// Largest graph the isomorphism search accepts.
inline constexpr std::size_t kIsomorphismLimit = 12;

/// True iff g2 lies in the local-complementation orbit of g1. With
/// up_to_isomorphism, any relabeling of g2 is accepted.
bool lc_equivalent(const GraphState& g1, const GraphState& g2, bool up_to_isomorphism = false);

/// Number of labeled graphs in the local-complementation orbit of g.
std::size_t lc_orbit_size(const GraphState& g);

using VertexMap = std::map<VertexId, VertexId>;
std::optional<VertexMap> isomorphic(const GraphState& g1, const GraphState& g2);

/// Vertices connected to `start`, ascending.
std::vector<VertexId> connected_component(const GraphState& g, VertexId start);

/// If g is a single simple path (>= 1 vertex), its vertices in order starting
/// from the smaller endpoint.
std::optional<std::vector<VertexId>> path_order(const GraphState& g);

}  // namespace cluster
