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

#include "cluster/graph_state.hpp"

#include <algorithm>
#include <set>

namespace cluster {
namespace {

const std::vector<VertexId> kNoNeighbors;

void insert_sorted(std::vector<VertexId>& list, VertexId v) {
  list.insert(std::lower_bound(list.begin(), list.end(), v), v);
}

void erase_sorted(std::vector<VertexId>& list, VertexId v) {
  auto it = std::lower_bound(list.begin(), list.end(), v);
  if (it != list.end() && *it == v) list.erase(it);
}

void require_vertex(const GraphState& g, VertexId v) {
  if (!g.has_vertex(v)) throw RewriteError("no such vertex " + std::to_string(v));
}

}  // namespace

GraphState GraphState::path(VertexId first, std::size_t length) {
  GraphState g;
  for (std::size_t i = 0; i < length; ++i) g.add_vertex(first + static_cast<VertexId>(i));
  for (std::size_t i = 1; i < length; ++i) {
    g.add_edge(first + static_cast<VertexId>(i - 1), first + static_cast<VertexId>(i));
  }
  return g;
}

GraphState GraphState::from_edges(std::span<const VertexId> vertices, std::span<const Edge> edges) {
  GraphState g;
  for (VertexId v : vertices) g.add_vertex(v);
  for (auto [u, v] : edges) {
    if (!g.has_vertex(u) || !g.has_vertex(v)) {
      throw std::invalid_argument("edge endpoint not in vertex set");
    }
    if (g.has_edge(u, v)) throw std::invalid_argument("duplicate edge");
    g.add_edge(u, v);
  }
  return g;
}

GraphState GraphState::from_edges(std::initializer_list<VertexId> vertices,
                                  std::initializer_list<Edge> edges) {
  return from_edges(std::span<const VertexId>(vertices.begin(), vertices.size()),
                    std::span<const Edge>(edges.begin(), edges.size()));
}

GraphState GraphState::from_edges(std::initializer_list<Edge> edges) {
  GraphState g;
  for (auto [u, v] : edges) {
    g.add_vertex(u);
    g.add_vertex(v);
    g.add_edge(u, v);
  }
  return g;
}

bool GraphState::has_edge(VertexId u, VertexId v) const {
  auto it = adjacency_.find(u);
  if (it == adjacency_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), v);
}

const std::vector<VertexId>& GraphState::neighbors(VertexId v) const {
  auto it = adjacency_.find(v);
  return it == adjacency_.end() ? kNoNeighbors : it->second;
}

std::size_t GraphState::num_edges() const {
  std::size_t twice = 0;
  for (const auto& [v, nbrs] : adjacency_) twice += nbrs.size();
  return twice / 2;
}

std::vector<VertexId> GraphState::vertices() const {
  std::vector<VertexId> out;
  out.reserve(adjacency_.size());
  for (const auto& [v, nbrs] : adjacency_) out.push_back(v);
  return out;
}

std::vector<Edge> GraphState::edges() const {
  std::vector<Edge> out;
  for (const auto& [v, nbrs] : adjacency_) {
    for (VertexId u : nbrs) {
      if (v < u) out.emplace_back(v, u);
    }
  }
  return out;
}

VertexId GraphState::max_vertex() const {
  if (adjacency_.empty()) throw std::logic_error("empty graph has no max vertex");
  return adjacency_.rbegin()->first;
}

void GraphState::add_vertex(VertexId v) { adjacency_.try_emplace(v); }

void GraphState::remove_vertex(VertexId v) {
  auto it = adjacency_.find(v);
  if (it == adjacency_.end()) return;
  for (VertexId u : it->second) erase_sorted(adjacency_[u], v);
  adjacency_.erase(it);
}

void GraphState::add_edge(VertexId u, VertexId v) {
  if (u == v) throw std::invalid_argument("self-loop");
  if (!has_vertex(u) || !has_vertex(v)) throw std::invalid_argument("edge endpoint not in vertex set");
  if (has_edge(u, v)) return;
  insert_sorted(adjacency_[u], v);
  insert_sorted(adjacency_[v], u);
}

void GraphState::remove_edge(VertexId u, VertexId v) {
  if (!has_edge(u, v)) return;
  erase_sorted(adjacency_[u], v);
  erase_sorted(adjacency_[v], u);
}

void GraphState::toggle_edge(VertexId u, VertexId v) {
  if (has_edge(u, v)) {
    remove_edge(u, v);
  } else {
    add_edge(u, v);
  }
}

void GraphState::validate() const {
  for (const auto& [v, nbrs] : adjacency_) {
    if (!std::is_sorted(nbrs.begin(), nbrs.end()) ||
        std::adjacent_find(nbrs.begin(), nbrs.end()) != nbrs.end()) {
      throw std::logic_error("adjacency list not strictly sorted");
    }
    for (VertexId u : nbrs) {
      if (u == v) throw std::logic_error("self-loop");
      if (!has_vertex(u)) throw std::logic_error("dangling edge endpoint");
      if (!has_edge(u, v)) throw std::logic_error("asymmetric adjacency");
    }
  }
}

Clifford1 LocalFrame::at(VertexId v) const {
  auto it = entries_.find(v);
  return it == entries_.end() ? Clifford1::identity() : it->second;
}

void LocalFrame::set(VertexId v, Clifford1 c) {
  if (c.is_identity()) {
    entries_.erase(v);
  } else {
    entries_[v] = c;
  }
}

void LocalFrame::compose_inner(VertexId v, Clifford1 c) { set(v, at(v) * c); }

GraphState local_complement(GraphState g, VertexId v) {
  require_vertex(g, v);
  const std::vector<VertexId> nbrs = g.neighbors(v);
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) g.toggle_edge(nbrs[i], nbrs[j]);
  }
  return g;
}

Rewrite measure_z(GraphState g, VertexId v) {
  require_vertex(g, v);
  Rewrite out;
  out.report.bonds_deleted = g.degree(v);
  out.report.vertices_removed = {v};
  g.remove_vertex(v);
  out.graph = std::move(g);
  return out;
}

Rewrite measure_y(GraphState g, VertexId v) {
  require_vertex(g, v);
  const std::vector<VertexId> nbrs = g.neighbors(v);
  Rewrite out;
  for (std::size_t i = 0; i < nbrs.size(); ++i) {
    for (std::size_t j = i + 1; j < nbrs.size(); ++j) {
      if (g.has_edge(nbrs[i], nbrs[j])) {
        ++out.report.bonds_deleted;
      } else {
        ++out.report.bonds_added;
      }
      g.toggle_edge(nbrs[i], nbrs[j]);
    }
  }
  out.report.bonds_deleted += nbrs.size();
  out.report.vertices_removed = {v};
  for (VertexId u : nbrs) out.report.byproduct.set(u, Clifford1::from_gate(Gate1::S));
  g.remove_vertex(v);
  out.graph = std::move(g);
  return out;
}

Rewrite chain_to_box(GraphState g, const std::array<VertexId, 4>& segment) {
  const auto [q1, q2, q3, q4] = segment;
  for (VertexId v : segment) require_vertex(g, v);
  const std::set<VertexId> distinct(segment.begin(), segment.end());
  const bool is_path = distinct.size() == 4 && g.has_edge(q1, q2) && g.has_edge(q2, q3) &&
                       g.has_edge(q3, q4) && !g.has_edge(q1, q4) && !g.has_edge(q1, q3) &&
                       !g.has_edge(q2, q4);
  if (!is_path || g.degree(q2) != 2 || g.degree(q3) != 2) throw RewriteError("invalid box segment");

  // Relabel q2 <-> q3 within the segment, then add q1-q4.
  g.remove_edge(q1, q2);
  g.remove_edge(q3, q4);
  g.add_edge(q1, q3);
  g.add_edge(q2, q4);
  g.add_edge(q1, q4);

  Rewrite out;
  out.report.bonds_added = 1;
  out.report.local_ops.set(q2, Clifford1::from_gate(Gate1::H));
  out.report.local_ops.set(q3, Clifford1::from_gate(Gate1::H));
  out.graph = std::move(g);
  return out;
}

GraphState relabel(const GraphState& g, const std::map<VertexId, VertexId>& mapping) {
  auto rename = [&](VertexId v) {
    auto it = mapping.find(v);
    return it == mapping.end() ? v : it->second;
  };
  GraphState out;
  for (VertexId v : g.vertices()) {
    VertexId r = rename(v);
    if (out.has_vertex(r)) throw std::invalid_argument("relabeling is not injective");
    out.add_vertex(r);
  }
  for (auto [u, v] : g.edges()) out.add_edge(rename(u), rename(v));
  return out;
}

LocalFrame relabel(const LocalFrame& f, const std::map<VertexId, VertexId>& mapping) {
  LocalFrame out;
  for (const auto& [v, c] : f.entries()) {
    auto it = mapping.find(v);
    out.set(it == mapping.end() ? v : it->second, c);
  }
  return out;
}

std::vector<VertexId> connected_component(const GraphState& g, VertexId start) {
  std::set<VertexId> seen{start};
  std::vector<VertexId> stack{start};
  while (!stack.empty()) {
    VertexId v = stack.back();
    stack.pop_back();
    for (VertexId u : g.neighbors(v)) {
      if (seen.insert(u).second) stack.push_back(u);
    }
  }
  return {seen.begin(), seen.end()};
}

std::optional<std::vector<VertexId>> path_order(const GraphState& g) {
  if (g.empty()) return std::nullopt;
  if (g.num_vertices() == 1) return g.vertices();
  if (g.num_edges() != g.num_vertices() - 1) return std::nullopt;
  std::optional<VertexId> start;
  for (VertexId v : g.vertices()) {
    const std::size_t d = g.degree(v);
    if (d == 0 || d > 2) return std::nullopt;
    if (d == 1 && !start) start = v;
  }
  if (!start) return std::nullopt;
  std::vector<VertexId> order{*start};
  VertexId prev = *start;
  VertexId cur = g.neighbors(*start).front();
  while (true) {
    order.push_back(cur);
    const auto& nb = g.neighbors(cur);
    if (nb.size() == 1) break;
    VertexId next = nb[0] == prev ? nb[1] : nb[0];
    prev = cur;
    cur = next;
  }
  if (order.size() != g.num_vertices()) return std::nullopt;
  return order;
}

}  // namespace cluster
