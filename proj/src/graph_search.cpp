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

#include <algorithm>
#include <array>
#include <bit>
#include <deque>
#include <unordered_set>

#include "cluster/graph_state.hpp"

namespace cluster {
namespace {

// Dense adjacency over positions 0..n-1; row bit j set iff i~j.
struct DenseGraph {
  std::size_t n = 0;
  std::array<std::uint32_t, 32> rows{};
};

DenseGraph to_dense(const GraphState& g, const std::vector<VertexId>& order) {
  DenseGraph d;
  d.n = order.size();
  std::map<VertexId, std::size_t> pos;
  for (std::size_t i = 0; i < order.size(); ++i) pos[order[i]] = i;
  for (auto [u, v] : g.edges()) {
    d.rows[pos[u]] |= 1u << pos[v];
    d.rows[pos[v]] |= 1u << pos[u];
  }
  return d;
}

// Upper-triangle bit encoding used as the orbit visited-set key.
std::uint64_t encode(const DenseGraph& d) {
  std::uint64_t key = 0;
  std::size_t bit = 0;
  for (std::size_t i = 0; i < d.n; ++i) {
    for (std::size_t j = i + 1; j < d.n; ++j, ++bit) {
      if ((d.rows[i] >> j) & 1u) key |= std::uint64_t{1} << bit;
    }
  }
  return key;
}

void complement_at(DenseGraph& d, std::size_t v) {
  const std::uint32_t nb = d.rows[v];
  for (std::size_t i = 0; i < d.n; ++i) {
    if ((nb >> i) & 1u) d.rows[i] ^= nb & ~(1u << i);
  }
}

std::vector<std::size_t> degree_profile(const DenseGraph& d) {
  std::vector<std::size_t> deg(d.n);
  for (std::size_t i = 0; i < d.n; ++i) deg[i] = static_cast<std::size_t>(std::popcount(d.rows[i]));
  std::sort(deg.begin(), deg.end());
  return deg;
}

// Backtracking bijection a -> b preserving adjacency.
class IsoSearch {
 public:
  IsoSearch(const DenseGraph& a, const DenseGraph& b) : a_(a), b_(b), map_(a.n, -1) {
    for (std::size_t i = 0; i < a.n; ++i) order_.push_back(i);
    // Highest-degree first keeps the branching factor small.
    std::stable_sort(order_.begin(), order_.end(), [&](std::size_t x, std::size_t y) {
      return std::popcount(a_.rows[x]) > std::popcount(a_.rows[y]);
    });
  }

  bool run() { return extend(0); }
  const std::vector<int>& mapping() const { return map_; }

 private:
  bool extend(std::size_t depth) {
    if (depth == order_.size()) return true;
    const std::size_t v = order_[depth];
    for (std::size_t w = 0; w < b_.n; ++w) {
      if ((used_ >> w) & 1u) continue;
      if (std::popcount(a_.rows[v]) != std::popcount(b_.rows[w])) continue;
      bool ok = true;
      for (std::size_t k = 0; k < depth && ok; ++k) {
        const std::size_t u = order_[k];
        const bool ea = (a_.rows[v] >> u) & 1u;
        const bool eb = (b_.rows[w] >> map_[u]) & 1u;
        ok = ea == eb;
      }
      if (!ok) continue;
      map_[v] = static_cast<int>(w);
      used_ |= 1u << w;
      if (extend(depth + 1)) return true;
      used_ &= ~(1u << w);
      map_[v] = -1;
    }
    return false;
  }

  const DenseGraph& a_;
  const DenseGraph& b_;
  std::vector<std::size_t> order_;
  std::vector<int> map_;
  std::uint32_t used_ = 0;
};

bool dense_isomorphic(const DenseGraph& a, const DenseGraph& b) {
  if (a.n != b.n || degree_profile(a) != degree_profile(b)) return false;
  return IsoSearch(a, b).run();
}

template <typename Visit>
void for_each_in_orbit(const DenseGraph& start, Visit&& visit) {
  std::unordered_set<std::uint64_t> seen{encode(start)};
  std::deque<DenseGraph> frontier{start};
  while (!frontier.empty()) {
    DenseGraph cur = frontier.front();
    frontier.pop_front();
    if (visit(cur)) return;
    for (std::size_t v = 0; v < cur.n; ++v) {
      DenseGraph next = cur;
      complement_at(next, v);
      if (seen.insert(encode(next)).second) frontier.push_back(next);
    }
  }
}

void require_orbit_size(const GraphState& g) {
  if (g.num_vertices() > kOrbitSearchLimit) throw std::invalid_argument("orbit search limit exceeded");
}

}  // namespace

bool lc_equivalent(const GraphState& g1, const GraphState& g2, bool up_to_isomorphism) {
  require_orbit_size(g1);
  require_orbit_size(g2);
  if (g1.num_vertices() != g2.num_vertices()) return false;
  if (!up_to_isomorphism) {
    if (g1.vertices() != g2.vertices()) return false;
    const auto order = g1.vertices();
    const std::uint64_t target = encode(to_dense(g2, order));
    bool found = false;
    for_each_in_orbit(to_dense(g1, order), [&](const DenseGraph& d) { return found = encode(d) == target; });
    return found;
  }
  const DenseGraph target = to_dense(g2, g2.vertices());
  bool found = false;
  for_each_in_orbit(to_dense(g1, g1.vertices()),
                    [&](const DenseGraph& d) { return found = dense_isomorphic(d, target); });
  return found;
}

std::size_t lc_orbit_size(const GraphState& g) {
  require_orbit_size(g);
  std::size_t count = 0;
  for_each_in_orbit(to_dense(g, g.vertices()), [&](const DenseGraph&) {
    ++count;
    return false;
  });
  return count;
}

std::optional<VertexMap> isomorphic(const GraphState& g1, const GraphState& g2) {
  if (g1.num_vertices() > kIsomorphismLimit || g2.num_vertices() > kIsomorphismLimit) {
    throw std::invalid_argument("isomorphism search limit exceeded");
  }
  if (g1.num_vertices() != g2.num_vertices() || g1.num_edges() != g2.num_edges()) return std::nullopt;
  const auto va = g1.vertices();
  const auto vb = g2.vertices();
  const DenseGraph a = to_dense(g1, va);
  const DenseGraph b = to_dense(g2, vb);
  if (degree_profile(a) != degree_profile(b)) return std::nullopt;
  IsoSearch search(a, b);
  if (!search.run()) return std::nullopt;
  VertexMap out;
  for (std::size_t i = 0; i < va.size(); ++i) out[va[i]] = vb[static_cast<std::size_t>(search.mapping()[i])];
  return out;
}

}  // namespace cluster
