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

#include <string>
#include <vector>

#include "cluster/graph_state.hpp"
#include "cluster/rng.hpp"
#include "cluster/statevector.hpp"

namespace cluster::testing {

inline GraphState random_graph(std::size_t n, double p, RngStream& rng, VertexId first = 1) {
  GraphState g;
  for (VertexId v = first; v < first + n; ++v) g.add_vertex(v);
  for (VertexId u = first; u < first + n; ++u) {
    for (VertexId v = u + 1; v < first + n; ++v) {
      if (rng.bernoulli(p)) g.add_edge(u, v);
    }
  }
  return g;
}

inline std::vector<Edge> edges_of(const GraphState& g) { return g.edges(); }

inline double overlap(const oracle::StateVector<double>& a, const oracle::StateVector<double>& b) {
  return std::abs(a.amplitudes().dot(b.amplitudes()));
}

/// Position of vertex v in ascending vertex order (the oracle's qubit index).
inline std::size_t position(const GraphState& g, VertexId v) {
  const auto verts = g.vertices();
  return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
}

}  // namespace cluster::testing
