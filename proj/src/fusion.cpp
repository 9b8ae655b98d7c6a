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

#include "cluster/fusion.hpp"

#include <algorithm>
#include <charconv>
#include <iterator>

namespace cluster {

std::vector<bool> parse_schedule(std::string_view text) {
  std::vector<bool> out;
  while (!text.empty()) {
    const auto comma = text.find(',');
    std::string_view item = text.substr(0, comma);
    text = comma == std::string_view::npos ? std::string_view{} : text.substr(comma + 1);
    if (item.empty()) throw std::invalid_argument("empty schedule entry");
    bool success;
    if (item.front() == 'S') {
      success = true;
    } else if (item.front() == 'F') {
      success = false;
    } else {
      throw std::invalid_argument("schedule entries must start with S or F");
    }
    std::size_t repeat = 1;
    if (item.size() > 1) {
      if (item[1] != '*') throw std::invalid_argument("expected '*' after schedule symbol");
      const char* first = item.data() + 2;
      const char* last = item.data() + item.size();
      auto [ptr, ec] = std::from_chars(first, last, repeat);
      if (ec != std::errc{} || ptr != last || repeat == 0) throw std::invalid_argument("bad schedule repeat count");
    }
    out.insert(out.end(), repeat, success);
  }
  return out;
}

std::string format_schedule(const std::vector<bool>& schedule) {
  std::string out;
  for (bool s : schedule) {
    if (!out.empty()) out += ',';
    out += s ? 'S' : 'F';
  }
  return out;
}

OutcomeSource::OutcomeSource(RngStream rng, std::vector<bool> forced, double success_probability)
    : rng_(rng), forced_(std::move(forced)), p_(success_probability) {
  if (!(p_ > 0.0 && p_ <= 1.0)) throw std::invalid_argument("success probability must lie in (0, 1]");
}

bool OutcomeSource::draw_success() {
  const bool drawn = rng_.bernoulli(p_);
  ++draws_;
  if (next_forced_ < forced_.size()) return forced_[next_forced_++];
  return drawn;
}

void check_fusion_targets(const GraphState& g, VertexId a, VertexId b, FusionRule rule) {
  if (a == b) throw RewriteError("fusion needs two distinct qubits");
  if (!g.has_vertex(a) || !g.has_vertex(b)) throw RewriteError("no such vertex");
  if (g.has_edge(a, b)) throw RewriteError("fusion targets are adjacent");
  if (rule == FusionRule::leaf && (g.degree(a) > 1 || g.degree(b) > 1)) {
    throw RewriteError("unsupported fusion target");
  }
}

FusionResult type1_fuse(GraphState g, VertexId a, VertexId b, bool success, FusionRule rule) {
  check_fusion_targets(g, a, b, rule);
  FusionResult out;
  out.delta.fusion_attempts = 1;
  if (!success) {
    out.delta.bonds_consumed = g.degree(a) + g.degree(b);
    out.delta.qubits_consumed = 2;
    g.remove_vertex(a);
    g.remove_vertex(b);
    out.graph = std::move(g);
    return out;
  }
  const VertexId c = g.max_vertex() + 1;
  std::vector<VertexId> merged;
  const auto& na = g.neighbors(a);
  const auto& nb = g.neighbors(b);
  std::set_symmetric_difference(na.begin(), na.end(), nb.begin(), nb.end(), std::back_inserter(merged));
  g.remove_vertex(a);
  g.remove_vertex(b);
  g.add_vertex(c);
  for (VertexId u : merged) g.add_edge(c, u);
  out.delta.qubits_consumed = 1;
  out.delta.fusion_successes = 1;
  out.outcome.merged = c;
  out.graph = std::move(g);
  return out;
}

FusionResult type1_fuse(GraphState g, VertexId a, VertexId b, OutcomeSource& source, FusionRule rule) {
  // Validate before consuming randomness so a rejected call leaves the stream untouched.
  check_fusion_targets(g, a, b, rule);
  const bool success = source.draw_success();
  return type1_fuse(std::move(g), a, b, success, rule);
}

GraphState merge_disjoint(const GraphState& a, const GraphState& b) {
  if (a.empty()) return b;
  GraphState out = a;
  for (VertexId v : b.vertices()) {
    if (out.has_vertex(v)) throw std::invalid_argument("vertex id collision " + std::to_string(v));
    out.add_vertex(v);
  }
  for (auto [u, v] : b.edges()) out.add_edge(u, v);
  return out;
}

}  // namespace cluster
