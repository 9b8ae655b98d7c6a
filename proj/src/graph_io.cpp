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

#include "cluster/graph_io.hpp"

#include <cctype>
#include <sstream>

#include "json.hpp"

namespace cluster {
namespace {

using Json = nlohmann::ordered_json;

Json graph_json(const GraphState& g, const LocalFrame& frame) {
  Json verts = Json::array();
  for (VertexId v : g.vertices()) verts.push_back(v);
  Json edges = Json::array();
  for (auto [u, v] : g.edges()) edges.push_back({u, v});
  Json fr = Json::object();
  for (const auto& [v, c] : frame.entries()) fr[std::to_string(v)] = std::string(c.label());
  return Json{{"vertices", std::move(verts)}, {"edges", std::move(edges)}, {"frame", std::move(fr)}};
}

Json ledger_json(const CostLedger& l) {
  return Json{{"bonds_consumed", l.bonds_consumed},
              {"qubits_consumed", l.qubits_consumed},
              {"fusion_attempts", l.fusion_attempts},
              {"fusion_successes", l.fusion_successes}};
}

Json frame_json(const LocalFrame& f) {
  Json out = Json::object();
  for (const auto& [v, c] : f.entries()) out[std::to_string(v)] = std::string(c.label());
  return out;
}

Json step_json(const TraceStep& s) {
  Json j;
  j["op"] = std::string(step_name(s.kind));
  switch (s.kind) {
    case StepKind::input: j["graph"] = graph_json(s.input, {}); break;
    case StepKind::chain_to_box: j["segment"] = s.vertices; break;
    case StepKind::measure_z:
    case StepKind::measure_y:
    case StepKind::discard: j["vertex"] = s.vertices.at(0); break;
    case StepKind::fuse:
      j["a"] = s.vertices.at(0);
      j["b"] = s.vertices.at(1);
      j["rule"] = s.rule == FusionRule::leaf ? "leaf" : "generalized";
      j["outcome"] = s.success ? "S" : "F";
      if (s.merged) j["merged"] = *s.merged;
      break;
    case StepKind::relabel: {
      Json m = Json::object();
      for (auto [from, to] : s.mapping) m[std::to_string(from)] = to;
      j["map"] = std::move(m);
      break;
    }
    case StepKind::local_unitary: j["gates"] = frame_json(s.gates); break;
  }
  j["delta"] = ledger_json(s.delta);
  return j;
}

// Wraps nlohmann type/key errors so every failure surfaces as ParseError.
template <typename F>
auto checked(F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw ParseError(std::string("invalid document: ") + e.what());
  }
}

std::pair<std::size_t, std::size_t> line_column(std::string_view text, std::size_t byte) {
  std::size_t line = 1, col = 1;
  for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
    if (text[i] == '\n') {
      ++line;
      col = 1;
    } else {
      ++col;
    }
  }
  return {line, col};
}

Json parse(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    // e.byte is the 1-based offset of the offending character.
    auto [line, col] = line_column(text, e.byte == 0 ? 0 : e.byte - 1);
    throw ParseError("JSON syntax error at line " + std::to_string(line) + ", column " + std::to_string(col), line,
                     col);
  }
}

VertexId vertex_key(const std::string& key) {
  std::size_t used = 0;
  unsigned long v = 0;
  try {
    v = std::stoul(key, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (used != key.size() || key.empty() || !std::isdigit(static_cast<unsigned char>(key[0]))) {
    throw ParseError("vertex key is not an integer: " + key);
  }
  return static_cast<VertexId>(v);
}

LocalFrame frame_from(const Json& j) {
  LocalFrame f;
  for (const auto& [key, val] : j.items()) {
    auto c = Clifford1::from_label(val.get<std::string>());
    if (!c) throw ParseError("unknown Clifford label: " + val.get<std::string>());
    f.set(vertex_key(key), *c);
  }
  return f;
}

FramedGraph graph_from(const Json& j) {
  std::vector<VertexId> verts = j.at("vertices").get<std::vector<VertexId>>();
  std::vector<Edge> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw ParseError("edge must be a pair");
    edges.emplace_back(e[0].get<VertexId>(), e[1].get<VertexId>());
  }
  FramedGraph out{GraphState::from_edges(verts, edges), {}};
  if (j.contains("frame")) out.frame = frame_from(j.at("frame"));
  for (const auto& [v, c] : out.frame.entries()) {
    if (!out.graph.has_vertex(v)) throw ParseError("frame entry for unknown vertex " + std::to_string(v));
  }
  return out;
}

CostLedger ledger_from(const Json& j) {
  CostLedger l;
  l.bonds_consumed = j.at("bonds_consumed").get<std::size_t>();
  l.qubits_consumed = j.at("qubits_consumed").get<std::size_t>();
  l.fusion_attempts = j.at("fusion_attempts").get<std::size_t>();
  l.fusion_successes = j.at("fusion_successes").get<std::size_t>();
  return l;
}

TraceStep step_from(const Json& j) {
  TraceStep s;
  const std::string op = j.at("op").get<std::string>();
  auto kind = step_from_name(op);
  if (!kind) throw ParseError("unknown trace op: " + op);
  s.kind = *kind;
  switch (s.kind) {
    case StepKind::input: {
      FramedGraph fg = graph_from(j.at("graph"));
      if (!fg.frame.is_identity()) throw ParseError("input graphs carry no frame");
      s.input = std::move(fg.graph);
      break;
    }
    case StepKind::chain_to_box: s.vertices = j.at("segment").get<std::vector<VertexId>>(); break;
    case StepKind::measure_z:
    case StepKind::measure_y:
    case StepKind::discard: s.vertices = {j.at("vertex").get<VertexId>()}; break;
    case StepKind::fuse: {
      s.vertices = {j.at("a").get<VertexId>(), j.at("b").get<VertexId>()};
      const std::string rule = j.at("rule").get<std::string>();
      if (rule == "leaf") {
        s.rule = FusionRule::leaf;
      } else if (rule == "generalized") {
        s.rule = FusionRule::generalized;
      } else {
        throw ParseError("unknown fusion rule: " + rule);
      }
      const std::string outcome = j.at("outcome").get<std::string>();
      if (outcome != "S" && outcome != "F") throw ParseError("fusion outcome must be S or F");
      s.success = outcome == "S";
      if (j.contains("merged")) s.merged = j.at("merged").get<VertexId>();
      break;
    }
    case StepKind::relabel:
      for (const auto& [key, val] : j.at("map").items()) s.mapping[vertex_key(key)] = val.get<VertexId>();
      break;
    case StepKind::local_unitary: s.gates = frame_from(j.at("gates")); break;
  }
  s.delta = ledger_from(j.at("delta"));
  return s;
}

}  // namespace

std::string graph_to_json(const GraphState& g, const LocalFrame& frame) { return graph_json(g, frame).dump(); }

FramedGraph graph_from_json(std::string_view text) {
  const Json j = parse(text);
  return checked([&] { return graph_from(j); });
}

std::string ledger_to_json(const CostLedger& ledger) { return ledger_json(ledger).dump(); }

std::string result_to_json(const RecipeResult& r) {
  Json trace = Json::array();
  for (const TraceStep& s : r.trace) trace.push_back(step_json(s));
  Json j{{"recipe", r.recipe},
         {"graph", graph_json(r.graph, r.frame)},
         {"ledger", ledger_json(r.ledger)},
         {"trace", std::move(trace)}};
  return j.dump();
}

RecipeResult result_from_json(std::string_view text) {
  const Json j = parse(text);
  return checked([&] {
    RecipeResult r;
    r.recipe = j.at("recipe").get<std::string>();
    FramedGraph fg = graph_from(j.at("graph"));
    r.graph = std::move(fg.graph);
    r.frame = std::move(fg.frame);
    r.ledger = ledger_from(j.at("ledger"));
    for (const auto& s : j.at("trace")) r.trace.push_back(step_from(s));
    return r;
  });
}

std::string graph_to_dot(const GraphState& g, const LocalFrame& frame) {
  std::ostringstream os;
  os << "graph cluster {\n";
  for (VertexId v : g.vertices()) {
    os << "  " << v << " [label=\"" << v << "\"";
    const Clifford1 c = frame.at(v);
    if (!c.is_identity()) os << ", xlabel=\"" << c.label() << "\"";
    os << "];\n";
  }
  for (auto [u, v] : g.edges()) os << "  " << u << " -- " << v << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace cluster
