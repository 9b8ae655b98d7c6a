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

#include <stdexcept>
#include <string>
#include <string_view>

#include "cluster/fusion.hpp"
#include "cluster/graph_state.hpp"
#include "cluster/recipes.hpp"

namespace cluster {

/// Malformed JSON or a document that does not describe a valid object.
/// For syntax errors, line and column are 1-based.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t line = 0, std::size_t column = 0)
      : std::runtime_error(what), line_(line), column_(column) {}
  std::size_t line() const { return line_; }
  std::size_t column() const { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

/// {"vertices":[...],"edges":[[u,v],...],"frame":{"<id>":"<label>"}} with no
/// whitespace, vertices ascending and edges lexicographic.
std::string graph_to_json(const GraphState& g, const LocalFrame& frame = {});
struct FramedGraph {
  GraphState graph;
  LocalFrame frame;
};
FramedGraph graph_from_json(std::string_view text);

std::string ledger_to_json(const CostLedger& ledger);

/// {"recipe":...,"graph":{...},"ledger":{...},"trace":[...]}.
std::string result_to_json(const RecipeResult& r);
RecipeResult result_from_json(std::string_view text);

/// `graph cluster {` with one node line per vertex (frame labels as xlabel)
/// and one `u -- v;` line per edge.
std::string graph_to_dot(const GraphState& g, const LocalFrame& frame = {});

}  // namespace cluster
