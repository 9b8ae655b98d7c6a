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

#include "cluster/graph_io.hpp"

namespace cluster {
namespace {

OutcomeSource forced(std::string_view schedule) { return OutcomeSource::forced_only(parse_schedule(schedule)); }

TEST(GraphJson, ExactBytes) {
  LocalFrame f;
  f.set(2, *Clifford1::from_label("H"));
  EXPECT_EQ(graph_to_json(GraphState::path(1, 3), f), R"({"vertices":[1,2,3],"edges":[[1,2],[2,3]],"frame":{"2":"H"}})");
  EXPECT_EQ(graph_to_json(GraphState{}), R"({"vertices":[],"edges":[],"frame":{}})");
}

TEST(GraphJson, RoundTrip) {
  LocalFrame f;
  f.set(4, *Clifford1::from_label("S"));
  const GraphState g = GraphState::from_edges({1, 4, 9}, {{1, 9}, {4, 9}});
  const FramedGraph back = graph_from_json(graph_to_json(g, f));
  EXPECT_EQ(back.graph, g);
  EXPECT_EQ(back.frame, f);
}

TEST(GraphJson, AcceptsWhitespaceAndMissingFrame) {
  const FramedGraph g = graph_from_json("{\n  \"vertices\": [1, 2],\n  \"edges\": [[2, 1]]\n}\n");
  EXPECT_EQ(g.graph, GraphState::path(1, 2));
  EXPECT_TRUE(g.frame.is_identity());
}

TEST(GraphJson, SyntaxErrorCarriesPosition) {
  try {
    graph_from_json("{\n  \"vertices\": [1,,2]\n}");
    FAIL() << "expected ParseError";
  } catch (const ParseError& e) {
    EXPECT_EQ(e.line(), 2u);
    EXPECT_GT(e.column(), 0u);
  }
}

TEST(GraphJson, SemanticErrors) {
  EXPECT_THROW(graph_from_json(R"({"vertices":[1],"edges":[[1,2]]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"vertices":[1,2],"edges":[[1,1]]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"vertices":[1],"edges":[],"frame":{"1":"Q"}})"), ParseError);
  EXPECT_THROW(graph_from_json(R"({"edges":[]})"), ParseError);
  EXPECT_THROW(graph_from_json(R"([1,2])"), ParseError);
}

TEST(LedgerJson, ExactBytes) {
  EXPECT_EQ(ledger_to_json(CostLedger{4, 3, 2, 1}),
            R"({"bonds_consumed":4,"qubits_consumed":3,"fusion_attempts":2,"fusion_successes":1})");
}

TEST(Dot, ExactBytes) {
  LocalFrame f;
  f.set(3, *Clifford1::from_label("S"));
  EXPECT_EQ(graph_to_dot(GraphState::path(1, 3), f),
            "graph cluster {\n"
            "  1 [label=\"1\"];\n"
            "  2 [label=\"2\"];\n"
            "  3 [label=\"3\", xlabel=\"S\"];\n"
            "  1 -- 2;\n"
            "  2 -- 3;\n"
            "}\n");
}

TEST(ResultJson, RoundTripIsByteIdentical) {
  auto src = forced("F,S");
  const RecipeResult h = build_H(GraphState::path(1, 8), GraphState::path(11, 8), src);
  const std::string text = result_to_json(h);
  const RecipeResult back = result_from_json(text);
  EXPECT_EQ(back.recipe, h.recipe);
  EXPECT_EQ(back.graph, h.graph);
  EXPECT_EQ(back.frame, h.frame);
  EXPECT_EQ(back.ledger, h.ledger);
  EXPECT_EQ(back.trace, h.trace);
  EXPECT_EQ(result_to_json(back), text);
}

TEST(ResultJson, CarriesEveryStepKind) {
  auto src = forced("S");
  const RecipeResult ring = build_ring8(GraphState::path(1, 9), src);
  const RecipeResult back = result_from_json(result_to_json(ring));
  EXPECT_EQ(back.trace, ring.trace);
  EXPECT_EQ(back.frame, ring.frame);
}

TEST(ResultJson, Rejects) {
  EXPECT_THROW(result_from_json("{"), ParseError);
  EXPECT_THROW(result_from_json(R"({"recipe":"H"})"), ParseError);
  auto src = forced("S");
  std::string text = result_to_json(build_H(GraphState::path(1, 6), GraphState::path(11, 6), src));
  const auto pos = text.find("\"op\":\"fuse\"");
  ASSERT_NE(pos, std::string::npos);
  text.replace(pos, 11, "\"op\":\"warp\"");
  EXPECT_THROW(result_from_json(text), ParseError);
}

}  // namespace
}  // namespace cluster
