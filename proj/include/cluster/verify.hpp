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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cluster/graph_state.hpp"
#include "cluster/recipes.hpp"
#include "cluster/rng.hpp"
#include "cluster/tableau.hpp"

namespace cluster {

/// Outcome of executing a trace as a physical circuit, once on the
/// stabilizer tableau and (for small enough systems) once on the
/// statevector oracle, against the graph + frame the rewrite rules predict.
///
/// Every qubit that ever entered is simulated. Qubits that left the cluster
/// stay in their post-measurement eigenstate; the second qubit of a
/// successful fusion is left in |0⟩.
struct PhysicalCheck {
  std::size_t qubits = 0;
  bool tableau_agrees = false;
  /// to_graph of the simulated tableau reproduces the predicted graph and frame exactly.
  bool graph_form_agrees = false;
  std::optional<bool> oracle_agrees;
  std::optional<double> oracle_overlap;

  bool pass() const { return tableau_agrees && graph_form_agrees && oracle_agrees.value_or(true); }
};

PhysicalCheck simulate_trace(const std::vector<TraceStep>& steps, bool use_oracle = true);

/// Erdős–Rényi graph on vertices 1..n.
GraphState random_graph(std::size_t n, double edge_probability, RngStream& rng);

struct CheckRow {
  std::string assertion;
  bool pass = false;
  std::string detail;
};

struct CheckReport {
  std::string check;
  std::vector<CheckRow> rows;
  bool pass() const;
};

struct CheckOptions {
  std::size_t n = 8;
  std::size_t cases = 100;
  std::uint64_t seed = 1;
};

const std::vector<std::string>& check_names();
/// Throws std::invalid_argument for an unregistered name.
CheckReport run_check(std::string_view name, const CheckOptions& options = {});

/// Fixed-width table, one row per assertion, then a summary line.
std::string format_table(const CheckReport& report);
std::string format_json(const CheckReport& report);

}  // namespace cluster
