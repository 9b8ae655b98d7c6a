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

#include "cluster/cli.hpp"

#include <algorithm>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "cluster/graph_io.hpp"
#include "cluster/montecarlo.hpp"
#include "cluster/recipes.hpp"
#include "cluster/verify.hpp"

namespace cluster {
namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RecipeEntry {
  std::string name;
  std::vector<std::size_t> default_chains;
  std::function<RecipeResult(const std::vector<GraphState>&, OutcomeSource&, std::size_t rungs)> run;
};

void need_chains(const std::vector<GraphState>& chains, std::size_t n, const std::string& recipe) {
  if (chains.size() != n) {
    throw UsageError("recipe " + recipe + " takes " + std::to_string(n) + " chain" + (n == 1 ? "" : "s"));
  }
}

Fig4Pair fig4_pair(const std::vector<GraphState>& chains, OutcomeSource& src) {
  return fuse_fig4_pair(build_fig4b(chains[0]), build_fig4b(chains[1]), src);
}

const std::vector<RecipeEntry>& recipes() {
  static const std::vector<RecipeEntry> entries = {
      {"L", {6}, [](const auto& c, auto&, std::size_t) { need_chains(c, 1, "L"); return build_L(c[0]); }},
      {"cross", {7}, [](const auto& c, auto&, std::size_t) { need_chains(c, 1, "cross"); return build_cross(c[0]); }},
      {"H", {6, 6}, [](const auto& c, auto& src, std::size_t) {
         need_chains(c, 2, "H");
         return build_H(c[0], c[1], src);
       }},
      {"ladder", {20, 20}, [](const auto& c, auto& src, std::size_t rungs) {
         need_chains(c, 2, "ladder");
         return grow_ladder(build_H(c[0], c[1], src), rungs, src);
       }},
      {"depth", {12, 12, 12}, [](const auto& c, auto& src, std::size_t) {
         need_chains(c, 3, "depth");
         RecipeResult h = build_H(c[0], c[1], src);
         // The rung took the next free id, so the third chain starts above it.
         const VertexId first = std::max(h.graph.max_vertex(), c[1].max_vertex()) + 1;
         return grow_depth(std::move(h), GraphState::path(first, c[2].num_vertices()), src);
       }},
      {"fig4b", {7}, [](const auto& c, auto&, std::size_t) { need_chains(c, 1, "fig4b"); return build_fig4b(c[0]); }},
      {"fig4c", {7, 7}, [](const auto& c, auto& src, std::size_t) {
         need_chains(c, 2, "fig4c");
         return fig4_pair(c, src).result;
       }},
      {"fig4e", {7, 7}, [](const auto& c, auto& src, std::size_t) {
         need_chains(c, 2, "fig4e");
         Fig4Pair p = fig4_pair(c, src);
         return p.stage == Fig4Stage::second_failed ? extend_fig4e(p.result, src) : std::move(p.result);
       }},
      {"fig4f", {10}, [](const auto& c, auto&, std::size_t) { need_chains(c, 1, "fig4f"); return build_fig4f(c[0]); }},
      {"ring8", {9}, [](const auto& c, auto& src, std::size_t) { need_chains(c, 1, "ring8"); return build_ring8(c[0], src); }},
      {"salvage", {7, 7}, [](const auto& c, auto& src, std::size_t) {
         need_chains(c, 2, "salvage");
         Fig4Pair p = fig4_pair(c, src);
         return p.stage == Fig4Stage::first_failed ? salvage_first_fusion(p.result, src) : std::move(p.result);
       }},
      {"nodeless-rung", {6, 6}, [](const auto& c, auto& src, std::size_t) {
         need_chains(c, 2, "nodeless-rung");
         RecipeResult h = build_H(c[0], c[1], src);
         const VertexId rung = h.layout.rungs.at(0);
         return nodeless_rung(h, rung);
       }},
  };
  return entries;
}

std::uint64_t default_seed() {
  const char* env = std::getenv(kSeedEnvironmentVariable);
  if (env == nullptr || *env == '\0') return 0;
  char* end = nullptr;
  const unsigned long long v = std::strtoull(env, &end, 10);
  if (*end != '\0') throw UsageError(std::string(kSeedEnvironmentVariable) + " is not an unsigned integer");
  return v;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageError("cannot read " + path);
  return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
}

// Consecutive labels: chain i starts one past the last id of chain i-1.
std::vector<GraphState> make_chains(const std::vector<std::size_t>& lengths) {
  std::vector<GraphState> out;
  VertexId next = 1;
  for (std::size_t len : lengths) {
    if (len == 0) throw UsageError("chain lengths must be positive");
    out.push_back(GraphState::path(next, len));
    next += static_cast<VertexId>(len);
  }
  return out;
}

std::string result_table(const RecipeResult& r) {
  std::ostringstream os;
  auto row = [&](std::string_view k, const std::string& v) { os << k << std::string(18 - k.size(), ' ') << v << '\n'; };
  row("recipe", r.recipe);
  std::string verts, edges, frame;
  for (VertexId v : r.graph.vertices()) verts += (verts.empty() ? "" : " ") + std::to_string(v);
  for (auto [u, v] : r.graph.edges()) edges += (edges.empty() ? "" : " ") + std::to_string(u) + "-" + std::to_string(v);
  for (const auto& [v, c] : r.frame.entries()) {
    frame += (frame.empty() ? "" : " ") + std::to_string(v) + ":" + std::string(c.label());
  }
  row("vertices", verts);
  row("edges", edges);
  row("frame", frame);
  row("bonds_consumed", std::to_string(r.ledger.bonds_consumed));
  row("qubits_consumed", std::to_string(r.ledger.qubits_consumed));
  row("fusion_attempts", std::to_string(r.ledger.fusion_attempts));
  row("fusion_successes", std::to_string(r.ledger.fusion_successes));
  row("steps", std::to_string(r.trace.size()));
  return os.str();
}

void emit(std::ostream& out, const RecipeResult& r, const std::string& format) {
  out << (format == "table" ? result_table(r) : result_to_json(r) + "\n");
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Photonic cluster-state construction toolkit"};
  app.name("cluster");
  app.require_subcommand(1, 1);

  std::vector<std::string> recipe_names;
  for (const auto& r : recipes()) recipe_names.push_back(r.name);

  // build
  std::string recipe, force, build_format = "json";
  std::vector<std::size_t> chains;
  std::optional<std::uint64_t> seed;
  std::size_t rungs = 1;
  CLI::App* build = app.add_subcommand("build", "Run a construction recipe");
  build->add_option("recipe", recipe, "Recipe name")->required()->check(CLI::IsMember(recipe_names));
  build->add_option("--chain,--chains", chains, "Chain lengths, comma separated")->delimiter(',');
  build->add_option("--seed", seed, "RNG seed (default from CLUSTER_SEED, else 0)");
  build->add_option("--force", force, "Forced fusion outcomes, e.g. F*3,S");
  build->add_option("--rungs", rungs, "Extra rungs for the ladder recipe")->check(CLI::PositiveNumber);
  build->add_option("--format", build_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  // verify
  std::string check, verify_format = "table";
  CheckOptions copts;
  CLI::App* verify = app.add_subcommand("verify", "Run an equivalence check suite");
  verify->add_option("check", check, "Check name")->required();
  verify->add_option("--n", copts.n, "Maximum graph size")->check(CLI::Range(2, 14));
  verify->add_option("--cases", copts.cases, "Random cases")->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed, "RNG seed");
  verify->add_option("--format", verify_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  // mc
  std::string model_name = "ours", mc_format = "table", csv_path;
  std::uint64_t trials = 100000;
  unsigned threads = 0;
  std::optional<double> p;
  std::optional<std::uint64_t> lcost, fail;
  bool graph_level = false;
  std::vector<std::size_t> mc_chains;
  CLI::App* mc = app.add_subcommand("mc", "Monte Carlo estimate of the rung cost");
  mc->add_option("model", model_name, "ours or type2")->check(CLI::IsMember({"ours", "type2"}));
  mc->add_option("--trials", trials, "Number of trials")->check(CLI::PositiveNumber);
  mc->add_option("--seed", seed, "RNG seed");
  mc->add_option("--threads", threads, "Worker threads (0 = all cores)");
  mc->add_option("--p", p, "Fusion success probability");
  mc->add_option("--lcost", lcost, "Bonds per L-shape");
  mc->add_option("--fail", fail, "Bonds lost per failed fusion");
  mc->add_flag("--graph", graph_level, "Drive the graph-level H recipe instead of the abstract process");
  mc->add_option("--chains", mc_chains, "Chain lengths for --graph")->delimiter(',');
  mc->add_option("--csv", csv_path, "Write the attempt histogram as CSV to this path");
  mc->add_option("--format", mc_format, "json or table")->check(CLI::IsMember({"json", "table"}));

  // export
  std::string input_path, export_format = "json", output_path;
  CLI::App* exp = app.add_subcommand("export", "Convert a RecipeResult document");
  exp->add_option("input", input_path, "RecipeResult JSON")->required();
  exp->add_option("--format", export_format, "dot or json")->check(CLI::IsMember({"dot", "json"}));
  exp->add_option("-o,--output", output_path, "Output file (default standard output)");

  // replay
  std::string replay_path;
  CLI::App* rep = app.add_subcommand("replay", "Re-execute a recorded trace");
  rep->add_option("input", replay_path, "RecipeResult JSON")->required();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    app.exit(e, out, err);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitUsage;
  }

  try {
    const std::uint64_t s = seed ? *seed : default_seed();

    if (*build) {
      const auto& entry = *std::find_if(recipes().begin(), recipes().end(), [&](const auto& r) { return r.name == recipe; });
      OutcomeSource src(RngStream(s), force.empty() ? std::vector<bool>{} : parse_schedule(force));
      const auto graphs = make_chains(chains.empty() ? entry.default_chains : chains);
      try {
        emit(out, entry.run(graphs, src, rungs), build_format);
      } catch (const ResourceExhausted& e) {
        err << "resource exhausted: " << e.what() << '\n';
        emit(out, e.partial(), build_format);
        return kExitExhausted;
      }
      return kExitOk;
    }

    if (*verify) {
      const auto& names = check_names();
      if (std::find(names.begin(), names.end(), check) == names.end()) {
        err << "unknown check: " << check << "\navailable:";
        for (const auto& n : names) err << ' ' << n;
        err << '\n';
        return kExitUsage;
      }
      copts.seed = s;
      const CheckReport report = run_check(check, copts);
      out << (verify_format == "json" ? format_json(report) + "\n" : format_table(report));
      return report.pass() ? kExitOk : kExitUsage;
    }

    if (*mc) {
      CostModel m = model_name == "type2" ? CostModel::type2() : CostModel::ours();
      if (p) m.success_probability = *p;
      if (lcost) m.l_build_cost = *lcost;
      if (fail) m.failure_penalty = *fail;
      m.validate();
      TrialStats stats;
      if (graph_level) {
        if (m.l_build_cost != 2 || m.failure_penalty != 2) {
          throw UsageError("--graph runs the box-rewrite recipe, whose L-shape and failure costs are fixed at 2");
        }
        RecipeTrialInputs in;
        in.success_probability = m.success_probability;
        if (!mc_chains.empty()) {
          if (mc_chains.size() != 2) throw UsageError("--chains takes two lengths");
          in.chain_a = mc_chains[0];
          in.chain_b = mc_chains[1];
        }
        stats = run_recipe_trials(in, trials, s, threads);
      } else {
        if (!mc_chains.empty()) throw UsageError("--chains requires --graph");
        stats = run_trials(m, trials, s, threads);
      }
      const double cf = closed_form_expected_cost(m);
      out << (mc_format == "json" ? stats_to_json(stats, cf) + "\n" : stats_to_table(stats, cf));
      if (!csv_path.empty()) {
        std::ofstream csv(csv_path, std::ios::binary);
        if (!csv) throw UsageError("cannot write " + csv_path);
        csv << histogram_csv(stats);
      }
      return kExitOk;
    }

    if (*exp) {
      const RecipeResult r = result_from_json(read_file(input_path));
      const std::string text = export_format == "dot" ? graph_to_dot(r.graph, r.frame) : result_to_json(r) + "\n";
      if (output_path.empty()) {
        out << text;
      } else {
        std::ofstream f(output_path, std::ios::binary);
        if (!f) throw UsageError("cannot write " + output_path);
        f << text;
      }
      return kExitOk;
    }

    if (*rep) {
      const RecipeResult recorded = result_from_json(read_file(replay_path));
      const RecipeResult again = replay(recorded.recipe, recorded.trace);
      if (!(again.graph == recorded.graph) || !(again.frame == recorded.frame) || !(again.ledger == recorded.ledger)) {
        err << "replay does not reproduce the recorded result\n";
        return kExitUsage;
      }
      out << result_to_json(again) << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cluster
