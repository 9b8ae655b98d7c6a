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

#include "cluster/verify.hpp"

#include <algorithm>
#include <cstdio>
#include <functional>
#include <sstream>

#include "cluster/fusion.hpp"
#include "cluster/statevector.hpp"
#include "json.hpp"

namespace cluster {
namespace {

const Clifford1 kH = Clifford1::from_gate(Gate1::H);
const Clifford1 kS = Clifford1::from_gate(Gate1::S);

oracle::Basis basis_of(Pauli p) {
  switch (p) {
    case Pauli::X: return oracle::Basis::X;
    case Pauli::Y: return oracle::Basis::Y;
    case Pauli::Z: return oracle::Basis::Z;
    case Pauli::I: break;
  }
  throw std::logic_error("identity has no measurement basis");
}

// An isolated qubit's frame is fixed only up to the stabilizer of |+⟩, so
// those are compared by the state they prepare.
bool frames_match(const GraphState& g, const LocalFrame& a, const LocalFrame& b) {
  for (VertexId v : g.vertices()) {
    const Clifford1 fa = a.at(v), fb = b.at(v);
    if (g.degree(v) == 0 ? fa.conjugate(Pauli::X) != fb.conjugate(Pauli::X) : fa != fb) return false;
  }
  return true;
}

class PhysicalSim {
 public:
  PhysicalSim(std::size_t n, bool use_oracle) : n_(n), tableau_(n), dead_(n, kH), rb_("verify") {
    if (use_oracle && n <= oracle::kMaxQubits) state_.emplace(n);
  }

  void run(const TraceStep& s) {
    switch (s.kind) {
      case StepKind::input: input(s.input); break;
      case StepKind::chain_to_box: {
        const std::array<VertexId, 4> seg = {s.vertices.at(0), s.vertices.at(1), s.vertices.at(2), s.vertices.at(3)};
        for (VertexId v : {seg[1], seg[2]}) {
          const Clifford1 f = rb_.result().frame.at(v);
          gate(qubit(v), f * kH * f.inverse());
        }
        rb_.chain_to_box(seg);
        break;
      }
      case StepKind::measure_z: measure(s.vertices.at(0), Pauli::Z); break;
      case StepKind::measure_y: measure(s.vertices.at(0), Pauli::Y); break;
      case StepKind::fuse: fuse(s); break;
      case StepKind::relabel: {
        std::map<VertexId, std::size_t> moved;
        for (auto [v, q] : qubit_) {
          auto it = s.mapping.find(v);
          moved[it == s.mapping.end() ? v : it->second] = q;
        }
        rb_.relabel(s.mapping);
        qubit_ = std::move(moved);
        break;
      }
      case StepKind::local_unitary:
        for (const auto& [v, c] : s.gates.entries()) gate(qubit(v), c);
        rb_.local_unitary(s.gates);
        break;
      case StepKind::discard: {
        const VertexId v = s.vertices.at(0);
        const std::size_t q = qubit(v);
        const Clifford1 f = rb_.result().frame.at(v);
        rb_.discard(v);
        dead_[q] = f;
        qubit_.erase(v);
        break;
      }
    }
  }

  PhysicalCheck compare() const {
    // Reference state on qubit ids: predicted cluster plus parked qubits.
    GraphState ref;
    LocalFrame frame;
    for (std::size_t q = 0; q < n_; ++q) ref.add_vertex(static_cast<VertexId>(q));
    std::vector<bool> alive(n_, false);
    for (auto [v, q] : qubit_) {
      alive[q] = true;
      frame.set(static_cast<VertexId>(q), rb_.result().frame.at(v));
    }
    for (auto [u, v] : rb_.graph().edges()) {
      ref.add_edge(static_cast<VertexId>(qubit_.at(u)), static_cast<VertexId>(qubit_.at(v)));
    }
    for (std::size_t q = 0; q < n_; ++q) {
      if (!alive[q]) frame.set(static_cast<VertexId>(q), dead_[q]);
    }

    PhysicalCheck out;
    out.qubits = n_;
    out.tableau_agrees = canonical_equal(tableau_, from_graph(ref, frame));
    const GraphForm form = to_graph(tableau_);
    out.graph_form_agrees = form.graph == ref && frames_match(ref, form.frame, frame);
    if (state_) {
      const auto expected = oracle::framed_graph_state(ref, frame);
      out.oracle_overlap = std::abs(state_->amplitudes().dot(expected.amplitudes()));
      out.oracle_agrees = oracle::equal_up_to_global_phase(*state_, expected);
    }
    return out;
  }

 private:
  std::size_t qubit(VertexId v) const {
    auto it = qubit_.find(v);
    if (it == qubit_.end()) throw std::invalid_argument("trace refers to unknown vertex " + std::to_string(v));
    return it->second;
  }

  void gate(std::size_t q, Clifford1 c) {
    tableau_ = apply_local_clifford(std::move(tableau_), c, q);
    if (state_) *state_ = oracle::apply_unitary(std::move(*state_), oracle::clifford_matrix(c), q);
  }

  void two(TwoQubitGate g, std::size_t a, std::size_t b) {
    tableau_ = apply_two_qubit(std::move(tableau_), g, a, b);
    if (state_) *state_ = oracle::apply_unitary(std::move(*state_), oracle::two_qubit_matrix(g), a, b);
  }

  void project(std::size_t q, Pauli p, bool negative) {
    tableau_ = measure_pauli(std::move(tableau_), PauliString::single(n_, q, p), negative).tableau;
    if (state_) *state_ = oracle::project_measure(std::move(*state_), q, basis_of(p), negative).first;
  }

  void input(const GraphState& g) {
    rb_.input(g);
    for (VertexId v : g.vertices()) {
      if (next_ >= n_) throw std::logic_error("qubit budget exceeded");
      qubit_[v] = next_++;
      gate(qubit_[v], kH);
    }
    for (auto [u, v] : g.edges()) two(TwoQubitGate::CZ, qubit_[u], qubit_[v]);
  }

  void measure(VertexId v, Pauli p) {
    const std::size_t q = qubit(v);
    const Clifford1 f = rb_.result().frame.at(v);
    // The +1 branch of P on the graph side is the +1 branch of F P F† physically.
    const SignedPauli observable = f.conjugate(p);
    if (p == Pauli::Z) {
      rb_.measure_z(v);
    } else {
      rb_.measure_y(v);
    }
    project(q, observable.pauli, observable.negative);
    dead_[q] = f * (p == Pauli::Z ? kH : kS);
    qubit_.erase(v);
  }

  void fuse(const TraceStep& s) {
    const VertexId a = s.vertices.at(0), b = s.vertices.at(1);
    const std::size_t qa = qubit(a), qb = qubit(b);
    const FusionOutcome out = rb_.fuse_forced(a, b, s.success, s.rule);
    if (out.success()) {
      // Parity projector |0⟩⟨00| + |1⟩⟨11|, with b parked in |0⟩.
      two(TwoQubitGate::CNOT, qa, qb);
      project(qb, Pauli::Z, false);
      qubit_.erase(a);
      qubit_.erase(b);
      qubit_[*out.merged] = qa;
    } else {
      project(qa, Pauli::Z, false);
      project(qb, Pauli::Z, false);
      qubit_.erase(a);
      qubit_.erase(b);
      dead_[qa] = kH;
    }
    dead_[qb] = kH;
  }

  std::size_t n_;
  std::size_t next_ = 0;
  StabilizerTableau tableau_;
  std::optional<oracle::StateVector<double>> state_;
  std::vector<Clifford1> dead_;
  std::map<VertexId, std::size_t> qubit_;
  RecipeBuilder rb_;
};

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

std::string describe(const PhysicalCheck& c) {
  std::string d = "qubits=" + std::to_string(c.qubits) + " tableau=" + (c.tableau_agrees ? "ok" : "MISMATCH");
  if (c.oracle_overlap) d += " overlap=" + fmt("%.12f", *c.oracle_overlap);
  return d;
}

void add(CheckReport& r, std::string assertion, bool pass, std::string detail = {}) {
  r.rows.push_back({std::move(assertion), pass, std::move(detail)});
}

void add_physical(CheckReport& r, const std::string& assertion, const std::vector<TraceStep>& trace) {
  try {
    const PhysicalCheck c = simulate_trace(trace);
    add(r, assertion, c.pass(), describe(c));
  } catch (const std::exception& e) {
    add(r, assertion, false, std::string("error: ") + e.what());
  }
}

GraphState star(std::size_t leaves) {
  GraphState g;
  g.add_vertex(0);
  for (std::size_t i = 1; i <= leaves; ++i) {
    g.add_vertex(static_cast<VertexId>(i));
    g.add_edge(0, static_cast<VertexId>(i));
  }
  return g;
}

std::string edge_list(const GraphState& g) {
  std::string s;
  for (auto [u, v] : g.edges()) s += (s.empty() ? "" : ",") + std::to_string(u) + "-" + std::to_string(v);
  return s;
}

CheckReport check_box_equivalence(const CheckOptions&) {
  CheckReport r{"box-equivalence", {}};
  const GraphState chain = GraphState::path(1, 4);
  const GraphState box = GraphState::from_edges({{1, 3}, {2, 3}, {2, 4}, {1, 4}});
  auto v = oracle::graph_state_vector(chain);
  v = oracle::apply_unitary(std::move(v), oracle::gate_matrix(Gate1::H), 1);
  v = oracle::apply_unitary(std::move(v), oracle::gate_matrix(Gate1::H), 2);
  const double overlap = std::abs(v.amplitudes().dot(oracle::graph_state_vector(box).amplitudes()));
  add(r, "oracle: H2 H3 on 4-chain equals box {13,23,24,14}", overlap >= 1 - 1e-10, "overlap=" + fmt("%.12f", overlap));

  // With the q2/q3 qubits exchanged the same state is the box drawn as 1-2-3-4-1.
  auto swapped = oracle::apply_unitary(v, oracle::two_qubit_matrix(TwoQubitGate::SWAP), 1, 2);
  const GraphState drawn = GraphState::from_edges({{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  const double o2 = std::abs(swapped.amplitudes().dot(oracle::graph_state_vector(drawn).amplitudes()));
  add(r, "oracle: after SWAP(2,3) equals cycle 1-2-3-4-1", o2 >= 1 - 1e-10, "overlap=" + fmt("%.12f", o2));

  StabilizerTableau t = from_graph(chain);
  t = apply_gate(std::move(t), Gate1::H, 1);
  t = apply_gate(std::move(t), Gate1::H, 2);
  add(r, "tableau: H2 H3 on 4-chain canonical_equal box", canonical_equal(t, from_graph(box)));

  const Rewrite rw = chain_to_box(chain, {1, 2, 3, 4});
  add(r, "graph rule: chain_to_box edges", rw.graph == box, edge_list(rw.graph));
  RecipeBuilder rb("box");
  rb.input(chain);
  rb.chain_to_box({1, 2, 3, 4});
  add_physical(r, "physical trace agrees", rb.result().trace);
  return r;
}

CheckReport check_box_on_chain(const CheckOptions&) {
  CheckReport r{"box-on-chain", {}};
  for (std::size_t len = 5; len <= 10; ++len) {
    for (VertexId s = 1; s + 3 <= len; ++s) {
      RecipeBuilder rb("box");
      rb.input(GraphState::path(1, len));
      rb.chain_to_box({s, s + 1, s + 2, s + 3});
      add_physical(r, "chain " + std::to_string(len) + " box at " + std::to_string(s), rb.result().trace);
    }
  }
  return r;
}

CheckReport check_cross(const CheckOptions&) {
  CheckReport r{"cross", {}};
  const RecipeResult c = build_cross(GraphState::path(1, 7));
  add(r, "ledger bonds == 4", c.ledger.bonds_consumed == 4, "bonds=" + std::to_string(c.ledger.bonds_consumed));
  add(r, "isomorphic to 4-star", isomorphic(c.graph, star(4)).has_value(), edge_list(c.graph));
  add_physical(r, "physical trace agrees", c.trace);
  return r;
}

CheckReport check_measurement_rules(const CheckOptions& o) {
  CheckReport r{"measurement-rules", {}};
  RngStream rng(o.seed, 0x6d65);
  std::size_t ok = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < o.cases; ++i) {
    const std::size_t n = 2 + rng.next() % (std::max<std::size_t>(o.n, 2) - 1);
    const GraphState g = random_graph(n, 0.5, rng);
    const VertexId v = 1 + static_cast<VertexId>(rng.next() % n);
    const bool y = (rng.next() & 1) != 0;
    RecipeBuilder rb("measure");
    rb.input(g);
    if (y) {
      rb.measure_y(v);
    } else {
      rb.measure_z(v);
    }
    bool pass = false;
    try {
      const PhysicalCheck c = simulate_trace(rb.result().trace);
      pass = c.pass() && c.graph_form_agrees;
    } catch (const std::exception&) {
    }
    if (pass) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = "case " + std::to_string(i) + (y ? " sigma_y" : " sigma_z") + " on " + std::to_string(v) + " of " +
                      edge_list(g);
    }
  }
  add(r, "graph rule == oracle == tableau+to_graph", ok == o.cases,
      std::to_string(ok) + "/" + std::to_string(o.cases) + (first_failure.empty() ? "" : " first failure " + first_failure));
  return r;
}

CheckReport check_fusion(const CheckOptions&) {
  CheckReport r{"fusion", {}};
  for (std::size_t n = 2; n <= 6; ++n) {
    for (std::size_t m = 2; m <= 6; ++m) {
      for (bool success : {true, false}) {
        RecipeBuilder rb("fuse");
        rb.input(GraphState::path(1, n));
        rb.input(GraphState::path(101, m));
        rb.fuse_forced(static_cast<VertexId>(n), 101, success);
        const GraphState& g = rb.graph();
        const std::string name = std::to_string(n) + "+" + std::to_string(m) + (success ? " S" : " F");
        bool shape = false;
        if (success) {
          auto order = path_order(g);
          shape = order && order->size() == n + m - 1;
        } else {
          const auto ca = connected_component(g, 1), cb = connected_component(g, 101 + static_cast<VertexId>(m) - 1);
          shape = g.num_vertices() == n + m - 2 && ca.size() == n - 1 && cb.size() == m - 1 &&
                  g.num_edges() == (n - 2) + (m - 2);
        }
        add(r, name + " shape", shape, edge_list(g));
        add_physical(r, name + " physical", rb.result().trace);
      }
    }
  }
  return r;
}

CheckReport check_ring(const CheckOptions&) {
  CheckReport r{"ring", {}};
  auto s = OutcomeSource::forced_only({true});
  const RecipeResult ok = build_ring8(GraphState::path(1, 9), s);
  add(r, "success: 8 qubits", ok.graph.num_vertices() == 8, edge_list(ok.graph));
  add_physical(r, "success: physical trace agrees", ok.trace);
  auto f = OutcomeSource::forced_only({false});
  const RecipeResult bad = build_ring8(GraphState::path(1, 9), f);
  add(r, "failure: 7-chain", path_order(bad.graph) && bad.graph.num_vertices() == 7, edge_list(bad.graph));
  add(r, "failure: ledger bonds == 2", bad.ledger.bonds_consumed == 2);
  add_physical(r, "failure: physical trace agrees", bad.trace);
  return r;
}

CheckReport check_h_shape(const CheckOptions&) {
  CheckReport r{"h-shape", {}};
  for (const char* sched : {"S", "F,S"}) {
    auto src = OutcomeSource::forced_only(parse_schedule(sched));
    const RecipeResult h = build_H(GraphState::path(1, 6), GraphState::path(11, 6), src);
    const std::size_t expect = std::string(sched) == "S" ? 4 : 10;
    add(r, std::string("forced ") + sched + ": ledger bonds", h.ledger.bonds_consumed == expect,
        "bonds=" + std::to_string(h.ledger.bonds_consumed));
    add_physical(r, std::string("forced ") + sched + ": physical trace agrees", h.trace);
  }
  return r;
}

CheckReport check_fig4(const CheckOptions&) {
  CheckReport r{"fig4", {}};
  const RecipeResult x = build_fig4b(GraphState::path(1, 7));
  const RecipeResult y = build_fig4b(GraphState::path(21, 7));
  add_physical(r, "4b physical", x.trace);
  struct Path {
    const char* name;
    std::vector<bool> forced;
  };
  for (const Path& p : {Path{"S,S", {true, true}}, Path{"S,F then F,F", {true, false, false, false}},
                        Path{"S,F then S", {true, false, true}}, Path{"S,F then F,S", {true, false, false, true}},
                        Path{"F then salvage S", {false, true}}}) {
    auto src = OutcomeSource::forced_only(p.forced);
    try {
      Fig4Pair pair = fuse_fig4_pair(x, y, src);
      RecipeResult out = std::move(pair.result);
      if (pair.stage == Fig4Stage::second_failed) out = extend_fig4e(out, src);
      if (pair.stage == Fig4Stage::first_failed) out = salvage_first_fusion(out, src);
      add_physical(r, std::string(p.name) + " physical", out.trace);
    } catch (const std::exception& e) {
      add(r, std::string(p.name) + " physical", false, e.what());
    }
  }
  return r;
}

CheckReport check_triple_agreement(const CheckOptions& o) {
  CheckReport r{"triple-agreement", {}};
  RngStream rng(o.seed, 0x7472);
  const std::size_t n = std::max<std::size_t>(o.n, 2);
  std::size_t ok = 0;
  std::string first_failure;
  for (std::size_t i = 0; i < o.cases; ++i) {
    RngStream cr = rng.substream(i);
    RecipeBuilder rb("random");
    rb.input(random_graph(n, 0.4, cr));
    const std::size_t ops = 1 + cr.next() % 4;
    for (std::size_t k = 0; k < ops && rb.graph().num_vertices() > 1; ++k) {
      const auto verts = rb.graph().vertices();
      const VertexId v = verts[cr.next() % verts.size()];
      switch (cr.next() % 3) {
        case 0: rb.measure_z(v); break;
        case 1: rb.measure_y(v); break;
        default: {
          std::vector<Edge> pairs;
          for (VertexId a : verts) {
            for (VertexId b : verts) {
              if (a < b && !rb.graph().has_edge(a, b) && rb.result().frame.at(a).is_identity() &&
                  rb.result().frame.at(b).is_identity()) {
                pairs.emplace_back(a, b);
              }
            }
          }
          if (pairs.empty()) break;
          const Edge e = pairs[cr.next() % pairs.size()];
          rb.fuse_forced(e.first, e.second, (cr.next() & 1) != 0, FusionRule::generalized);
        }
      }
    }
    bool pass = false;
    try {
      pass = simulate_trace(rb.result().trace).pass();
    } catch (const std::exception&) {
    }
    if (pass) {
      ++ok;
    } else if (first_failure.empty()) {
      first_failure = " first failure at case " + std::to_string(i);
    }
  }
  add(r, "graph rules == oracle == tableau", ok == o.cases,
      std::to_string(ok) + "/" + std::to_string(o.cases) + first_failure);
  return r;
}

using CheckFn = std::function<CheckReport(const CheckOptions&)>;

const std::vector<std::pair<std::string, CheckFn>>& registry() {
  static const std::vector<std::pair<std::string, CheckFn>> checks = {
      {"box-equivalence", check_box_equivalence},
      {"box-on-chain", check_box_on_chain},
      {"cross", check_cross},
      {"measurement-rules", check_measurement_rules},
      {"fusion", check_fusion},
      {"h-shape", check_h_shape},
      {"fig4", check_fig4},
      {"ring", check_ring},
      {"triple-agreement", check_triple_agreement},
  };
  return checks;
}

}  // namespace

PhysicalCheck simulate_trace(const std::vector<TraceStep>& steps, bool use_oracle) {
  std::size_t n = 0;
  for (const TraceStep& s : steps) {
    if (s.kind == StepKind::input) n += s.input.num_vertices();
  }
  PhysicalSim sim(n, use_oracle);
  for (const TraceStep& s : steps) sim.run(s);
  return sim.compare();
}

GraphState random_graph(std::size_t n, double edge_probability, RngStream& rng) {
  GraphState g;
  for (VertexId v = 1; v <= n; ++v) g.add_vertex(v);
  for (VertexId u = 1; u <= n; ++u) {
    for (VertexId v = u + 1; v <= n; ++v) {
      if (rng.bernoulli(edge_probability)) g.add_edge(u, v);
    }
  }
  return g;
}

bool CheckReport::pass() const {
  return !rows.empty() && std::all_of(rows.begin(), rows.end(), [](const CheckRow& row) { return row.pass; });
}

const std::vector<std::string>& check_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [name, fn] : registry()) out.push_back(name);
    return out;
  }();
  return names;
}

CheckReport run_check(std::string_view name, const CheckOptions& options) {
  for (const auto& [n, fn] : registry()) {
    if (n == name) return fn(options);
  }
  throw std::invalid_argument("unknown check: " + std::string(name));
}

std::string format_table(const CheckReport& report) {
  std::size_t width = std::string_view("ASSERTION").size();
  for (const CheckRow& row : report.rows) width = std::max(width, row.assertion.size());
  std::ostringstream os;
  auto line = [&](std::string_view a, std::string_view res, std::string_view detail) {
    os << a << std::string(width - a.size() + 2, ' ') << res << std::string(8 - res.size(), ' ') << detail;
    os << '\n';
  };
  line("ASSERTION", "RESULT", "DETAIL");
  std::size_t passed = 0;
  for (const CheckRow& row : report.rows) {
    line(row.assertion, row.pass ? "PASS" : "FAIL", row.detail);
    passed += row.pass ? 1 : 0;
  }
  os << report.check << ": " << (report.pass() ? "PASS" : "FAIL") << " (" << passed << "/" << report.rows.size()
     << ")\n";
  return os.str();
}

std::string format_json(const CheckReport& report) {
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const CheckRow& row : report.rows) {
    rows.push_back({{"assertion", row.assertion}, {"pass", row.pass}, {"detail", row.detail}});
  }
  nlohmann::ordered_json j{{"check", report.check}, {"pass", report.pass()}, {"rows", std::move(rows)}};
  return j.dump();
}

}  // namespace cluster
