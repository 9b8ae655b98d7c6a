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

#include <complex>

#include "cluster/statevector.hpp"
#include "support.hpp"

namespace cluster {
namespace {

using oracle::Basis;
using Vec = oracle::StateVector<double>;
using C = std::complex<double>;

Vec from_amplitudes(std::initializer_list<C> amps) {
  Vec::Amplitudes a(static_cast<Eigen::Index>(amps.size()));
  Eigen::Index i = 0;
  for (C x : amps) a(i++) = x;
  return Vec(static_cast<std::size_t>(std::log2(amps.size())), a);
}

void expect_amplitudes(const Vec& v, std::initializer_list<C> amps) {
  ASSERT_EQ(v.dimension(), amps.size());
  Eigen::Index i = 0;
  for (C x : amps) {
    EXPECT_NEAR(std::abs(v.amplitudes()(i) - x), 0.0, 1e-12) << "index " << i;
    ++i;
  }
}

TEST(Oracle, GraphStateAmplitudes) {
  const double r = 1 / std::sqrt(2.0);
  expect_amplitudes(oracle::graph_state_vector(GraphState::from_edges({1}, {})), {r, r});
  expect_amplitudes(oracle::graph_state_vector(GraphState::path(1, 2)), {0.5, 0.5, 0.5, -0.5});
  expect_amplitudes(oracle::graph_state_vector(GraphState::from_edges({1, 2}, {})), {0.5, 0.5, 0.5, 0.5});
}

TEST(Oracle, SizeLimit) {
  EXPECT_THROW(oracle::graph_state_vector(GraphState::path(1, oracle::kMaxQubits + 1)), std::invalid_argument);
  EXPECT_NO_THROW(Vec(oracle::kMaxQubits));
}

TEST(Oracle, UnitaryExamples) {
  const double r = 1 / std::sqrt(2.0);
  expect_amplitudes(oracle::apply_unitary(Vec(1), oracle::gate_matrix(Gate1::H), 0), {r, r});
  // |01⟩ here means qubit 0 = 1: index 1.
  const Vec v = from_amplitudes({0, 1, 0, 0});
  expect_amplitudes(oracle::apply_unitary(v, oracle::two_qubit_matrix(TwoQubitGate::SWAP), 0, 1), {0, 0, 1, 0});
  oracle::Matrix2<double> bad = oracle::Matrix2<double>::Identity();
  bad(0, 0) = 2;
  EXPECT_THROW(oracle::apply_unitary(Vec(1), bad, 0), std::invalid_argument);
  EXPECT_THROW(oracle::apply_unitary(Vec(1), oracle::gate_matrix(Gate1::H), 1), std::out_of_range);
}

TEST(Oracle, UnitariesPreserveNorm) {
  RngStream rng(31);
  Vec v = oracle::graph_state_vector(testing::random_graph(6, 0.5, rng));
  for (int k = 0; k < 200; ++k) {
    const std::size_t q = rng.next() % 6;
    if (rng.next() & 1) {
      v = oracle::apply_unitary(std::move(v), oracle::gate_matrix(static_cast<Gate1>(rng.next() % 5)), q);
    } else {
      v = oracle::apply_unitary(std::move(v), oracle::two_qubit_matrix(TwoQubitGate::CNOT), q, (q + 1) % 6);
    }
  }
  EXPECT_NEAR(v.norm(), 1.0, 1e-10);
}

TEST(Oracle, ProjectionExamples) {
  const Vec plus = oracle::graph_state_vector(GraphState::from_edges({1}, {}));
  const auto [z, pz] = oracle::project_measure(plus, 0, Basis::Z, false);
  EXPECT_NEAR(pz, 0.5, 1e-12);
  expect_amplitudes(z, {1, 0});
  const auto [x, px] = oracle::project_measure(plus, 0, Basis::X, false);
  EXPECT_NEAR(px, 1.0, 1e-12);
  EXPECT_TRUE(oracle::equal_up_to_global_phase(x, plus));
  EXPECT_THROW(oracle::project_measure(plus, 0, Basis::X, true), std::invalid_argument);
}

TEST(Oracle, BranchProbabilitiesSumToOne) {
  RngStream rng(32);
  for (int i = 0; i < 30; ++i) {
    const GraphState g = testing::random_graph(1 + rng.next() % 6, 0.5, rng);
    const Vec v = oracle::graph_state_vector(g);
    const std::size_t q = rng.next() % g.num_vertices();
    const auto basis = static_cast<Basis>(rng.next() % 3);
    double total = 0;
    for (bool neg : {false, true}) {
      try {
        total += oracle::project_measure(v, q, basis, neg).second;
      } catch (const std::invalid_argument&) {
        // Zero-probability branch.
      }
    }
    EXPECT_NEAR(total, 1.0, 1e-10);
  }
}

TEST(Oracle, YOnPathMiddleWithCorrections) {
  const Vec v = oracle::graph_state_vector(GraphState::path(1, 3));
  auto [post, prob] = oracle::project_measure(v, 1, Basis::Y, false);
  EXPECT_NEAR(prob, 0.5, 1e-12);
  Vec rest = oracle::contract_qubit(post, 1, oracle::eigenvector<double>(Basis::Y, false));
  // Undo the S byproduct on both neighbours.
  const oracle::Matrix2<double> sdg = oracle::gate_matrix(Gate1::S).adjoint();
  rest = oracle::apply_unitary(std::move(rest), sdg, 0);
  rest = oracle::apply_unitary(std::move(rest), sdg, 1);
  EXPECT_TRUE(oracle::equal_up_to_global_phase(rest, oracle::graph_state_vector(GraphState::path(1, 2))));
}

TEST(Oracle, GlobalPhaseComparison) {
  const Vec v = oracle::graph_state_vector(GraphState::path(1, 3));
  Vec w = v;
  w.amplitudes() *= std::polar(1.0, 3.14159265358979323846 / 7);
  EXPECT_TRUE(oracle::equal_up_to_global_phase(v, w));
  EXPECT_FALSE(oracle::equal_up_to_global_phase(Vec(1), from_amplitudes({0, 1})));
  EXPECT_THROW(oracle::equal_up_to_global_phase(Vec(1), Vec(2)), std::invalid_argument);
}

TEST(Oracle, ParityFusionOfTwoPlusStates) {
  const Vec pp = oracle::graph_state_vector(GraphState::from_edges({1, 2}, {}));
  const Vec fused = oracle::fuse_parity(pp, 0, 1);
  EXPECT_TRUE(oracle::equal_up_to_global_phase(fused, oracle::graph_state_vector(GraphState::from_edges({1}, {}))));
}

TEST(Oracle, CsvDump) {
  const std::string csv = oracle::to_csv(Vec(1));
  EXPECT_EQ(csv.substr(0, csv.find('\n')), "index,re,im");
}

}  // namespace
}  // namespace cluster
