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

#include <boost/math/distributions/chi_squared.hpp>
#include <cmath>

#include "cluster/montecarlo.hpp"

namespace cluster {
namespace {

double combined_se(const TrialStats& a, const TrialStats& b) {
  return std::sqrt(a.standard_error() * a.standard_error() + b.standard_error() * b.standard_error());
}

TEST(ClosedForm, KnownValues) {
  EXPECT_DOUBLE_EQ(closed_form_expected_cost(CostModel::ours()), 10.0);
  EXPECT_DOUBLE_EQ(closed_form_expected_cost(CostModel::type2()), 34.0);
  EXPECT_DOUBLE_EQ(closed_form_expected_cost({2, 7, 1.0}), 4.0);
  EXPECT_DOUBLE_EQ(closed_form_variance(CostModel::ours()), 72.0);
  EXPECT_DOUBLE_EQ(closed_form_variance(CostModel::type2()), 648.0);
  EXPECT_DOUBLE_EQ(closed_form_variance({2, 2, 1.0}), 0.0);
}

TEST(ClosedForm, SolvesTheRecurrence) {
  for (double p : {0.1, 0.25, 0.5, 0.9}) {
    const CostModel m{3, 5, p};
    const double e = closed_form_expected_cost(m);
    EXPECT_NEAR(e, 2.0 * 3 + (1 - p) * (5 + e), 1e-9);
  }
}

TEST(ClosedForm, RejectsBadModels) {
  try {
    closed_form_expected_cost({2, 2, 0.0});
    FAIL();
  } catch (const std::invalid_argument& e) {
    EXPECT_STREQ(e.what(), "non-terminating process");
  }
  EXPECT_THROW(closed_form_expected_cost({2, 2, 1.5}), std::invalid_argument);
  EXPECT_THROW(run_trials({2, 2, -0.1}, 10, 1), std::invalid_argument);
  EXPECT_THROW(run_trials(CostModel::ours(), 0, 1), std::invalid_argument);
}

TEST(Trials, OursNearTen) {
  const TrialStats s = run_trials(CostModel::ours(), 100000, 1);
  EXPECT_NEAR(s.mean_cost, 10.0, 0.1);
  EXPECT_NEAR(s.mean_attempts, 2.0, 0.02);
  EXPECT_NEAR(s.variance, 72.0, 72.0 * 0.05);
}

TEST(Trials, Type2NearThirtyFour) {
  const TrialStats s = run_trials(CostModel::type2(), 100000, 1);
  EXPECT_NEAR(s.mean_cost, 34.0, 0.3);
  EXPECT_NEAR(s.variance, 648.0, 648.0 * 0.05);
}

TEST(Trials, CertainSuccess) {
  const TrialStats s = run_trials({2, 2, 1.0}, 10, 3);
  EXPECT_EQ(s.mean_cost, 4.0);
  EXPECT_EQ(s.variance, 0.0);
  EXPECT_EQ(s.mean_attempts, 1.0);
  EXPECT_EQ(s.attempt_histogram, (std::map<std::uint64_t, std::uint64_t>{{1, 10}}));
}

TEST(Trials, HistogramIsConsistentWithMoments) {
  const CostModel m = CostModel::ours();
  const TrialStats s = run_trials(m, 20000, 9);
  std::uint64_t total = 0;
  double sum = 0, sum_sq = 0;
  for (auto [k, count] : s.attempt_histogram) {
    total += count;
    const double cost = 2.0 * m.l_build_cost * k + m.failure_penalty * (k - 1.0);
    sum += cost * count;
    sum_sq += cost * cost * count;
  }
  EXPECT_EQ(total, s.trials);
  const double mean = sum / total;
  EXPECT_NEAR(s.mean_cost, mean, 1e-9);
  EXPECT_NEAR(s.variance, (sum_sq - total * mean * mean) / (total - 1.0), 1e-6);
}

TEST(Trials, IndependentOfThreadCount) {
  const TrialStats one = run_trials(CostModel::ours(), 30000, 42, 1);
  for (unsigned t : {2u, 3u, 8u}) {
    const TrialStats many = run_trials(CostModel::ours(), 30000, 42, t);
    EXPECT_EQ(many.mean_cost, one.mean_cost);
    EXPECT_EQ(many.variance, one.variance);
    EXPECT_EQ(many.attempt_histogram, one.attempt_histogram);
  }
  EXPECT_NE(run_trials(CostModel::ours(), 30000, 43, 1).mean_cost, one.mean_cost);
}

TEST(Trials, AttemptsAreGeometric) {
  const double p = 0.5;
  const std::uint64_t n = 100000;
  const TrialStats s = run_trials(CostModel::ours(), n, 11);
  // Pool the tail so every expected count is at least 5.
  double chi2 = 0;
  int bins = 0;
  double tail_expected = n, tail_observed = n;
  for (std::uint64_t k = 1;; ++k) {
    const double expected = n * p * std::pow(1 - p, k - 1.0);
    if (tail_expected - expected < 5) break;
    const auto it = s.attempt_histogram.find(k);
    const double observed = it == s.attempt_histogram.end() ? 0 : static_cast<double>(it->second);
    chi2 += (observed - expected) * (observed - expected) / expected;
    tail_expected -= expected;
    tail_observed -= observed;
    ++bins;
  }
  chi2 += (tail_observed - tail_expected) * (tail_observed - tail_expected) / tail_expected;
  ++bins;
  const boost::math::chi_squared dist(bins - 1);
  EXPECT_LT(chi2, boost::math::quantile(dist, 1 - 0.001)) << "bins=" << bins;
}

TEST(Trials, ClosedFormOnProbabilityGrid) {
  for (double p : {0.25, 0.5, 0.75, 1.0}) {
    const CostModel m{2, 2, p};
    const TrialStats s = run_trials(m, 100000, 5);
    const double e = closed_form_expected_cost(m);
    EXPECT_LE(std::abs(s.mean_cost - e), 3 * std::sqrt(closed_form_variance(m) / 1e5) + 1e-12) << p;
  }
}

TEST(RecipeTrials, MatchesAbstractProcess) {
  const TrialStats graph = run_recipe_trials({}, 20000, 101);
  const TrialStats abstract = run_trials(CostModel::ours(), 20000, 202);
  EXPECT_EQ(graph.exhausted, 0u);
  EXPECT_LT(std::abs(graph.mean_cost - abstract.mean_cost), 3 * combined_se(graph, abstract));
  EXPECT_NEAR(graph.mean_cost, 10.0, 3 * graph.standard_error() + 0.05);
}

TEST(RecipeTrials, ThreadIndependentAndExhaustionCounted) {
  const TrialStats a = run_recipe_trials({}, 2000, 8, 1);
  const TrialStats b = run_recipe_trials({}, 2000, 8, 4);
  EXPECT_EQ(a.mean_cost, b.mean_cost);
  EXPECT_EQ(a.attempt_histogram, b.attempt_histogram);
  // Four-qubit chains support a single attempt.
  const TrialStats short_chains = run_recipe_trials({4, 4, 0.5}, 2000, 8);
  EXPECT_GT(short_chains.exhausted, 800u);
  EXPECT_EQ(short_chains.trials + short_chains.exhausted, 2000u);
  EXPECT_EQ(short_chains.mean_cost, 4.0);
}

TEST(Output, JsonTableCsv) {
  const TrialStats s = run_trials({2, 2, 1.0}, 10, 3);
  EXPECT_EQ(stats_to_json(s, 4.0),
            R"({"trials":10,"mean_cost":4.0,"variance":0.0,"standard_error":0.0,"mean_attempts":1.0,)"
            R"("closed_form":4.0,"exhausted":0,"attempt_histogram":{"1":10}})");
  EXPECT_EQ(histogram_csv(s), "attempts,count\n1,10\n");
  const std::string table = stats_to_table(s, 4.0);
  EXPECT_NE(table.find("mean_cost"), std::string::npos);
  EXPECT_NE(table.find("closed_form"), std::string::npos);
}

}  // namespace
}  // namespace cluster
