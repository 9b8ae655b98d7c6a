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
#include <string>

namespace cluster {

/// Retry process for one rung: each attempt builds two L-shapes and fuses
/// their arms; a failure destroys `failure_penalty` further bonds.
struct CostModel {
  std::uint64_t l_build_cost = 2;
  std::uint64_t failure_penalty = 2;
  double success_probability = 0.5;

  /// Type-I fusion on L-shapes built from box rewrites.
  static CostModel ours() { return {2, 2, 0.5}; }
  /// Baseline whose L-shapes cost 8 bonds each on average.
  static CostModel type2() { return {8, 2, 0.5}; }

  /// Throws std::invalid_argument unless 0 < p <= 1; p == 0 is reported as
  /// a non-terminating process.
  void validate() const;
};

/// Solution of E = 2l + (1-p)(f + E).
double closed_form_expected_cost(const CostModel& m);
/// Variance of 2l·k + f·(k-1) for geometric k.
double closed_form_variance(const CostModel& m);

struct TrialStats {
  std::uint64_t trials = 0;
  double mean_cost = 0;
  /// Unbiased sample variance.
  double variance = 0;
  double mean_attempts = 0;
  /// attempts k -> number of trials that needed k attempts.
  std::map<std::uint64_t, std::uint64_t> attempt_histogram;
  /// Trials whose chains ran out before success (graph-level runs only);
  /// they are excluded from every other field.
  std::uint64_t exhausted = 0;

  double standard_error() const;
};

/// threads == 0 picks the hardware concurrency. Results depend only on
/// (model, n_trials, seed): trial i draws from substream i of the seed.
TrialStats run_trials(const CostModel& m, std::uint64_t n_trials, std::uint64_t seed, unsigned threads = 0);

/// Inputs for graph-level trials: two fresh chains per trial. Each attempt
/// uses two qubits of every chain, so 64-qubit chains run out with
/// probability about 2^-30 per trial.
struct RecipeTrialInputs {
  std::size_t chain_a = 64;
  std::size_t chain_b = 64;
  double success_probability = 0.5;
};

/// Runs build_H per trial with a fresh stream and records its ledger.
TrialStats run_recipe_trials(const RecipeTrialInputs& in, std::uint64_t n_trials, std::uint64_t seed,
                             unsigned threads = 0);

std::string stats_to_json(const TrialStats& s, double closed_form);
/// Aligned two-column table of the statistics beside the closed form.
std::string stats_to_table(const TrialStats& s, double closed_form);
/// "attempts,count" header then one line per histogram bin.
std::string histogram_csv(const TrialStats& s);

}  // namespace cluster
