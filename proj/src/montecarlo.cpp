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

#include "cluster/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <functional>
#include <sstream>
#include <stdexcept>
#include <thread>
#include <vector>

#include "cluster/recipes.hpp"
#include "cluster/rng.hpp"
#include "json.hpp"

namespace cluster {
namespace {

// Exact integer sums; merging is order independent, so any thread split
// produces identical statistics.
struct Accumulator {
  std::uint64_t trials = 0;
  std::uint64_t exhausted = 0;
  unsigned __int128 cost = 0;
  unsigned __int128 cost_sq = 0;
  unsigned __int128 attempts = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;

  void add(std::uint64_t c, std::uint64_t k) {
    ++trials;
    cost += c;
    cost_sq += static_cast<unsigned __int128>(c) * c;
    attempts += k;
    ++histogram[k];
  }

  void merge(const Accumulator& o) {
    trials += o.trials;
    exhausted += o.exhausted;
    cost += o.cost;
    cost_sq += o.cost_sq;
    attempts += o.attempts;
    for (auto [k, n] : o.histogram) histogram[k] += n;
  }

  TrialStats stats() const {
    TrialStats s;
    s.trials = trials;
    s.exhausted = exhausted;
    s.attempt_histogram = histogram;
    if (trials == 0) return s;
    const long double n = static_cast<long double>(trials);
    const long double sum = static_cast<long double>(cost);
    s.mean_cost = static_cast<double>(sum / n);
    s.mean_attempts = static_cast<double>(static_cast<long double>(attempts) / n);
    if (trials > 1) {
      // n·Σc² − (Σc)² is computed exactly before the division.
      const unsigned __int128 nss = static_cast<unsigned __int128>(trials) * cost_sq;
      const unsigned __int128 ss = cost * cost;
      s.variance = static_cast<double>(static_cast<long double>(nss - ss) / (n * (n - 1)));
    }
    return s;
  }
};

unsigned resolve_threads(unsigned threads, std::uint64_t n) {
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  return static_cast<unsigned>(std::min<std::uint64_t>(threads, std::max<std::uint64_t>(n, 1)));
}

TrialStats parallel(std::uint64_t n, unsigned threads, const std::function<void(std::uint64_t, Accumulator&)>& trial) {
  if (n == 0) throw std::invalid_argument("at least one trial is required");
  const unsigned t = resolve_threads(threads, n);
  std::vector<Accumulator> parts(t);
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < t; ++w) {
    pool.emplace_back([&, w] {
      const std::uint64_t begin = n * w / t, end = n * (w + 1) / t;
      for (std::uint64_t i = begin; i < end; ++i) trial(i, parts[w]);
    });
  }
  for (auto& th : pool) th.join();
  Accumulator total;
  for (const auto& p : parts) total.merge(p);
  return total.stats();
}

std::string num(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", x);
  return buf;
}

}  // namespace

void CostModel::validate() const {
  if (success_probability == 0.0) throw std::invalid_argument("non-terminating process");
  if (!(success_probability > 0.0 && success_probability <= 1.0)) {
    throw std::invalid_argument("success probability must lie in (0, 1]");
  }
}

double closed_form_expected_cost(const CostModel& m) {
  m.validate();
  const double p = m.success_probability;
  return (2.0 * static_cast<double>(m.l_build_cost) + (1.0 - p) * static_cast<double>(m.failure_penalty)) / p;
}

double closed_form_variance(const CostModel& m) {
  m.validate();
  // cost = (2l + f)·k − f, Var k = (1 − p)/p².
  const double p = m.success_probability;
  const double slope = 2.0 * static_cast<double>(m.l_build_cost) + static_cast<double>(m.failure_penalty);
  return slope * slope * (1.0 - p) / (p * p);
}

double TrialStats::standard_error() const {
  return trials == 0 ? 0.0 : std::sqrt(variance / static_cast<double>(trials));
}

TrialStats run_trials(const CostModel& m, std::uint64_t n_trials, std::uint64_t seed, unsigned threads) {
  m.validate();
  const RngStream root(seed);
  return parallel(n_trials, threads, [&](std::uint64_t i, Accumulator& acc) {
    RngStream rng = root.substream(i);
    std::uint64_t k = 1;
    while (!rng.bernoulli(m.success_probability)) ++k;
    acc.add(2 * m.l_build_cost * k + m.failure_penalty * (k - 1), k);
  });
}

TrialStats run_recipe_trials(const RecipeTrialInputs& in, std::uint64_t n_trials, std::uint64_t seed,
                             unsigned threads) {
  const GraphState a = GraphState::path(1, in.chain_a);
  const GraphState b = GraphState::path(static_cast<VertexId>(in.chain_a) + 1, in.chain_b);
  const RngStream root(seed);
  return parallel(n_trials, threads, [&](std::uint64_t i, Accumulator& acc) {
    OutcomeSource src(root.substream(i), {}, in.success_probability);
    try {
      const RecipeResult h = build_H(a, b, src);
      acc.add(h.ledger.bonds_consumed, h.ledger.fusion_attempts);
    } catch (const ResourceExhausted&) {
      ++acc.exhausted;
    }
  });
}

std::string stats_to_json(const TrialStats& s, double closed_form) {
  nlohmann::ordered_json hist = nlohmann::ordered_json::object();
  for (auto [k, n] : s.attempt_histogram) hist[std::to_string(k)] = n;
  nlohmann::ordered_json j{{"trials", s.trials},
                           {"mean_cost", s.mean_cost},
                           {"variance", s.variance},
                           {"standard_error", s.standard_error()},
                           {"mean_attempts", s.mean_attempts},
                           {"closed_form", closed_form},
                           {"exhausted", s.exhausted},
                           {"attempt_histogram", std::move(hist)}};
  return j.dump();
}

std::string stats_to_table(const TrialStats& s, double closed_form) {
  const std::vector<std::pair<std::string, std::string>> rows = {
      {"trials", std::to_string(s.trials)},
      {"mean_cost", num(s.mean_cost)},
      {"closed_form", num(closed_form)},
      {"variance", num(s.variance)},
      {"standard_error", num(s.standard_error())},
      {"mean_attempts", num(s.mean_attempts)},
      {"exhausted", std::to_string(s.exhausted)},
  };
  std::size_t width = 0;
  for (const auto& [k, v] : rows) width = std::max(width, v.size());
  std::ostringstream os;
  for (const auto& [k, v] : rows) os << k << std::string(16 - k.size(), ' ') << std::string(width - v.size(), ' ') << v << '\n';
  return os.str();
}

std::string histogram_csv(const TrialStats& s) {
  std::ostringstream os;
  os << "attempts,count\n";
  for (auto [k, n] : s.attempt_histogram) os << k << ',' << n << '\n';
  return os.str();
}

}  // namespace cluster
