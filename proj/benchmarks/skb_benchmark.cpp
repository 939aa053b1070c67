// Copyright 2026 The skewbrace Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <benchmark/benchmark.h>

#include <vector>

#include "skb/brace.hpp"
#include "skb/enumeration.hpp"
#include "skb/factorization.hpp"
#include "skb/group.hpp"
#include "skb/group_catalog.hpp"
#include "skb/ybe.hpp"

namespace skb {
namespace {

const SkewBrace& s4_brace() {
  static const SkewBrace a = [] {
    const auto& facts = exact_factorizations(symmetric_group(4).table);
    return exact_factorization_brace(facts.front());
  }();
  return a;
}

void BM_Automorphisms(benchmark::State& state) {
  const auto g = group_catalog(8)[static_cast<std::size_t>(state.range(0))].table;
  for (auto _ : state) benchmark::DoNotOptimize(automorphisms(g));
}
BENCHMARK(BM_Automorphisms)->DenseRange(0, 4);

void BM_BracesOfOrder(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(braces_of_order(n));
}
BENCHMARK(BM_BracesOfOrder)->Arg(4)->Arg(6)->Arg(8)->Unit(benchmark::kMillisecond);

void BM_BruteForceOracle(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(brute_force_oracle(n));
}
BENCHMARK(BM_BruteForceOracle)->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_ValidateBrace(benchmark::State& state) {
  const auto& a = s4_brace();
  for (auto _ : state) benchmark::DoNotOptimize(validate_brace(a.additive(), a.multiplicative()));
}
BENCHMARK(BM_ValidateBrace);

void BM_LeftIdeals(benchmark::State& state) {
  const auto& a = s4_brace();
  for (auto _ : state) benchmark::DoNotOptimize(left_ideals(a));
}
BENCHMARK(BM_LeftIdeals);

void BM_FindFactorizations(benchmark::State& state) {
  const auto& a = s4_brace();
  for (auto _ : state) benchmark::DoNotOptimize(find_factorizations(a));
}
BENCHMARK(BM_FindFactorizations);

void BM_RightSeries(benchmark::State& state) {
  const auto& a = s4_brace();
  for (auto _ : state) benchmark::DoNotOptimize(right_series(a));
}
BENCHMARK(BM_RightSeries);

void BM_SolutionValidate(benchmark::State& state) {
  const auto s = solution_from_brace(s4_brace());
  for (auto _ : state) benchmark::DoNotOptimize(validate_solution(s.sigma_matrix(), s.tau_matrix()));
}
BENCHMARK(BM_SolutionValidate);

void BM_MultipermutationLevel(benchmark::State& state) {
  std::vector<Solution> sols;
  for (const auto& e : braces_of_order(8).entries) {
    if (e.brace.additive().is_abelian()) sols.push_back(solution_from_brace(e.brace));
  }
  for (auto _ : state) {
    for (const auto& s : sols) benchmark::DoNotOptimize(multipermutation_level(s));
  }
}
BENCHMARK(BM_MultipermutationLevel)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace skb

BENCHMARK_MAIN();
