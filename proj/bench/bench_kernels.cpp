// Copyright 2026 The NPC Toolkit Authors
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


// Serial reference vs OpenMP kernels. Run with e.g.
//   OMP_NUM_THREADS=8 ./npc_bench --benchmark_filter=Encode

#include <benchmark/benchmark.h>

#include <memory>
#include <random>
#include <vector>

#include "npc/codec.hpp"
#include "npc/construction.hpp"
#include "npc/kernels.hpp"
#include "npc/simulator.hpp"

namespace {

namespace serial = npc::kernels::serial;
namespace parallel = npc::kernels::parallel;

std::vector<npc::Symbol> random_symbols(std::size_t count) {
  std::mt19937_64 rng(1);
  std::uniform_int_distribution<int> symbol(0, 255);
  std::vector<npc::Symbol> out(count);
  for (auto& s : out) s = static_cast<npc::Symbol>(symbol(rng));
  return out;
}

const npc::NpcCode& code_12_4() {
  static const auto code = npc::build_code(12, 4, std::make_shared<const npc::FieldContext>());
  return code;
}

template <auto Encode>
void BM_Encode(benchmark::State& state) {
  const auto& code = code_12_4();
  const auto blocks = static_cast<std::size_t>(state.range(0));
  const auto data = random_symbols(blocks * code.data_width());
  std::vector<npc::Symbol> out(blocks * code.k());
  for (auto _ : state) {
    Encode(code, data, out);
    benchmark::DoNotOptimize(out.data());
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * data.size()));
}

template <auto Recover>
void BM_Recover(benchmark::State& state) {
  const auto& code = code_12_4();
  const auto blocks = static_cast<std::size_t>(state.range(0));
  const auto data = random_symbols(blocks * code.data_width());
  std::vector<npc::Symbol> wire(blocks * code.k());
  serial::encode_blocks(code, data, wire);
  const std::vector<std::size_t> erased{0, 3, 5, 7};
  const npc::RecoveryPlan plan(code, erased);
  std::vector<npc::Symbol> out(data.size());
  for (auto _ : state) {
    benchmark::DoNotOptimize(Recover(plan, wire, out));
  }
  state.SetBytesProcessed(static_cast<std::int64_t>(state.iterations() * data.size()));
}

template <auto AllPairs>
void BM_AllPairs(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const auto g = npc::harary(n, 6);
  for (auto _ : state) {
    auto counts = AllPairs(g);
    benchmark::DoNotOptimize(counts.data());
  }
}

template <auto Trials>
void BM_Trials(benchmark::State& state) {
  const auto field = std::make_shared<const npc::FieldContext>();
  const auto inst = std::make_shared<const npc::ProtectionInstance>(
      npc::make_instance(npc::harary(10, 3), {0}, {3, 5, 8}));
  const auto code = npc::build_code(3, 1, field);
  std::vector<npc::Scenario> scenarios;
  for (std::uint64_t seed = 0; seed < static_cast<std::uint64_t>(state.range(0)); ++seed) {
    scenarios.push_back(npc::Scenario{inst, code, npc::random_payload(code, 64, seed),
                                      npc::RandomFailures{1, seed}});
  }
  for (auto _ : state) {
    auto reports = Trials(scenarios);
    benchmark::DoNotOptimize(reports.data());
  }
}

}  // namespace

BENCHMARK(BM_Encode<serial::encode_blocks>)->Name("Encode/serial")->Arg(1 << 16);
BENCHMARK(BM_Encode<parallel::encode_blocks>)->Name("Encode/parallel")->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_Recover<serial::recover_blocks>)->Name("Recover/serial")->Arg(1 << 16);
BENCHMARK(BM_Recover<parallel::recover_blocks>)->Name("Recover/parallel")->Arg(1 << 16)->UseRealTime();
BENCHMARK(BM_AllPairs<serial::all_pairs_edge_disjoint_counts>)->Name("AllPairs/serial")->Arg(60);
BENCHMARK(BM_AllPairs<parallel::all_pairs_edge_disjoint_counts>)->Name("AllPairs/parallel")->Arg(60)->UseRealTime();
BENCHMARK(BM_Trials<serial::run_trials>)->Name("Trials/serial")->Arg(256);
BENCHMARK(BM_Trials<parallel::run_trials>)->Name("Trials/parallel")->Arg(256)->UseRealTime();

BENCHMARK_MAIN();
