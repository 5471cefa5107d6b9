// Copyright 2026 The qss3 developers
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

#include <benchmark/benchmark.h>

#include "qss3/analysis.hpp"
#include "qss3/bell.hpp"
#include "qss3/fidelity.hpp"
#include "qss3/oracle.hpp"
#include "qss3/states.hpp"

namespace {

using namespace qss3;

PureState3 fixture_state(std::uint64_t seed) {
  return from_acin(sample_acin(seed, true));
}

void BM_Bloch3(benchmark::State& state) {
  const ComplexMatrix rho = density(fixture_state(1));
  for (auto _ : state) {
    benchmark::DoNotOptimize(bloch3(rho));
  }
}
BENCHMARK(BM_Bloch3);

void BM_HermitianEig8(benchmark::State& state) {
  const ComplexMatrix rho = density(fixture_state(2));
  for (auto _ : state) {
    benchmark::DoNotOptimize(hermitian_eigenvalues(rho));
  }
}
BENCHMARK(BM_HermitianEig8);

void BM_TraceNorm(benchmark::State& state) {
  const RealMatrix3 r = bloch3(density(fixture_state(3))).r;
  for (auto _ : state) {
    benchmark::DoNotOptimize(trace_norm(r));
  }
}
BENCHMARK(BM_TraceNorm);

void BM_Theta3(benchmark::State& state) {
  const ComplexMatrix rho = density(fixture_state(4));
  for (auto _ : state) {
    benchmark::DoNotOptimize(theta3(rho));
  }
}
BENCHMARK(BM_Theta3);

void BM_Analyze(benchmark::State& state) {
  const PureState3 psi = fixture_state(5);
  for (auto _ : state) {
    benchmark::DoNotOptimize(analyze(psi));
  }
}
BENCHMARK(BM_Analyze);

void BM_ChshOptimize(benchmark::State& state) {
  const ComplexMatrix rho =
      reduced_pair(fixture_state(6), ChannelRole::DealerReconstructor);
  for (auto _ : state) {
    benchmark::DoNotOptimize(chsh_optimize(rho));
  }
}
BENCHMARK(BM_ChshOptimize);

void BM_McTeleport(benchmark::State& state) {
  const ComplexMatrix rho =
      reduced_pair(fixture_state(7), ChannelRole::DealerReconstructor);
  const std::size_t samples = static_cast<std::size_t>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mc_teleport_fidelity(rho, {samples, 11}));
  }
  state.SetItemsProcessed(state.iterations() * samples);
}
BENCHMARK(BM_McTeleport)->Arg(1000)->Arg(10000);

void BM_SweepRecord(benchmark::State& state) {
  std::uint64_t i = 0;
  for (auto _ : state) {
    const AcinParams p = sample_acin(derive_stream_seed(9, i++), true);
    benchmark::DoNotOptimize(analyze(from_acin(p), p));
  }
}
BENCHMARK(BM_SweepRecord);

}  // namespace

BENCHMARK_MAIN();
