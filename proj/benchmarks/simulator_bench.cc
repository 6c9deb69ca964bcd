// Copyright 2026 The qsm-tcount Authors
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

#include "qsm/builder.hpp"
#include "qsm/simulator.hpp"

using namespace qsm;

static void RunQsm(benchmark::State &state) {
    const QsmInstance inst = QsmInstance::make("00110000", "11");
    QsmOptions o;
    o.variant = state.range(0) == 0 ? GateVariant::Standard : GateVariant::RelativePhase;
    o.optimize = state.range(1) != 0;
    const Circuit c = lower(build_qsm(inst, 2, o));
    for (auto _ : state) {
        benchmark::DoNotOptimize(run(c));
    }
    state.counters["gates"] = static_cast<double>(c.size());
}
BENCHMARK(RunQsm)->ArgsProduct({{0, 1}, {0, 1}})->Unit(benchmark::kMillisecond);

static void ApplyGroverOp(benchmark::State &state) {
    std::string data(static_cast<std::size_t>(state.range(0)), '0');
    data[1] = '1';
    const QsmInstance inst = QsmInstance::make(data, "1");
    QsmOptions o;
    o.optimize = true;
    const Circuit q = build_grover_op(inst, o);
    Statevector sv = run(build_init_A(inst, o));
    for (auto _ : state) {
        apply(sv, q);
        benchmark::ClobberMemory();
    }
    state.counters["qubits"] = q.width();
}
BENCHMARK(ApplyGroverOp)->Arg(4)->Arg(8)->Arg(16)->Unit(benchmark::kMillisecond);

static void Sample(benchmark::State &state) {
    const QsmInstance inst = QsmInstance::make("00110000", "11");
    const Statevector sv = run(build_qsm(inst, 2, QsmOptions{}));
    std::uint64_t seed = 0;
    for (auto _ : state) {
        benchmark::DoNotOptimize(sample(sv, static_cast<std::uint64_t>(state.range(0)), ++seed));
    }
}
BENCHMARK(Sample)->RangeMultiplier(10)->Range(100, 100000);
