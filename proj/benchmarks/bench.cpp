// Copyright 2026 The exunits authors
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

#include <vector>

#include "exunits/count.hpp"
#include "exunits/gf.hpp"
#include "exunits/mat2.hpp"
#include "exunits/quat.hpp"
#include "exunits/ring.hpp"

namespace {

using namespace exunits;

void BM_FieldMul(benchmark::State& state) {
    FieldSpec F = FieldSpec::make(3, 2);
    std::vector<FieldElem> elems;
    for (u64 idx = 0; idx < F.q(); ++idx) elems.push_back(F.from_index(idx));
    u64 t = 0;
    for (auto _ : state) {
        const FieldElem& a = elems[t % 9];
        const FieldElem& b = elems[(t * 7 + 3) % 9];
        benchmark::DoNotOptimize(F.mul(a, b));
        ++t;
    }
}
BENCHMARK(BM_FieldMul);

void BM_QuaternionMul(benchmark::State& state) {
    RingSpec R = RingSpec::zn(9);
    Quaternion a = quat_from_index(R, 1234);
    Quaternion b = quat_from_index(R, 4321);
    for (auto _ : state) {
        benchmark::DoNotOptimize(q_mul(R, a, b));
    }
}
BENCHMARK(BM_QuaternionMul);

void BM_AmbientBuild(benchmark::State& state) {
    RingSpec R = RingSpec::zn(9);
    for (auto _ : state) {
        Ambient A = Ambient::quaternion(R);
        benchmark::DoNotOptimize(A.exceptional_count());
    }
}
BENCHMARK(BM_AmbientBuild);

void BM_PairScan(benchmark::State& state) {
    Ambient A = Ambient::quaternion(RingSpec::zn(9));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi2_scan_oracle(A, 0, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(A.size()));
}
BENCHMARK(BM_PairScan);

void BM_ConvolutionPass(benchmark::State& state) {
    Ambient A = Ambient::mat2(FieldSpec::make(5, 1));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_k_table(A, 2, 1));
    }
    state.SetItemsProcessed(state.iterations() * static_cast<int64_t>(A.size()) *
                            static_cast<int64_t>(A.exceptional_count()));
}
BENCHMARK(BM_ConvolutionPass);

void BM_FieldFormula(benchmark::State& state) {
    FieldSpec F = FieldSpec::make(3, 3);
    FieldElem c = F.from_index(11);
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_k_field_formula(F, c, 12));
    }
}
BENCHMARK(BM_FieldFormula);

void BM_ReduceProduct(benchmark::State& state) {
    RingSpec R = RingSpec::zn(15);
    Quaternion c = q_zero(R);
    for (auto _ : state) {
        benchmark::DoNotOptimize(phi_k_reduce(R, c, 2, Method::Auto, 1));
    }
}
BENCHMARK(BM_ReduceProduct);

}  // namespace

BENCHMARK_MAIN();
