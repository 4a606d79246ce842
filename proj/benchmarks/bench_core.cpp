// Copyright 2026 The phasemoments Authors
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

#include <complex>

#include <benchmark/benchmark.h>

#include "phasemoments/phasemoments.hpp"

namespace {

using Complex = std::complex<double>;
namespace pv = phasemoments::povm;
namespace q = phasemoments::quadrature;

void BM_MomentMatrixElement(benchmark::State &state) {
    const auto s = static_cast<unsigned>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pv::moment_matrix_element(s, 3, 2, 7, 8));
    }
}
BENCHMARK(BM_MomentMatrixElement)->Arg(0)->Arg(6)->Arg(30);

void BM_DisplacementColumn(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phasemoments::specfun::displacement_column(2, Complex{0.7, -1.1}, d));
    }
}
BENCHMARK(BM_DisplacementColumn)->Arg(8)->Arg(32)->Arg(128);

void BM_GaussLaguerre(benchmark::State &state) {
    const auto n = static_cast<int>(state.range(0));
    double alpha = 0.0;
    for (auto _ : state) {
        // Vary alpha so the rule cache is bypassed.
        alpha = alpha > 0.5 ? 0.0 : alpha + 1e-9;
        benchmark::DoNotOptimize(q::gauss_laguerre(n, alpha));
    }
}
BENCHMARK(BM_GaussLaguerre)->Arg(40)->Arg(80);

void BM_PovmElementDisk(benchmark::State &state) {
    const auto d = static_cast<std::size_t>(state.range(0));
    for (auto _ : state) {
        benchmark::DoNotOptimize(pv::povm_element(1, q::Disk{{0.0, 0.0}, 1.0}, d));
    }
}
BENCHMARK(BM_PovmElementDisk)->Arg(4)->Arg(16)->Unit(benchmark::kMillisecond);

void BM_SampleOutcomes(benchmark::State &state) {
    const pv::FockVector phi = pv::FockVector::number_state(0, 1);
    for (auto _ : state) {
        benchmark::DoNotOptimize(pv::sample_outcomes(1, phi, static_cast<std::size_t>(state.range(0)), 7));
    }
    state.SetItemsProcessed(state.iterations() * state.range(0));
}
BENCHMARK(BM_SampleOutcomes)->Arg(10000)->Unit(benchmark::kMillisecond);

void BM_PositionDensity(benchmark::State &state) {
    const auto phi = phasemoments::margins::WavefunctionRep::fock(pv::FockVector::number_state(2, 3));
    for (auto _ : state) {
        benchmark::DoNotOptimize(phasemoments::margins::unsharp_position_density(static_cast<unsigned>(state.range(0)), phi, 0.3));
    }
}
BENCHMARK(BM_PositionDensity)->Arg(0)->Arg(3);

} // namespace
BENCHMARK_MAIN();
