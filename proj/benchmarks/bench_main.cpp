/*
 * Copyright 2026 The quasiskein Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#include "quasiskein/mpath.hpp"
#include "quasiskein/skein.hpp"
#include "quasiskein/snakeband.hpp"
#include "support/oracle.hpp"

#include <benchmark/benchmark.h>

namespace {

using qs::testing::SpecGenerator;

qs::CurveSpec make_curve(qs::CurveKind kind, int d) {
    SpecGenerator gen(static_cast<unsigned>(d) * 31U + static_cast<unsigned>(kind));
    return gen.make(kind, d, true);
}

void BM_CountMatchings(benchmark::State& state) {
    qs::TiledGraph g = qs::build_graph(make_curve(qs::CurveKind::loop, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(qs::count_matchings(g));
}
BENCHMARK(BM_CountMatchings)->RangeMultiplier(2)->Range(4, 64);

void BM_MatchingEnumerator(benchmark::State& state) {
    SpecGenerator gen(11U);
    qs::LaminationSigns signs = gen.signs();
    qs::TiledGraph g = qs::build_graph(make_curve(qs::CurveKind::arc, static_cast<int>(state.range(0))));
    for (auto _ : state) benchmark::DoNotOptimize(qs::matching_enumerator(g, signs));
}
BENCHMARK(BM_MatchingEnumerator)->DenseRange(2, 12, 2);

void BM_ChiMpath(benchmark::State& state) {
    SpecGenerator gen(12U);
    qs::LaminationSigns signs = gen.signs();
    qs::CurveSpec s = make_curve(qs::CurveKind::onesided, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qs::chi(s, signs, true));
}
BENCHMARK(BM_ChiMpath)->DenseRange(2, 12, 2);

void BM_LaurentMultiply(benchmark::State& state) {
    SpecGenerator gen(13U);
    qs::LaurentPoly a, b;
    for (int i = 0; i < state.range(0); ++i) {
        a += gen.poly(4);
        b += gen.poly(4);
    }
    for (auto _ : state) benchmark::DoNotOptimize(a * b);
    state.counters["terms"] = static_cast<double>(a.size() + b.size());
}
BENCHMARK(BM_LaurentMultiply)->RangeMultiplier(4)->Range(1, 64);

void BM_SquareRelation(benchmark::State& state) {
    SpecGenerator gen(14U);
    qs::LaminationSigns signs = gen.signs();
    qs::CurveSpec s = make_curve(qs::CurveKind::onesided, static_cast<int>(state.range(0)));
    for (auto _ : state) benchmark::DoNotOptimize(qs::verify_square_relation(s, signs, qs::EvalMode::sqrt));
}
BENCHMARK(BM_SquareRelation)->DenseRange(1, 6);

}  // namespace
BENCHMARK_MAIN();
