//  Copyright 2026 The almonoid Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#include <benchmark/benchmark.h>

#include "almonoid/builtins.hpp"
#include "almonoid/catalog.hpp"
#include "almonoid/checker.hpp"
#include "almonoid/congruence.hpp"
#include "almonoid/constructions.hpp"
#include "almonoid/profiles.hpp"
#include "almonoid/search.hpp"

using namespace almonoid;

static void BM_CatalogIntWindow(benchmark::State& state) {
  const Model m(make_int_window(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto reports = run_catalog(m);
    benchmark::DoNotOptimize(reports);
  }
}
BENCHMARK(BM_CatalogIntWindow)->Arg(10)->Arg(20)->Arg(40);

static void BM_ContractionClaimParallel(benchmark::State& state) {
  const Model m(make_int_window(40));
  CheckOptions opts;
  opts.jobs = static_cast<int>(state.range(0));
  opts.parallel_threshold = 1;
  const Claim* c = catalog_claim("CONTR_plus");
  for (auto _ : state) {
    auto r = check_claim(m, *c, opts);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_ContractionClaimParallel)->Arg(1)->Arg(2)->Arg(4);

static void BM_AlMonoidProfileBoolean(benchmark::State& state) {
  const Model m(make_boolean(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto rep = check_al_monoid(m);
    benchmark::DoNotOptimize(rep);
  }
}
BENCHMARK(BM_AlMonoidProfileBoolean)->Arg(2)->Arg(3)->Arg(4);

static void BM_EnumerateAlMonoids(benchmark::State& state) {
  SearchSpec spec;
  spec.size = static_cast<int>(state.range(0));
  spec.canonical = true;
  for (auto _ : state) {
    auto models = enumerate_all(spec);
    benchmark::DoNotOptimize(models);
  }
}
BENCHMARK(BM_EnumerateAlMonoids)->DenseRange(3, 6);

static void BM_CanonicalForm(benchmark::State& state) {
  const FiniteAlgebra a =
      product(make_boolean(1), make_mv_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto key = canonical_form(a);
    benchmark::DoNotOptimize(key);
  }
}
BENCHMARK(BM_CanonicalForm)->Arg(2)->Arg(3)->Arg(4);

static void BM_CongruenceLattice(benchmark::State& state) {
  const FiniteAlgebra a =
      product(make_boolean(1), make_mv_chain(static_cast<int>(state.range(0))));
  for (auto _ : state) {
    auto cons = all_congruences(a);
    benchmark::DoNotOptimize(cons);
  }
}
BENCHMARK(BM_CongruenceLattice)->Arg(2)->Arg(3)->Arg(4);

static void BM_DrlResiduals(benchmark::State& state) {
  const FiniteAlgebra a = make_mv_chain(static_cast<int>(state.range(0)));
  for (auto _ : state) {
    auto r = compute_residuals(a);
    benchmark::DoNotOptimize(r);
  }
}
BENCHMARK(BM_DrlResiduals)->Arg(8)->Arg(16)->Arg(32);

BENCHMARK_MAIN();
