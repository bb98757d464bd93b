#include <benchmark/benchmark.h>

#include <matchseq/decompositions.hpp>
#include <matchseq/fixtures.hpp>
#include <matchseq/hypergraph.hpp>
#include <matchseq/index_maps.hpp>
#include <matchseq/oracle.hpp>
#include <matchseq/ordering.hpp>
#include <matchseq/theorem.hpp>

using namespace matchseq;

static void BM_sigma(benchmark::State& state) {
    long long t = state.range(0);
    for (auto _ : state) benchmark::DoNotOptimize(sigma_ordering(t / 3 + 1, t));
}
BENCHMARK(BM_sigma)->Arg(64)->Arg(1024)->Arg(65536);

static void BM_construct(benchmark::State& state) {
    auto spec = PartiteSpec::create(1, {2, 2, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(construct(spec, 5, false));
}
BENCHMARK(BM_construct)->Arg(4)->Arg(8)->Arg(16);

static void BM_eval_ms(benchmark::State& state) {
    auto spec = PartiteSpec::create(1, {2, 2, static_cast<int>(state.range(0))});
    auto h = build_complete_multipartite(spec);
    auto cert = construct(spec, 5, false);
    for (auto _ : state) benchmark::DoNotOptimize(eval_ms(h, cert.ordering, 5, false));
}
BENCHMARK(BM_eval_ms)->Arg(4)->Arg(16);

static void BM_refined_family(benchmark::State& state) {
    auto spec = PartiteSpec::create(2, {3, 3, static_cast<int>(state.range(0))});
    for (auto _ : state) benchmark::DoNotOptimize(refined_family(spec));
}
BENCHMARK(BM_refined_family)->Arg(3)->Arg(9)->Arg(27);

static void BM_oracle_bipartite(benchmark::State& state) {
    auto h = build_complete_multipartite(PartiteSpec::create(1, {2, static_cast<int>(state.range(0))}));
    for (auto _ : state) benchmark::DoNotOptimize(exact_ms(h, 1, false));
}
BENCHMARK(BM_oracle_bipartite)->Arg(3)->Arg(4)->Arg(5);

static void BM_oracle_gallery(benchmark::State& state) {
    auto h = fixture_2h();
    for (auto _ : state) benchmark::DoNotOptimize(exact_ms(h, 1, false));
}
BENCHMARK(BM_oracle_gallery);

BENCHMARK_MAIN();
