#include "kma/embedding.hpp"
#include "kma/gcm.hpp"
#include "kma/roots.hpp"
#include "kma/su2flow.hpp"
#include "kma/weyl.hpp"

#include <benchmark/benchmark.h>

using namespace kma;

namespace {

void BM_RealRootsRank2(benchmark::State& state) {
  const GCM a = GCM::rank2(3, 3);
  for (auto _ : state) benchmark::DoNotOptimize(real_roots_up_to_height(a, state.range(0)));
}
BENCHMARK(BM_RealRootsRank2)->Arg(8)->Arg(32)->Arg(128);

void BM_RealRootsFeingoldFrenkel(benchmark::State& state) {
  const GCM a = fixtures::feingold_frenkel();
  for (auto _ : state) benchmark::DoNotOptimize(real_roots_up_to_height(a, state.range(0)));
}
BENCHMARK(BM_RealRootsFeingoldFrenkel)->Arg(4)->Arg(8)->Arg(12);

void BM_ExpRotation(benchmark::State& state) {
  const GCM a = fixtures::feingold_frenkel();
  const SliceVector v{2, {0.3, -0.7, 0.1}, 0.2, 0.9};
  for (auto _ : state) benchmark::DoNotOptimize(exp_rotation(a, 2, 1.1, 0.4, v));
}
BENCHMARK(BM_ExpRotation);

void BM_Reduce(benchmark::State& state) {
  const GCM a = fixtures::feingold_frenkel();
  const WeylWord w = parse_word("1 2 3 2 1 2 3 1 2 1 3 2 3 1");
  for (auto _ : state) benchmark::DoNotOptimize(reduce(a, w));
}
BENCHMARK(BM_Reduce);

void BM_TessellateRank2(benchmark::State& state) {
  const CartanData d(GCM::rank2(3, 3));
  for (auto _ : state) benchmark::DoNotOptimize(tessellate(d, 1, -1.0, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TessellateRank2)->Arg(4)->Arg(16)->Arg(64);

void BM_TessellateFeingoldFrenkel(benchmark::State& state) {
  const CartanData d(fixtures::feingold_frenkel());
  for (auto _ : state) benchmark::DoNotOptimize(tessellate(d, 1, -1.0, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_TessellateFeingoldFrenkel)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
