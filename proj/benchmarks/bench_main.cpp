#include <benchmark/benchmark.h>

#include "pcg/pcg.hpp"

using namespace pcg;

static void BM_QuotientAlpha(benchmark::State& state) {
  const auto profile = order_profile(GroupSpec::cyclic(static_cast<u64>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mis_quotient(build_quotient(profile)).alpha);
  }
}
BENCHMARK(BM_QuotientAlpha)->Arg(900)->Arg(1155)->Arg(1680)->Arg(30030);

static void BM_OracleAlpha(benchmark::State& state) {
  const auto theta = build_theta(GroupSpec::cyclic(static_cast<u64>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(mis_oracle(theta.graph(), {2000}).alpha);
  }
}
BENCHMARK(BM_OracleAlpha)->Arg(60)->Arg(120)->Arg(360)->Unit(benchmark::kMillisecond);

static void BM_BuildTheta(benchmark::State& state) {
  const auto spec = GroupSpec::cyclic(static_cast<u64>(state.range(0)));
  for (auto _ : state) {
    benchmark::DoNotOptimize(build_theta(spec).graph().edge_count());
  }
}
BENCHMARK(BM_BuildTheta)->Arg(120)->Arg(1000)->Unit(benchmark::kMillisecond);

static void BM_SplitObstruction(benchmark::State& state) {
  const auto theta = build_theta(GroupSpec::cyclic(static_cast<u64>(state.range(0))));
  for (auto _ : state) {
    benchmark::DoNotOptimize(find_split_obstruction(theta.graph()).has_value());
  }
}
// 64 = 2^6 is split, so the search has to exhaust the graph.
BENCHMARK(BM_SplitObstruction)->Arg(64)->Arg(120)->Unit(benchmark::kMillisecond);

static void BM_DihedralJoinIsomorphism(benchmark::State& state) {
  const u64 n = static_cast<u64>(state.range(0));
  const auto dihedral = build_theta(GroupSpec::dihedral(n)).graph();
  const auto expected = join(build_theta(GroupSpec::cyclic(n)).graph(), Graph::complete(n));
  for (auto _ : state) {
    benchmark::DoNotOptimize(is_isomorphic(dihedral, expected));
  }
}
BENCHMARK(BM_DihedralJoinIsomorphism)->Arg(12)->Arg(40)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
