// Serial vs parallel for the OpenMP kernels. Arg 0 = serial, 1 = parallel.
#include <benchmark/benchmark.h>

#include "tamb/free_tambara.hpp"
#include "tamb/green.hpp"
#include "tamb/xi.hpp"

using namespace tamb;

namespace {

ExecPolicy policy(const benchmark::State& s) { return s.range(0) ? ExecPolicy::parallel : ExecPolicy::serial; }

GSet free_plus_point(int n) {
  auto g = cyclic_group(n);
  return coproduct(make_orbit(g, trivial_subgroup(g)), GSet::point(g)).object;
}

void BM_verify(benchmark::State& s) {
  auto T = free_plus_point(2);
  for (auto _ : s) benchmark::DoNotOptimize(verify_semi_tambara(T, VerifyOptions{3, 2, false, policy(s)}));
}

void BM_ft_table(benchmark::State& s) {
  auto T = free_plus_point(4);
  for (auto _ : s) benchmark::DoNotOptimize(ft_table(T, 2, policy(s)));
}

void BM_xi_sweep(benchmark::State& s) {
  auto T = free_plus_point(3);
  for (auto _ : s) benchmark::DoNotOptimize(xi_naturality_sweep(T, 3, false, policy(s)));
}

void BM_enumerate(benchmark::State& s) {
  for (auto _ : s) benchmark::DoNotOptimize(enumerate_63(2, 2, 3, policy(s)));
}

}  // namespace

BENCHMARK(BM_verify)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ft_table)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_xi_sweep)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_enumerate)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
