#include <benchmark/benchmark.h>

#include "realreg/analysis.hpp"
#include "realreg/intersection.hpp"
#include "realreg/omega_regex.hpp"

using namespace realreg;

namespace {

BuchiAutomaton regex(const char* text) { return regex_to_automaton(parse_omega_regex(text)); }

void BM_PrefixCounts(benchmark::State& state) {
  const auto a = close(regex("base 3 arity 1: (0|2)*1(0|1)*2^w"));
  for (auto _ : state) benchmark::DoNotOptimize(prefix_counts(a, static_cast<std::size_t>(state.range(0))));
}
BENCHMARK(BM_PrefixCounts)->Arg(64)->Arg(256)->Arg(1024);

void BM_ClassifySparse(benchmark::State& state) {
  const auto a = regex("base 3 arity 1: 0*10*20*10*2^w");
  for (auto _ : state) benchmark::DoNotOptimize(classify_sparsity(a));
}
BENCHMARK(BM_ClassifySparse);

void BM_ClassifyNonSparse(benchmark::State& state) {
  const auto a = regex("base 4 arity 1: (0|13)*(2|31)^w");
  for (auto _ : state) benchmark::DoNotOptimize(classify_sparsity(a));
}
BENCHMARK(BM_ClassifyNonSparse);

void BM_Intersect(benchmark::State& state) {
  TwoBaseProblem p = parse_problem(
      "S base 2\nchain c0=0 (c1=1,d1=1)\n"
      "T base 3\nchain c0=0 (c1=1,d1=1)\n"
      "height 60\n");
  p.height = static_cast<long>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(intersect_sparse(p));
}
BENCHMARK(BM_Intersect)->Arg(20)->Arg(60);

}  // namespace

BENCHMARK_MAIN();
