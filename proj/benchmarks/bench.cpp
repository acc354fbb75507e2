#include <benchmark/benchmark.h>

#include "chiforb/constructive.hpp"
#include "chiforb/detect.hpp"
#include "chiforb/exact.hpp"
#include "chiforb/extension.hpp"
#include "chiforb/generators.hpp"
#include "chiforb/patterns.hpp"

using namespace chiforb;

namespace {

OrientedGraph sample(int n, double p, std::uint64_t seed) {
  SplitMix64 rng(seed);
  return random_orientation(n, p, rng);
}

void bm_chi_exact_gadget(benchmark::State& state) {
  auto g = two_pentagon_gadget();
  for (auto _ : state) {
    auto r = chi_exact_full(g);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(bm_chi_exact_gadget);

void bm_chi_exact_random(benchmark::State& state) {
  auto g = sample(int(state.range(0)), 0.4, 7);
  for (auto _ : state) {
    auto r = chi_exact_full(g);
    benchmark::DoNotOptimize(r.value);
  }
}
BENCHMARK(bm_chi_exact_random)->Arg(10)->Arg(14)->Arg(18);

void bm_find_induced_p21(benchmark::State& state) {
  auto g = sample(int(state.range(0)), 0.3, 11);
  auto pat = PatternKind::p_plus_21().graph();
  for (auto _ : state) {
    auto e = find_induced(g, pat);
    benchmark::DoNotOptimize(e);
  }
}
BENCHMARK(bm_find_induced_p21)->Arg(20)->Arg(40)->Arg(60);

void bm_find_odd_hole(benchmark::State& state) {
  auto g = sample(int(state.range(0)), 0.25, 3);
  for (auto _ : state) {
    auto h = find_odd_hole(g);
    benchmark::DoNotOptimize(h);
  }
}
BENCHMARK(bm_find_odd_hole)->Arg(16)->Arg(24)->Arg(32);

void bm_random_f_free(benchmark::State& state) {
  std::vector<PatternKind> forbid{PatternKind::tt(3),
                                  PatternKind::p_plus_21()};
  std::uint64_t seed = 0;
  for (auto _ : state) {
    auto g = random_f_free(int(state.range(0)), 0.3, seed++, forbid);
    benchmark::DoNotOptimize(g);
  }
}
BENCHMARK(bm_random_f_free)->Arg(12)->Arg(16);

void bm_color_tt3_p21(benchmark::State& state) {
  // Blow-up of the gadget: the structured colouring at its intended scale.
  std::vector<int> sizes(10, int(state.range(0)));
  auto g = blow_up(two_pentagon_gadget(), sizes);
  for (auto _ : state) {
    auto c = color_tt3_p21(g);
    benchmark::DoNotOptimize(c);
  }
}
BENCHMARK(bm_color_tt3_p21)->Arg(1)->Arg(3)->Arg(6);

}  // namespace

BENCHMARK_MAIN();
