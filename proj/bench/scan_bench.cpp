// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "coxbound/ball.hpp"
#include "coxbound/scan.hpp"
#include "coxbound/system.hpp"

namespace {

using namespace coxbound;

CoxeterSystem pentagon() {
  const Order inf = kInfinite;
  return make_system(CoxeterMatrix{{1, 2, inf, inf, 2},
                                   {2, 1, 2, inf, inf},
                                   {inf, 2, 1, 2, inf},
                                   {inf, inf, 2, 1, 2},
                                   {2, inf, inf, 2, 1}},
                     default_labels(5));
}

template <bool Parallel>
void ProxyDistances(benchmark::State& state) {
  const CoxeterSystem s = pentagon();
  const std::vector<Word> elements = ball(s, static_cast<std::size_t>(state.range(0)));
  const sim::Ray a{{}, {0, 2}};
  const sim::Ray b{{1}, {0, 3}};
  for (auto _ : state) {
    auto out = Parallel ? scan::proxy_distances_parallel(s, elements, a, b, 32)
                        : scan::proxy_distances_serial(s, elements, a, b, 32);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * elements.size()));
}

template <bool Parallel>
void DescentWitnesses(benchmark::State& state) {
  const CoxeterSystem s = pentagon();
  const std::vector<Word> elements = ball(s, static_cast<std::size_t>(state.range(0)));
  const std::vector<Word> candidates = ball(s, 11);
  for (auto _ : state) {
    auto out = Parallel ? scan::descent_witnesses_parallel(s, elements, candidates, 0)
                        : scan::descent_witnesses_serial(s, elements, candidates, 0);
    benchmark::DoNotOptimize(out);
  }
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * scan::pair_count(elements.size())));
}

}  // namespace

BENCHMARK(ProxyDistances<false>)->Name("proxy_distances/serial")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(ProxyDistances<true>)->Name("proxy_distances/parallel")->Arg(4)->Arg(6)->Unit(benchmark::kMillisecond);
BENCHMARK(DescentWitnesses<false>)->Name("descent_witnesses/serial")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);
BENCHMARK(DescentWitnesses<true>)->Name("descent_witnesses/parallel")->Arg(2)->Arg(3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
