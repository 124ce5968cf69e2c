// Parallel kernels against their serial references. Arguments are n.

#include <benchmark/benchmark.h>

#include "hess/gkm.hpp"
#include "hess/hessenberg.hpp"
#include "hess/symfunc.hpp"

namespace {

using namespace hess;

// h = (2, n, ..., n): dense incomparability graph, so most colorings are proper
Graph coloring_graph(int n) { return inc_graph(poset_of(one_row_form(n, 2))); }

void BM_ColoringParallel(benchmark::State& state) {
  const auto g = coloring_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(csf_by_coloring(g));
}

void BM_ColoringSerial(benchmark::State& state) {
  const auto g = coloring_graph(static_cast<int>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(csf_by_coloring_serial(g));
}

// a degree-3 class that passes the check, so every edge is visited
GkmClass check_class(const HessenbergFunction& h) {
  auto c = class_x(h.n(), 2);
  c *= class_y_one_row(h, 2);
  c *= class_t(h.n(), 1);
  return c;
}

void BM_GkmCheckParallel(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = one_row_form(n, 2);
  const auto g = build_gkm_graph(h);
  const auto c = check_class(h);
  for (auto _ : state) benchmark::DoNotOptimize(check_gkm_condition(g, c));
}

void BM_GkmCheckSerial(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto h = one_row_form(n, 2);
  const auto g = build_gkm_graph(h);
  const auto c = check_class(h);
  for (auto _ : state) benchmark::DoNotOptimize(check_gkm_condition_serial(g, c));
}

}  // namespace

BENCHMARK(BM_ColoringParallel)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ColoringSerial)->DenseRange(5, 7)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GkmCheckParallel)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_GkmCheckSerial)->DenseRange(4, 6)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
