#include <benchmark/benchmark.h>

#include <string>
#include <vector>

#include "tnn/bruhat.hpp"
#include "tnn/homology.hpp"
#include "tnn/morse.hpp"
#include "tnn/qposet.hpp"

using namespace tnn;

namespace {

const std::vector<std::string> kTypes{"A3", "B3", "A4", "D4"};

void BM_BuildGroup(benchmark::State& state) {
  const auto& label = kTypes[static_cast<std::size_t>(state.range(0))];
  for (auto _ : state) {
    auto sys = CoxeterSystem::build(label);
    benchmark::DoNotOptimize(sys.order());
  }
  state.SetLabel(label);
}
BENCHMARK(BM_BuildGroup)->DenseRange(0, 3);

void BM_BruhatTable(benchmark::State& state) {
  const auto sys = CoxeterSystem::build(kTypes[static_cast<std::size_t>(state.range(0))]);
  for (auto _ : state) {
    BruhatOrder order(sys);
    benchmark::DoNotOptimize(order.dense());
  }
  state.SetLabel(sys.label());
}
BENCHMARK(BM_BruhatTable)->DenseRange(0, 3);

void BM_BuildQPoset(benchmark::State& state) {
  const auto sys = CoxeterSystem::build(state.range(0) == 0 ? "A3" : "B3");
  const BruhatOrder order(sys);
  for (auto _ : state) {
    auto q = QPoset::build(order, {});
    benchmark::DoNotOptimize(q.size());
  }
  state.SetLabel(sys.label() + " J={}");
}
BENCHMARK(BM_BuildQPoset)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MatchAllClosures(benchmark::State& state) {
  const auto sys = CoxeterSystem::build(state.range(0) == 0 ? "A3" : "B3");
  const BruhatOrder order(sys);
  const auto q = QPoset::build(order, {});
  for (auto _ : state) {
    std::size_t critical = 0;
    for (std::size_t c = 1; c < q.size(); ++c) critical += match_closure(q, c).matching.critical.size();
    benchmark::DoNotOptimize(critical);
  }
  state.SetLabel(sys.label() + " J={}");
}
BENCHMARK(BM_MatchAllClosures)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_BoundaryHomology(benchmark::State& state) {
  const auto sys = CoxeterSystem::build("A3");
  const BruhatOrder order(sys);
  const auto q = QPoset::build(order, {1, 3});
  const auto boundary = boundary_poset(q, q.top());
  for (auto _ : state) {
    auto betti = reduced_homology(boundary.hasse);
    benchmark::DoNotOptimize(betti.reduced_euler);
  }
  state.SetLabel("boundary of the Gr(2,4) top cell");
}
BENCHMARK(BM_BoundaryHomology)->Unit(benchmark::kMillisecond);

}  // namespace

// libbenchmark_main.a in this toolchain carries LTO bytecode from another
// compiler version, so the main comes from the header instead.
BENCHMARK_MAIN();
