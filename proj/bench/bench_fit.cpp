// Parallel fit and batch kernels against their serial references.

#include <benchmark/benchmark.h>

#include <vector>

#include "trisectagon/construct.hpp"
#include "trisectagon/general.hpp"
#include "trisectagon/verify.hpp"

namespace {

using namespace trisectagon;

std::array<mp::PrecComplex, 3> sample_points(int p, const mp::PrecisionContext& ctx) {
  const auto decomposition = general::order3_cosets(p);
  return general::cardano_from_coset(p, decomposition.cosets.back(), ctx).vertices;
}

template <bool Parallel>
void BM_fit(benchmark::State& state) {
  const int p = static_cast<int>(state.range(0));
  const auto ctx = mp::make_context(static_cast<int>(state.range(1)));
  const auto points = sample_points(p, ctx);
  for (auto _ : state) {
    auto fit = Parallel ? verify::fit_to_polygon(points, p, ctx) : verify::fit_to_polygon_serial(points, p, ctx);
    benchmark::DoNotOptimize(fit);
  }
  state.SetLabel("p=" + std::to_string(p));
}

std::vector<construct::TriangleConstruction> batch(const mp::PrecisionContext& ctx) {
  std::vector<construct::TriangleConstruction> out;
  out.push_back(construct::heptagon_type1(ctx));
  for (int k = 0; k < 6; ++k) out.push_back(construct::heptagon_type2(k, ctx));
  for (auto family : {construct::Family::plus, construct::Family::minus})
    for (bool mirror : {false, true}) out.push_back(construct::tridecagon_type1(family, mirror, ctx));
  for (int k = 0; k < 12; ++k) {
    out.push_back(construct::tridecagon_type2(k, ctx));
    out.push_back(construct::type3_from(out.back()));
  }
  return out;
}

template <bool Parallel>
void BM_batch(benchmark::State& state) {
  const auto ctx = mp::make_context(static_cast<int>(state.range(0)));
  const auto items = batch(ctx);
  for (auto _ : state) {
    auto checks = Parallel ? verify::verify_batch(items) : verify::verify_batch_serial(items);
    benchmark::DoNotOptimize(checks);
  }
  state.SetItemsProcessed(state.iterations() * static_cast<std::int64_t>(items.size()));
}

}  // namespace

BENCHMARK(BM_fit<false>)->Name("fit/serial")->ArgsProduct({{13, 31, 97}, {50, 200}})->Unit(benchmark::kMicrosecond);
BENCHMARK(BM_fit<true>)->Name("fit/openmp")->ArgsProduct({{13, 31, 97}, {50, 200}})->Unit(benchmark::kMicrosecond)->UseRealTime();
BENCHMARK(BM_batch<false>)->Name("batch/serial")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_batch<true>)->Name("batch/openmp")->Arg(50)->Arg(200)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
