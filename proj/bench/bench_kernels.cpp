// Serial reference against the OpenMP backend on the same kernels.

#include <benchmark/benchmark.h>

#include "iwahori/formulas.hpp"
#include "iwahori/parallel.hpp"
#include "iwahori/verify.hpp"

using namespace iwahori;

namespace {

const char* kTypes[] = {"A2", "B2", "G2", "A3"};

void BM_TheoremSuite(benchmark::State& state, Backend backend) {
  const auto d = WeylDatum::make(CartanType::parse(kTypes[state.range(0)]));
  VerifyOptions o;
  o.backend = backend;
  o.box_radius = 1;
  for (auto _ : state) {
    for (const auto& r : run_suite(Suite::Theorem, *d, o)) benchmark::DoNotOptimize(r.passed);
  }
  state.SetLabel(d->type().to_string());
}

void BM_TableRows(benchmark::State& state, Backend backend) {
  const auto d = WeylDatum::make(CartanType::parse(kTypes[state.range(0)]));
  const auto lambdas = dominant_up_to_height(d->rank(), 3);
  const auto chars = HeckeCharacter::all(d->rs());
  const std::size_t n = lambdas.size() * chars.size();
  for (auto _ : state) {
    auto rows = parallel_map(
        n,
        [&](std::size_t k) {
          return theorem_lhs(*d, chars[k / lambdas.size()], lambdas[k % lambdas.size()]).to_string();
        },
        backend);
    benchmark::DoNotOptimize(rows.data());
  }
  state.SetLabel(d->type().to_string());
  state.SetItemsProcessed(static_cast<std::int64_t>(state.iterations() * n));
}

}  // namespace

BENCHMARK_CAPTURE(BM_TheoremSuite, serial, Backend::Serial)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TheoremSuite, openmp, Backend::OpenMP)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TableRows, serial, Backend::Serial)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);
BENCHMARK_CAPTURE(BM_TableRows, openmp, Backend::OpenMP)->DenseRange(0, 3)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
