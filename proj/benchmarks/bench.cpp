// Microbenchmarks for the costly paths: state construction, correlation
// matrices, single-angle intensities (cross-checked and not), angular
// profiles and the path ledger.

#include <benchmark/benchmark.h>

#include <numbers>
#include <vector>

#include "wchain/geometry.hpp"
#include "wchain/intensity.hpp"
#include "wchain/paths.hpp"
#include "wchain/scan.hpp"
#include "wchain/state.hpp"

namespace {

constexpr double kPi = std::numbers::pi;

wchain::RawStateSpec symmetric_spec(int n_excited, int n_atoms) {
  std::vector<wchain::SpecTerm> terms;
  for (const auto& config : wchain::configurations_with_excitations(n_atoms, n_excited)) {
    terms.push_back({1, config});
  }
  return wchain::RawStateSpec(std::move(terms));
}

void bm_make_symmetric(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(wchain::make_symmetric_w(n / 2, n));
  }
}
BENCHMARK(bm_make_symmetric)->Arg(8)->Arg(12)->Arg(16);

void bm_correlation_matrix(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = wchain::make_symmetric_w(n / 2, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wchain::CorrelationMatrix(w));
  }
}
BENCHMARK(bm_correlation_matrix)->Arg(6)->Arg(10)->Arg(14);

void bm_intensity_checked(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = wchain::make_symmetric_w(n / 2, n);
  const wchain::ChainGeometry geom(n, 1.5 * kPi);
  const wchain::DetectionDirection dir(0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wchain::intensity(w, geom, dir));
  }
}
BENCHMARK(bm_intensity_checked)->Arg(6)->Arg(10)->Arg(14);

void bm_intensity_from_correlations(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = wchain::make_symmetric_w(n / 2, n);
  const wchain::CorrelationMatrix corr(w);
  const wchain::ChainGeometry geom(n, 1.5 * kPi);
  const wchain::DetectionDirection dir(0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wchain::intensity_from_correlations(corr, geom, dir));
  }
}
BENCHMARK(bm_intensity_from_correlations)->Arg(6)->Arg(10)->Arg(14);

void bm_profile(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto w = wchain::make_symmetric_w(n / 2, n);
  const wchain::ChainGeometry geom(n, 1.5 * kPi);
  const auto grid = wchain::scan::uniform_grid(-kPi, kPi, 1001);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wchain::intensity_profile(w, geom, grid));
  }
}
BENCHMARK(bm_profile)->Arg(6)->Arg(10);

void bm_closed_form(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const wchain::ChainGeometry geom(n, 1.5 * kPi);
  const wchain::DetectionDirection dir(0.37);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wchain::w_intensity_closed(n / 2, n, geom, dir));
  }
}
BENCHMARK(bm_closed_form)->Arg(6)->Arg(14);

void bm_build_ledger(benchmark::State& state) {
  const int n = static_cast<int>(state.range(0));
  const auto spec = symmetric_spec(n / 2, n);
  for (auto _ : state) {
    benchmark::DoNotOptimize(wchain::build_ledger(spec));
  }
}
BENCHMARK(bm_build_ledger)->Arg(6)->Arg(10)->Arg(14);

}  // namespace

BENCHMARK_MAIN();
