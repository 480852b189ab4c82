#include <benchmark/benchmark.h>

#include "fidlab/fidlab.hpp"

using namespace fidlab;

namespace {

HermitianMatrix pd(int d, std::uint64_t seed) {
  Rng rng(seed);
  return random_psd(d, rng) + HermitianMatrix::identity(d) * 0.05;
}

template <Kind K>
void BM_Fidelity(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  Rng rng(1);
  const HermitianMatrix x = random_density(d, rng), y = random_density(d, rng);
  for (auto _ : state) benchmark::DoNotOptimize(fidelity(K, x, y));
}
BENCHMARK(BM_Fidelity<Kind::Max>)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_Fidelity<Kind::Min>)->Arg(2)->Arg(4)->Arg(8)->Arg(16);
BENCHMARK(BM_Fidelity<Kind::Half>)->Arg(2)->Arg(4)->Arg(8)->Arg(16);

void BM_ComposedSpectrum(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HermitianMatrix l0 = pd(d, 2), l1 = pd(d, 3);
  for (auto _ : state) benchmark::DoNotOptimize(composed_lyapunov_spectrum(l0, l1).values(0));
}
BENCHMARK(BM_ComposedSpectrum)->Arg(2)->Arg(4)->Arg(8);

void BM_PolarMin(benchmark::State& state) {
  const int d = static_cast<int>(state.range(0));
  const HermitianMatrix l0 = pd(d, 4), l1 = pd(d, 5);
  for (auto _ : state) benchmark::DoNotOptimize(polar_min(l0, l1));
}
BENCHMARK(BM_PolarMin)->Arg(2)->Arg(3)->Arg(4)->Unit(benchmark::kMicrosecond);

void BM_PolarMinSearchQubit(benchmark::State& state) {
  const HermitianMatrix l0 = pd(2, 4), l1 = pd(2, 5);
  for (auto _ : state) benchmark::DoNotOptimize(polar_min_search(l0, l1));
}
BENCHMARK(BM_PolarMinSearchQubit)->Unit(benchmark::kMicrosecond);

void BM_UniqueRootW(benchmark::State& state) {
  double x = -3.0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(unique_root_w(x, 0.7));
    x = x > 3.0 ? -3.0 : x + 0.01;
  }
}
BENCHMARK(BM_UniqueRootW);

void BM_W2Oracle(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(w2_min_oracle(1.0, 0.7));
}
BENCHMARK(BM_W2Oracle)->Unit(benchmark::kMicrosecond);

void BM_PovmLowerBound(benchmark::State& state) {
  const HermitianMatrix l0 = pd(2, 6), l1 = pd(2, 7);
  const int trials = static_cast<int>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(povm_lower_bound(l0, l1, 4, trials, 1));
}
BENCHMARK(BM_PovmLowerBound)->Arg(3)->Arg(6)->Unit(benchmark::kMillisecond);

void BM_DualityCertificate(benchmark::State& state) {
  Rng rng(8);
  const HermitianMatrix x = random_pd_density(3, rng), y = random_pd_density(3, rng);
  const Kind k = static_cast<Kind>(state.range(0));
  for (auto _ : state) benchmark::DoNotOptimize(duality_certificate(k, x, y).gap);
}
BENCHMARK(BM_DualityCertificate)->DenseRange(0, 2)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
