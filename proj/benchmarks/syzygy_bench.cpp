#include <benchmark/benchmark.h>

#include "syzygy/betti.hpp"
#include "syzygy/constructions.hpp"
#include "syzygy/hilbert.hpp"
#include "syzygy/matrix.hpp"
#include "syzygy/random.hpp"

using namespace syzygy;

namespace {

const PrimeField kF;

void BM_BuchbergerRnc(benchmark::State& state) {
  auto c = rational_normal_curve(kF, static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(c.ideal));
}
BENCHMARK(BM_BuchbergerRnc)->DenseRange(4, 10, 2)->Unit(benchmark::kMillisecond);

void BM_BuchbergerRncOverQ(benchmark::State& state) {
  auto c = rational_normal_curve(RationalField(), static_cast<unsigned>(state.range(0)));
  for (auto _ : state) benchmark::DoNotOptimize(buchberger(c.ideal));
}
BENCHMARK(BM_BuchbergerRncOverQ)->DenseRange(4, 8, 2)->Unit(benchmark::kMillisecond);

void BM_HilbertScroll(benchmark::State& state) {
  const unsigned e = static_cast<unsigned>(state.range(0));
  auto g = buchberger(scroll(kF, ScrollSpec({1, 1, e - 1})).ideal);
  for (auto _ : state) benchmark::DoNotOptimize(hilbert_data(g));
}
BENCHMARK(BM_HilbertScroll)->DenseRange(3, 7, 2)->Unit(benchmark::kMicrosecond);

void BM_BettiTable(benchmark::State& state) {
  const unsigned e = static_cast<unsigned>(state.range(0));
  auto g = buchberger(almost_minimal_curve(kF, e).ideal);
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(g));
}
BENCHMARK(BM_BettiTable)->DenseRange(3, 6)->Unit(benchmark::kMillisecond);

void BM_BettiTableWithoutReduction(benchmark::State& state) {
  const unsigned e = static_cast<unsigned>(state.range(0));
  auto g = buchberger(almost_minimal_curve(kF, e).ideal);
  BettiOptions plain;
  plain.reduce = false;
  for (auto _ : state) benchmark::DoNotOptimize(betti_table(g, plain));
}
BENCHMARK(BM_BettiTableWithoutReduction)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_GeneralPoints(benchmark::State& state) {
  const unsigned e = static_cast<unsigned>(state.range(0));
  std::uint64_t seed = 0;
  for (auto _ : state) benchmark::DoNotOptimize(general_points(kF, e, 2 * e + 1, ++seed));
}
BENCHMARK(BM_GeneralPoints)->DenseRange(3, 5)->Unit(benchmark::kMillisecond);

void BM_InnerProjection(benchmark::State& state) {
  auto c = scroll(kF, ScrollSpec({1, static_cast<unsigned>(state.range(0))}));
  Rng rng(1);
  auto q = *smooth_point(c, rng);
  for (auto _ : state) benchmark::DoNotOptimize(inner_projection(c, q));
}
BENCHMARK(BM_InnerProjection)->DenseRange(2, 4)->Unit(benchmark::kMillisecond);

void BM_SparseRank(benchmark::State& state) {
  const std::size_t n = static_cast<std::size_t>(state.range(0));
  Rng rng(3);
  SparseMatrix<PrimeField> m(kF, n, n);
  for (std::size_t c = 0; c < n; ++c)
    for (int k = 0; k < 4; ++k) m.add(static_cast<std::size_t>(rng.uniform(0, static_cast<std::int64_t>(n) - 1)), c, kF.random_nonzero(rng));
  for (auto _ : state) benchmark::DoNotOptimize(m.rank());
}
BENCHMARK(BM_SparseRank)->RangeMultiplier(4)->Range(64, 1024)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
