#include <benchmark/benchmark.h>

#include <random>

#include "hecke/elimination.hpp"
#include "hecke/nichols.hpp"
#include "hecke/report.hpp"

using namespace hecke;

namespace {

Mat random_rank_deficient(std::size_t n, std::uint32_t seed) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> pct(0, 99), num(-5, 5), den(1, 4);
  const std::size_t k = n * 3 / 4;
  Mat a(n, k), b(k, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < k; ++j)
      if (pct(rng) < 20) a(i, j) = Scalar(num(rng), den(rng)), a(i, j).canonicalize();
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (pct(rng) < 20) b(i, j) = Scalar(num(rng), den(rng)), b(i, j).canonicalize();
  return a * b;
}

std::vector<SparseVec> rows_of(const Mat& m) {
  std::vector<SparseVec> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) rows.push_back(to_sparse(m.row(i)));
  return rows;
}

void BM_ReferenceRref(benchmark::State& state) {
  const Mat m = random_rank_deficient(static_cast<std::size_t>(state.range(0)), 1);
  for (auto _ : state) benchmark::DoNotOptimize(reference::rref(m));
}

void BM_Echelonize(benchmark::State& state) {
  const Mat m = random_rank_deficient(static_cast<std::size_t>(state.range(0)), 1);
  const auto rows = rows_of(m);
  for (auto _ : state) benchmark::DoNotOptimize(echelonize(rows, m.cols()));
}

void BM_ExampleTower(benchmark::State& state) {
  const InputSpec spec = builtin("example2");
  const Braiding b = to_braiding(spec, Convention::standard);
  const QuadraticData qd = build_quadratic(b, Scalar(1));
  for (auto _ : state) benchmark::DoNotOptimize(graded_profile(qd, static_cast<std::size_t>(state.range(0))));
}

}  // namespace

BENCHMARK(BM_ReferenceRref)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_Echelonize)->Arg(16)->Arg(32)->Arg(64)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_ExampleTower)->Arg(5)->Arg(6)->Arg(7)->Unit(benchmark::kMillisecond);

BENCHMARK_MAIN();
