// Serial reference kernels against their OpenMP versions.

#include <benchmark/benchmark.h>

#include "lagrel/kernels.hpp"
#include "lagrel/random.hpp"
#include "lagrel/wgrs.hpp"

namespace {

using namespace lagrel;

Matrix random_matrix(std::size_t rows, std::size_t cols) {
  Rng rng(1);
  Matrix m(rows, cols);
  for (std::size_t i = 0; i < rows; ++i)
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = random_rational(rng);
  m(0, 0) = 1;
  return m;
}

template <bool Parallel>
void BM_EliminateColumn(benchmark::State& state) {
  const auto n = static_cast<std::size_t>(state.range(0));
  const Matrix base = random_matrix(n, n);
  for (auto _ : state) {
    Matrix m = base;
    if constexpr (Parallel) kernels::eliminate_column(m, 0, 0);
    else kernels::eliminate_column_ref(m, 0, 0);
    benchmark::DoNotOptimize(m);
  }
}

struct FrontierData {
  std::vector<LinearRelation> frontier, generators;
};

FrontierData frontier_data(std::size_t n) {
  Rng rng(2);
  const auto space = random_space(rng, n);
  FrontierData d;
  for (int i = 0; i < 16; ++i) d.frontier.push_back(random_lagrangian(rng, space));
  for (int i = 0; i < 4; ++i) d.generators.push_back(random_lagrangian(rng, space));
  return d;
}

template <bool Parallel>
void BM_ExpandFrontier(benchmark::State& state) {
  const auto d = frontier_data(static_cast<std::size_t>(state.range(0)));
  for (auto _ : state) {
    auto out = Parallel ? kernels::expand_frontier(d.frontier, d.generators)
                        : kernels::expand_frontier_ref(d.frontier, d.generators);
    benchmark::DoNotOptimize(out);
  }
}

template <bool Parallel>
void BM_ConstraintBlocks(benchmark::State& state) {
  const auto r = build_relation(catalog("gl", {2, 2}));
  const auto degree = static_cast<std::uint32_t>(state.range(0));
  for (auto _ : state) {
    auto out = Parallel ? kernels::constraint_blocks(r.components(), degree)
                        : kernels::constraint_blocks_ref(r.components(), degree);
    benchmark::DoNotOptimize(out);
  }
}

}  // namespace

BENCHMARK(BM_EliminateColumn<false>)->Arg(64)->Arg(256);
BENCHMARK(BM_EliminateColumn<true>)->Arg(64)->Arg(256);
BENCHMARK(BM_ExpandFrontier<false>)->Arg(4)->Arg(6);
BENCHMARK(BM_ExpandFrontier<true>)->Arg(4)->Arg(6);
BENCHMARK(BM_ConstraintBlocks<false>)->Arg(3)->Arg(5);
BENCHMARK(BM_ConstraintBlocks<true>)->Arg(3)->Arg(5);

BENCHMARK_MAIN();
