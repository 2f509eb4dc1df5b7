// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

// Serial reference against the OpenMP version of each parallel kernel.
// Argument 0 runs the serial path, 1 the parallel one.

#include <benchmark/benchmark.h>

#include <random>

#include "relsemi/heat/dirichlet.hpp"
#include "relsemi/heat/kernels.hpp"
#include "relsemi/random.hpp"
#include "relsemi/spectral.hpp"

using namespace relsemi;
using namespace relsemi::heat;

namespace {

Execution exec_of(const benchmark::State& s) { return s.range(0) ? Execution::parallel : Execution::serial; }

Mask bench_disk(Index m) { return disk(Grid::box(0.0, 0.0, 1.0, m), 0.0, 0.0, 0.8); }

RealVector gaussian(Index n) {
  std::mt19937_64 rng(1);
  std::normal_distribution<double> g;
  RealVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = g(rng);
  return v;
}

void BM_StencilApply(benchmark::State& state) {
  const Stencil s = build_stencil(bench_disk(512));
  const RealVector x = gaussian(s.n);
  RealVector y(s.n);
  for (auto _ : state) {
    stencil_apply(s, x.data(), y.data(), exec_of(state));
    benchmark::DoNotOptimize(y.data());
  }
  state.SetItemsProcessed(state.iterations() * s.n);
}
BENCHMARK(BM_StencilApply)->Arg(0)->Arg(1);

void BM_ResolventColumns(benchmark::State& state) {
  const DirichletOperator op(bench_disk(48));
  SparseMatrix a = -op.laplacian();
  for (Index k = 0; k < a.rows(); ++k) a.coeffRef(k, k) += 1.0;
  const Ldlt f(a);
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_columns(f, a.rows(), exec_of(state)));
}
BENCHMARK(BM_ResolventColumns)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_MaxRowSum(benchmark::State& state) {
  const Index n = 2000;
  const RealMatrix m = gaussian(n * n).reshaped(n, n);
  for (auto _ : state) benchmark::DoNotOptimize(max_row_sum(m, exec_of(state)));
}
BENCHMARK(BM_MaxRowSum)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

void BM_SpectralApply(benchmark::State& state) {
  const SymEig e = symmetric_eigen(-RealMatrix(stencil_matrix(build_stencil(bench_disk(40)))));
  const Vector c = (1.0 / (1.0 + e.values.array())).cast<Scalar>().matrix();
  const Vector x = gaussian(e.values.size()).cast<Scalar>();
  for (auto _ : state) benchmark::DoNotOptimize(spectral_apply(e.vectors, c, x, exec_of(state)));
}
BENCHMARK(BM_SpectralApply)->Arg(0)->Arg(1);

void BM_ResolventSetScan(benchmark::State& state) {
  Rng rng(3);
  const LinearRelation a = random_m_dissipative(8, Field::complex, rng);
  std::vector<Scalar> grid;
  for (int i = 0; i < 16; ++i)
    for (int j = 0; j < 16; ++j) grid.emplace_back(-4.0 + 0.5 * i, -4.0 + 0.5 * j);
  for (auto _ : state) benchmark::DoNotOptimize(resolvent_set_scan(a, grid, kDefaultAcceptTol, exec_of(state)));
}
BENCHMARK(BM_ResolventSetScan)->Arg(0)->Arg(1)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
