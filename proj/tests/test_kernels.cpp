// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include <gtest/gtest.h>

#include <omp.h>

#include <random>

#include "relsemi/heat/dirichlet.hpp"
#include "relsemi/heat/kernels.hpp"

using namespace relsemi;
using namespace relsemi::heat;

namespace {

Mask big_disk() { return disk(Grid::box(0.0, 0.0, 1.0, 48), 0.0, 0.0, 0.8); }

RealVector gaussian(Index n, unsigned seed) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> g;
  RealVector v(n);
  for (Index i = 0; i < n; ++i) v(i) = g(rng);
  return v;
}

class Kernels : public ::testing::Test {
 protected:
  void SetUp() override { omp_set_num_threads(4); }
};

}  // namespace

TEST_F(Kernels, StencilMatchesSparseMatrix) {
  const Stencil s = build_stencil(big_disk());
  const SparseMatrix l = stencil_matrix(s);
  const RealVector x = gaussian(s.n, 1);
  RealVector a(s.n), b(s.n);
  stencil_apply(s, x.data(), a.data(), Execution::serial);
  stencil_apply(s, x.data(), b.data(), Execution::parallel);
  EXPECT_EQ(a, b);
  EXPECT_LE((a - l * x).cwiseAbs().maxCoeff(), 1e-9);
}

TEST_F(Kernels, StencilIsSymmetricNegative) {
  const SparseMatrix l = stencil_matrix(build_stencil(big_disk()));
  EXPECT_EQ((RealMatrix(l) - RealMatrix(l).transpose()).cwiseAbs().maxCoeff(), 0.0);
  const RealVector x = gaussian(l.rows(), 2);
  EXPECT_LT(x.dot(l * x), 0.0);
}

TEST_F(Kernels, ResolventColumns) {
  const DirichletOperator op(disk(Grid::box(0.0, 0.0, 1.0, 24), 0.0, 0.0, 0.8));
  SparseMatrix a = -op.laplacian();
  for (Index k = 0; k < a.rows(); ++k) a.coeffRef(k, k) += 1.0;
  const Ldlt f(a);
  const RealMatrix rs = resolvent_columns(f, a.rows(), Execution::serial);
  const RealMatrix rp = resolvent_columns(f, a.rows(), Execution::parallel);
  EXPECT_EQ(rs, rp);
  EXPECT_LE((RealMatrix(a) * rs - RealMatrix::Identity(a.rows(), a.rows())).cwiseAbs().maxCoeff(), 1e-10);
}

TEST_F(Kernels, MaxRowSum) {
  RealMatrix m(300, 200);
  std::mt19937_64 rng(3);
  std::normal_distribution<double> g;
  for (Index i = 0; i < m.size(); ++i) m.data()[i] = g(rng);
  Index as = -1, ap = -1;
  const double s = max_row_sum(m, Execution::serial, &as);
  const double p = max_row_sum(m, Execution::parallel, &ap);
  EXPECT_EQ(s, p);
  EXPECT_EQ(as, ap);
  Index ref;
  EXPECT_EQ(m.cwiseAbs().rowwise().sum().maxCoeff(&ref), s);
  EXPECT_EQ(ref, as);
}

TEST_F(Kernels, MaxRowSumTieTakesLowestRow) {
  const RealMatrix m = RealMatrix::Ones(64, 3);
  Index a = -1;
  max_row_sum(m, Execution::parallel, &a);
  EXPECT_EQ(a, 0);
}

TEST_F(Kernels, SpectralApply) {
  const SymEig e = symmetric_eigen(-RealMatrix(stencil_matrix(build_stencil(disk(Grid::box(0.0, 0.0, 1.0, 16), 0.0, 0.0, 0.7)))));
  const Index n = e.values.size();
  const Vector c = (1.0 / (1.0 + e.values.array())).cast<Scalar>().matrix();
  const Vector x = gaussian(n, 4).cast<Scalar>();
  const Vector s = spectral_apply(e.vectors, c, x, Execution::serial);
  const Vector p = spectral_apply(e.vectors, c, x, Execution::parallel);
  EXPECT_LE((s - p).norm(), 1e-13 * s.norm());
  const RealMatrix a = e.vectors * e.values.asDiagonal() * e.vectors.transpose();
  EXPECT_LE((a * s + s - x).norm(), 1e-10 * x.norm());
}

TEST_F(Kernels, SymmetricEigen) {
  RealMatrix a(2, 2);
  a << 2, 1, 1, 2;
  const SymEig e = symmetric_eigen(a);
  EXPECT_NEAR(e.values(0), 1.0, 1e-15);
  EXPECT_NEAR(e.values(1), 3.0, 1e-15);
}
