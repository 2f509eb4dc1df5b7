// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/heat/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <unordered_map>

#include <lapacke.h>
#include <omp.h>

#include "relsemi/errors.hpp"

namespace relsemi::heat {

Stencil build_stencil(const Mask& mask) {
  const Grid& g = mask.grid();
  const std::vector<Index> nodes = mask.nodes();
  std::vector<Index> local(g.size(), -1);
  for (std::size_t k = 0; k < nodes.size(); ++k) local[nodes[k]] = static_cast<Index>(k);
  Stencil s;
  s.n = static_cast<Index>(nodes.size());
  s.dim = g.dim();
  s.inv_h2 = 1.0 / (g.h() * g.h());
  const int deg = 2 * s.dim;
  s.nbr.assign(s.n * deg, -1);
  const Index m = g.m();
  for (Index k = 0; k < s.n; ++k) {
    const Index node = nodes[k];
    const Index i = g.ix(node), j = g.iy(node);
    Index* row = &s.nbr[k * deg];
    row[0] = i > 0 ? local[g.node(i - 1, j)] : -1;
    row[1] = i < m - 1 ? local[g.node(i + 1, j)] : -1;
    if (s.dim == 2) {
      row[2] = j > 0 ? local[g.node(i, j - 1)] : -1;
      row[3] = j < m - 1 ? local[g.node(i, j + 1)] : -1;
    }
  }
  return s;
}

SparseMatrix stencil_matrix(const Stencil& s) {
  const int deg = 2 * s.dim;
  std::vector<Eigen::Triplet<double>> t;
  t.reserve(s.n * (deg + 1));
  for (Index k = 0; k < s.n; ++k) {
    t.emplace_back(k, k, -deg * s.inv_h2);
    for (int q = 0; q < deg; ++q)
      if (s.nbr[k * deg + q] >= 0) t.emplace_back(k, s.nbr[k * deg + q], s.inv_h2);
  }
  SparseMatrix a(s.n, s.n);
  a.setFromTriplets(t.begin(), t.end());
  return a;
}

void stencil_apply(const Stencil& s, const double* x, double* y, Execution exec) {
  const int deg = 2 * s.dim;
  auto row = [&](Index k) {
    double acc = -deg * x[k];
    const Index* nb = &s.nbr[k * deg];
    for (int q = 0; q < deg; ++q)
      if (nb[q] >= 0) acc += x[nb[q]];
    y[k] = acc * s.inv_h2;
  };
  if (exec == Execution::serial) {
    for (Index k = 0; k < s.n; ++k) row(k);
  } else {
#pragma omp parallel for schedule(static)
    for (Index k = 0; k < s.n; ++k) row(k);
  }
}

RealMatrix resolvent_columns(const Ldlt& factor, Index n, Execution exec) {
  RealMatrix r(n, n);
  if (exec == Execution::serial) {
    for (Index j = 0; j < n; ++j) r.col(j) = factor.solve(RealVector::Unit(n, j));
  } else {
#pragma omp parallel for schedule(dynamic, 16)
    for (Index j = 0; j < n; ++j) r.col(j) = factor.solve(RealVector::Unit(n, j));
  }
  return r;
}

double max_row_sum(const RealMatrix& m, Execution exec, Index* argmax) {
  const Index rows = m.rows();
  RealVector sums = RealVector::Zero(rows);
  if (exec == Execution::serial) {
    for (Index j = 0; j < m.cols(); ++j)
      for (Index i = 0; i < rows; ++i) sums(i) += std::abs(m(i, j));
  } else {
    // Each thread owns a contiguous row block and walks the columns in the
    // serial order, so the sums are bitwise identical and reads stay
    // contiguous in the column-major storage.
#pragma omp parallel
    {
      const Index nt = omp_get_num_threads(), t = omp_get_thread_num();
      const Index lo = rows * t / nt, hi = rows * (t + 1) / nt;
      for (Index j = 0; j < m.cols(); ++j)
        for (Index i = lo; i < hi; ++i) sums(i) += std::abs(m(i, j));
    }
  }
  if (rows == 0) return 0.0;
  Index best = 0;
  for (Index i = 1; i < rows; ++i)
    if (sums(i) > sums(best)) best = i;
  if (argmax) *argmax = best;
  return sums(best);
}

Vector spectral_apply(const RealMatrix& q, const Vector& c, const Vector& x, Execution exec) {
  const Index n = q.rows(), k = q.cols();
  Vector coef(k);
  Vector y(n);
  if (exec == Execution::serial) {
    for (Index j = 0; j < k; ++j) {
      Scalar acc = 0.0;
      for (Index i = 0; i < n; ++i) acc += q(i, j) * x(i);
      coef(j) = c(j) * acc;
    }
    for (Index i = 0; i < n; ++i) {
      Scalar acc = 0.0;
      for (Index j = 0; j < k; ++j) acc += q(i, j) * coef(j);
      y(i) = acc;
    }
  } else {
#pragma omp parallel
    {
#pragma omp for schedule(static)
      for (Index j = 0; j < k; ++j) {
        Scalar acc = 0.0;
        for (Index i = 0; i < n; ++i) acc += q(i, j) * x(i);
        coef(j) = c(j) * acc;
      }
#pragma omp for schedule(static)
      for (Index i = 0; i < n; ++i) {
        Scalar acc = 0.0;
        for (Index j = 0; j < k; ++j) acc += q(i, j) * coef(j);
        y(i) = acc;
      }
    }
  }
  return y;
}

SymEig symmetric_eigen(RealMatrix a) {
  const Index n = a.rows();
  if (a.cols() != n) throw InvalidInput("symmetric_eigen: matrix must be square");
  SymEig out;
  out.values.resize(n);
  if (n == 0) {
    out.vectors = RealMatrix(0, 0);
    return out;
  }
  const lapack_int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'V', 'U', static_cast<lapack_int>(n), a.data(),
                                         static_cast<lapack_int>(n), out.values.data());
  if (info != 0) throw SolverBreakdown("dsyevd failed with info = " + std::to_string(info));
  out.vectors = std::move(a);
  return out;
}

}  // namespace relsemi::heat
