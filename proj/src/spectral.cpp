// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/spectral.hpp"

#include <cmath>
#include <limits>
#include <string>

#include <omp.h>

#include "relsemi/errors.hpp"

namespace relsemi {

void set_max_threads(int n) {
  if (n > 0) omp_set_num_threads(n);
}

ResolventSample try_resolvent(Scalar lambda, const LinearRelation& a, double accept_tol) {
  if (!(accept_tol > 0.0)) throw InvalidInput("accept_tol must be positive");
  const Index d = a.state_dim();
  const Index r = a.graph().dim();
  const Field f = join(a.field(), field_of(lambda));
  const Matrix u = a.x_block();
  const Matrix w = lambda * u - a.y_block();

  ResolventSample out{lambda, Matrix::Zero(d, d), 0.0};
  if (d == 0) return out;

  linalg::Svd s = linalg::svd(w, f, false, true);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const Index rank = smax > 0.0 ? linalg::rank_above(s.sigma, a.rank_tol() * smax) : 0;
  if (r != d || rank != d) {
    throw NotInResolventSet(lambda, rank, std::numeric_limits<double>::quiet_NaN(),
                            "rank(lambda*U - V) = " + std::to_string(rank) + " with dim(graph) = " +
                                std::to_string(r) + ", need both equal to " + std::to_string(d));
  }
  // W is square and invertible here: W^{-1} = V Σ^{-1} U^H.
  Matrix coeffs = s.v * s.sigma.cwiseInverse().asDiagonal() * s.u.adjoint();
  // One Newton-Schulz step X(2I - WX): the SVD inverse leaves a residual near
  // eps·cond(W), which grows like λ when mul A ≠ {0}.
  coeffs = coeffs * (2.0 * Matrix::Identity(d, d) - w * coeffs);
  out.matrix = u * coeffs;

  const double solve_res = (w * coeffs - Matrix::Identity(d, d)).colwise().norm().maxCoeff();
  Matrix pairs(2 * d, d);
  pairs << out.matrix, lambda * out.matrix - Matrix::Identity(d, d);
  out.residual = max_member_distance(a.graph(), pairs) + solve_res;
  if (!(out.residual <= accept_tol))
    throw NotInResolventSet(lambda, rank, out.residual,
                            "residual certificate " + std::to_string(out.residual) + " exceeds tolerance");
  return out;
}

Subspace mul_from_resolvent(const LinearRelation& a, Scalar lambda) {
  const ResolventSample s = try_resolvent(lambda, a);
  const Index d = a.state_dim();
  const Field f = join(a.field(), field_of(lambda));
  const double scale = linalg::norm2(s.matrix);
  if (scale == 0.0) return Subspace::full(d, f);
  return Subspace::from_orthonormal(linalg::null_space(s.matrix, f, a.rank_tol() * scale), f, a.rank_tol());
}

Matrix neumann_extend(Scalar lambda0, const Matrix& r0, Scalar lambda, int nmax) {
  const double q = std::abs(lambda - lambda0) * linalg::norm2(r0);
  if (!(q < 1.0)) throw DivergentSeries(q);
  Matrix sum = r0;
  Matrix term = r0;
  const Scalar step = lambda0 - lambda;
  for (int n = 1; n < nmax; ++n) {
    term = step * (r0 * term);
    sum += term;
    if (linalg::norm2(term) < 1e-15) break;
  }
  return sum;
}

double resolvent_identity_residual(const LinearRelation& a, Scalar lambda, Scalar mu) {
  const Matrix rl = try_resolvent(lambda, a).matrix;
  const Matrix rm = try_resolvent(mu, a).matrix;
  return linalg::norm2(rl - rm - (mu - lambda) * rl * rm);
}

LinearRelation relation_from_resolvent(Scalar lambda0, const Matrix& q, double rank_tol) {
  if (q.rows() != q.cols()) throw InvalidInput("relation_from_resolvent: Q must be square");
  const Index d = q.rows();
  const Field f = join(field_of(q), field_of(lambda0));
  return LinearRelation::from_pairs(q, lambda0 * q - Matrix::Identity(d, d), rank_tol, f);
}

LinearRelation relation_from_pseudo_resolvent(const PseudoResolventTable& table, double tol) {
  const std::size_t n = table.lambdas.size();
  if (n == 0 || table.matrices.size() != n) throw InvalidInput("pseudo-resolvent table is empty or ragged");
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Matrix& ri = table.matrices[i];
      const Matrix& rj = table.matrices[j];
      const double res =
          linalg::norm2(ri - rj - (table.lambdas[j] - table.lambdas[i]) * ri * rj);
      if (res > tol) throw NotAPseudoResolvent(i, j, res);
    }
  }
  LinearRelation a = relation_from_resolvent(table.lambdas[0], table.matrices[0]);
  for (std::size_t k = 1; k < n; ++k) {
    double dev;
    try {
      dev = linalg::norm2(try_resolvent(table.lambdas[k], a).matrix - table.matrices[k]);
    } catch (const NotInResolventSet&) {
      throw InconsistentTable(k, std::numeric_limits<double>::infinity());
    }
    if (dev > 10.0 * tol) throw InconsistentTable(k, dev);
  }
  return a;
}

std::vector<ScanEntry> resolvent_set_scan(const LinearRelation& a, const std::vector<Scalar>& grid,
                                          double accept_tol, Execution exec) {
  std::vector<ScanEntry> out(grid.size());
  const long n = static_cast<long>(grid.size());
  const double inf = std::numeric_limits<double>::infinity();
  auto one = [&](long k) {
    ScanEntry e{grid[k], false, inf, inf};
    try {
      ResolventSample s = try_resolvent(grid[k], a, accept_tol);
      e.in_resolvent_set = true;
      e.norm = linalg::norm2(s.matrix);
      e.residual = s.residual;
    } catch (const NotInResolventSet& err) {
      if (std::isfinite(err.residual)) e.residual = err.residual;
    }
    out[k] = e;
  };
  if (exec == Execution::serial) {
    for (long k = 0; k < n; ++k) one(k);
  } else {
#pragma omp parallel for schedule(dynamic)
    for (long k = 0; k < n; ++k) one(k);
  }
  return out;
}

}  // namespace relsemi
