// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/subspace.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "relsemi/errors.hpp"

namespace relsemi {
namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* op) {
  if (a.ambient_dim() != b.ambient_dim())
    throw InvalidInput(std::string(op) + ": ambient dimensions differ (" +
                       std::to_string(a.ambient_dim()) + " vs " + std::to_string(b.ambient_dim()) + ")");
}

}  // namespace

Subspace::Subspace(Index ambient_dim, Field field, double rank_tol)
    : ambient_(ambient_dim), basis_(ambient_dim, 0), field_(field), rank_tol_(rank_tol) {
  if (ambient_dim < 0) throw InvalidInput("negative ambient dimension");
  if (!(rank_tol > 0.0)) throw InvalidInput("rank tolerance must be positive");
}

Subspace::Subspace(Index m, Matrix basis, Field field, double tol)
    : ambient_(m), basis_(std::move(basis)), field_(field), rank_tol_(tol) {}

Subspace Subspace::from_spanning(const Matrix& vectors, double rank_tol, Field field) {
  if (!(rank_tol > 0.0)) throw InvalidInput("rank tolerance must be positive");
  if (!linalg::all_finite(vectors)) throw InvalidInput("spanning set has non-finite entries");
  const Field f = join(field, field_of(vectors));
  const Index m = vectors.rows();
  if (vectors.cols() == 0 || m == 0) return Subspace(m, f, rank_tol);
  linalg::Svd s = linalg::svd(vectors, f, false, false);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const Index r = smax > 0.0 ? linalg::rank_above(s.sigma, rank_tol * smax) : 0;
  return Subspace(m, s.u.leftCols(r), f, rank_tol);
}

Subspace Subspace::from_orthonormal(Matrix basis, Field field, double rank_tol) {
  const Index m = basis.rows();
  if (basis.cols() > 0) {
    const double dev =
        (basis.adjoint() * basis - Matrix::Identity(basis.cols(), basis.cols())).cwiseAbs().maxCoeff();
    if (dev > 1e-13) throw InvalidInput("basis is not orthonormal (deviation " + std::to_string(dev) + ")");
  }
  const Field f = join(field, field_of(basis));
  return Subspace(m, std::move(basis), f, rank_tol);
}

Subspace Subspace::full(Index ambient_dim, Field field) {
  return Subspace(ambient_dim, Matrix::Identity(ambient_dim, ambient_dim), field, kDefaultRankTol);
}

Matrix Subspace::projector() const { return basis_ * basis_.adjoint(); }

Vector Subspace::project(const Vector& v) const { return basis_ * (basis_.adjoint() * v); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  const double tol = std::max(a.rank_tol(), b.rank_tol());
  const Field f = join(a.field(), b.field());
  if (a.is_zero() || b.is_zero()) return Subspace(a.ambient_dim(), f, tol);
  // Null space of [B1 | -B2] gives coefficient pairs with B1 c1 = B2 c2.
  Matrix stacked(a.ambient_dim(), a.dim() + b.dim());
  stacked << a.basis(), -b.basis();
  linalg::Svd s = linalg::svd(stacked, f, false, true);
  const double smax = s.sigma.size() ? s.sigma(0) : 0.0;
  const Index r = linalg::rank_above(s.sigma, tol * smax);
  const Matrix null = s.v.rightCols(stacked.cols() - r);
  return Subspace::from_spanning(a.basis() * null.topRows(a.dim()), tol, f);
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  Matrix both(a.ambient_dim(), a.dim() + b.dim());
  both << a.basis(), b.basis();
  return Subspace::from_spanning(both, std::max(a.rank_tol(), b.rank_tol()), join(a.field(), b.field()));
}

Subspace complement(const Subspace& s) {
  const Index m = s.ambient_dim();
  if (s.is_zero()) return Subspace::from_orthonormal(Matrix::Identity(m, m), s.field(), s.rank_tol());
  Matrix q;
  if (s.field() == Field::real) {
    Eigen::HouseholderQR<RealMatrix> qr(s.basis().real());
    q = RealMatrix(qr.householderQ()).cast<Scalar>();
  } else {
    Eigen::HouseholderQR<Matrix> qr(s.basis());
    q = qr.householderQ();
  }
  return Subspace::from_orthonormal(q.rightCols(m - s.dim()), s.field(), s.rank_tol());
}

double gap(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "gap");
  // ||P_a - P_b|| = max(||(I - P_b) B_a||, ||(I - P_a) B_b||) for orthogonal projectors.
  auto leak = [](const Subspace& from, const Subspace& onto) {
    if (from.is_zero()) return 0.0;
    Matrix r = from.basis() - onto.basis() * (onto.basis().adjoint() * from.basis());
    return linalg::norm2(r);
  };
  return std::min(1.0, std::max(leak(a, b), leak(b, a)));
}

double member_distance(const Subspace& s, const Vector& v) {
  if (v.size() != s.ambient_dim()) throw InvalidInput("member_distance: vector length mismatch");
  return (v - s.project(v)).norm();
}

double max_member_distance(const Subspace& s, const Matrix& vectors) {
  if (vectors.rows() != s.ambient_dim()) throw InvalidInput("max_member_distance: row mismatch");
  if (vectors.cols() == 0) return 0.0;
  Matrix r = vectors - s.basis() * (s.basis().adjoint() * vectors);
  return r.colwise().norm().maxCoeff();
}

}  // namespace relsemi
