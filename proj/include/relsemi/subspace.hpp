// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "relsemi/linalg.hpp"

namespace relsemi {

/// A linear subspace of K^m stored as an orthonormal basis.
///
/// The basis is produced by a rank-revealing SVD of a spanning set: singular
/// values at or below `rank_tol * sigma_max` are discarded. Values are
/// immutable; every operation returns a new subspace.
class Subspace {
 public:
  /// The zero subspace of K^m.
  explicit Subspace(Index ambient_dim = 0, Field field = Field::real,
                    double rank_tol = kDefaultRankTol);

  /// Column space of `vectors` (m x k, k may be 0).
  static Subspace from_spanning(const Matrix& vectors, double rank_tol = kDefaultRankTol,
                                Field field = Field::real);

  /// Wraps a basis whose columns are already orthonormal (checked to 1e-13).
  static Subspace from_orthonormal(Matrix basis, Field field, double rank_tol = kDefaultRankTol);

  static Subspace full(Index ambient_dim, Field field = Field::real);

  Index ambient_dim() const { return ambient_; }
  Index dim() const { return basis_.cols(); }
  const Matrix& basis() const { return basis_; }
  Field field() const { return field_; }
  double rank_tol() const { return rank_tol_; }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// Orthogonal projector B B^H.
  Matrix projector() const;
  Vector project(const Vector& v) const;

 private:
  Subspace(Index m, Matrix basis, Field field, double tol);

  Index ambient_;
  Matrix basis_;
  Field field_;
  double rank_tol_;
};

/// {v : v in a and v in b}; tolerance is the larger of the two.
Subspace intersect(const Subspace& a, const Subspace& b);

/// a + b.
Subspace sum(const Subspace& a, const Subspace& b);

/// Orthogonal complement with respect to the Hermitian inner product.
Subspace complement(const Subspace& s);

/// Spectral norm of the difference of the orthogonal projectors, in [0, 1].
double gap(const Subspace& a, const Subspace& b);

/// ||v - P_S v||_2.
double member_distance(const Subspace& s, const Vector& v);

/// Largest member distance over the columns of `vectors`.
double max_member_distance(const Subspace& s, const Matrix& vectors);

}  // namespace relsemi
