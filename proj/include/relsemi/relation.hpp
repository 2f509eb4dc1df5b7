// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>

#include "relsemi/subspace.hpp"

namespace relsemi {

/// dom, ran, ker and mul of a relation.
struct RelationParts {
  Subspace dom, ran, ker, mul;
};

/// A linear relation A ⊂ K^d × K^d (a multivalued linear operator).
///
/// The graph is a subspace of K^{2d}; the first d coordinates hold x and the
/// last d hold y for (x, y) ∈ A. Parts are computed once at construction.
class LinearRelation {
 public:
  explicit LinearRelation(Subspace graph);

  /// Graph of the d×d matrix m.
  static LinearRelation from_matrix(const Matrix& m, Field field = Field::real);
  /// Span of the columns of [xs; ys].
  static LinearRelation from_pairs(const Matrix& xs, const Matrix& ys, double rank_tol = kDefaultRankTol,
                                   Field field = Field::real);
  /// {0} × K^d.
  static LinearRelation pure_multivalued(Index d, Field field = Field::real);
  /// The zero subspace of K^d × K^d.
  static LinearRelation zero(Index d, Field field = Field::real);
  /// Graph with parts known in closed form (structured relations too large
  /// for the SVD-based split). The caller vouches for `parts`.
  static LinearRelation from_parts(Subspace graph, RelationParts parts);

  Index state_dim() const { return d_; }
  const Subspace& graph() const { return graph_; }
  Field field() const { return graph_.field(); }
  double rank_tol() const { return graph_.rank_tol(); }

  /// x-block (U) and y-block (V) of the orthonormal graph basis.
  Matrix x_block() const { return graph_.basis().topRows(d_); }
  Matrix y_block() const { return graph_.basis().bottomRows(d_); }

  const RelationParts& parts() const { return parts_; }
  const Subspace& dom() const { return parts_.dom; }
  const Subspace& ran() const { return parts_.ran; }
  const Subspace& ker() const { return parts_.ker; }
  const Subspace& mul() const { return parts_.mul; }

  bool is_operator() const { return parts_.mul.is_zero(); }

  /// ||(x, y) - P_graph (x, y)||.
  double pair_distance(const Vector& x, const Vector& y) const;

 private:
  LinearRelation(Subspace graph, RelationParts parts);
  Index d_;
  Subspace graph_;
  RelationParts parts_;
};

/// Modulus value: a nonnegative real or +∞.
class Modulus {
 public:
  static Modulus infinite() { return Modulus(); }
  explicit Modulus(double v);

  bool is_infinite() const { return !value_.has_value(); }
  /// Finite value; throws InvalidInput when infinite.
  double value() const;
  /// True when the modulus is strictly greater than `t` (∞ exceeds everything).
  bool exceeds(double t) const { return is_infinite() || *value_ > t; }

 private:
  Modulus() = default;
  std::optional<double> value_;
};

RelationParts parts(const LinearRelation& a);

/// {(y, x) : (x, y) ∈ A}.
LinearRelation inverse(const LinearRelation& a);

/// (-A^{-1})^⊥ with the Hermitian pairing; graph(M) ↦ graph(M^H).
LinearRelation adjoint(const LinearRelation& a);

/// λ - A = {(x, λx - y)}.
LinearRelation shift(Scalar lambda, const LinearRelation& a);

/// A + B = {(x, y + Bx)} for a bounded d×d matrix B.
LinearRelation add_bounded(const LinearRelation& a, const Matrix& b);

/// mA = {(x, m y)}.
LinearRelation scale_output(const Matrix& m, const LinearRelation& a);

/// A - ω, built from shift(): A - ω = -(ω - A).
LinearRelation shift_generator(const LinearRelation& a, double omega);

/// Largest α with α‖x‖ ≤ ‖y‖ on A; ∞ when dom A = {0}.
Modulus injectivity_modulus(const LinearRelation& a);

/// injectivity_modulus(adjoint(A)); positive iff ran A = K^d.
Modulus surjectivity_modulus(const LinearRelation& a);

/// Radius α such that A + B stays surjective for ‖B‖₂ < α. Throws
/// NotSurjective when ran A ≠ K^d.
Modulus surjectivity_radius(const LinearRelation& a);

}  // namespace relsemi
