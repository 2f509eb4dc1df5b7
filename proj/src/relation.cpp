// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/relation.hpp"

#include <string>

#include "relsemi/errors.hpp"

namespace relsemi {
namespace {

Index half_dim(const Subspace& g) {
  if (g.ambient_dim() % 2 != 0) throw InvalidInput("relation graph must live in K^{2d}");
  return g.ambient_dim() / 2;
}

// Column space of U (rank r) and the image under V of null(U), from one SVD of U
// so that dim(dom) + dim(mul) = dim(graph) holds exactly.
void split(const Matrix& first, const Matrix& second, Field field, double tol, Subspace& image,
           Subspace& multivalued) {
  linalg::Svd s = linalg::svd(first, field, false, true);
  const Index r = linalg::rank_above(s.sigma, tol);
  // Left singular vectors of a real matrix are real; from_orthonormal keeps the tag.
  image = Subspace::from_orthonormal(s.u.leftCols(r), field, tol);
  const Matrix null = s.v.rightCols(first.cols() - r);
  multivalued = Subspace::from_spanning(second * null, tol, field);
}

}  // namespace

Modulus::Modulus(double v) : value_(v) {
  if (!(v >= 0.0)) throw InvalidInput("modulus must be nonnegative");
}

double Modulus::value() const {
  if (!value_) throw InvalidInput("modulus is infinite");
  return *value_;
}

LinearRelation::LinearRelation(Subspace graph) : d_(half_dim(graph)), graph_(std::move(graph)) {
  parts_ = relsemi::parts(*this);
}

LinearRelation LinearRelation::from_matrix(const Matrix& m, Field field) {
  if (m.rows() != m.cols()) throw InvalidInput("from_matrix: matrix must be square");
  return from_pairs(Matrix::Identity(m.rows(), m.cols()), m, kDefaultRankTol, field);
}

LinearRelation LinearRelation::from_pairs(const Matrix& xs, const Matrix& ys, double rank_tol, Field field) {
  if (xs.rows() != ys.rows() || xs.cols() != ys.cols())
    throw InvalidInput("from_pairs: x and y blocks must have equal shapes");
  Matrix stacked(2 * xs.rows(), xs.cols());
  stacked << xs, ys;
  return LinearRelation(Subspace::from_spanning(stacked, rank_tol, field));
}

LinearRelation LinearRelation::pure_multivalued(Index d, Field field) {
  Matrix b = Matrix::Zero(2 * d, d);
  b.bottomRows(d).setIdentity();
  return LinearRelation(Subspace::from_orthonormal(b, field));
}

LinearRelation::LinearRelation(Subspace graph, RelationParts parts)
    : d_(half_dim(graph)), graph_(std::move(graph)), parts_(std::move(parts)) {}

LinearRelation LinearRelation::from_parts(Subspace graph, RelationParts parts) {
  const Index d = half_dim(graph);
  for (const Subspace* s : {&parts.dom, &parts.ran, &parts.ker, &parts.mul})
    if (s->ambient_dim() != d) throw InvalidInput("from_parts: part has the wrong ambient dimension");
  return LinearRelation(std::move(graph), std::move(parts));
}

LinearRelation LinearRelation::zero(Index d, Field field) { return LinearRelation(Subspace(2 * d, field)); }

double LinearRelation::pair_distance(const Vector& x, const Vector& y) const {
  if (x.size() != d_ || y.size() != d_) throw InvalidInput("pair_distance: length mismatch");
  Vector v(2 * d_);
  v << x, y;
  return member_distance(graph_, v);
}

RelationParts parts(const LinearRelation& a) {
  const Field f = a.field();
  const double tol = a.rank_tol();
  const Index d = a.state_dim();
  RelationParts p{Subspace(d, f, tol), Subspace(d, f, tol), Subspace(d, f, tol), Subspace(d, f, tol)};
  const Matrix u = a.x_block();
  const Matrix v = a.y_block();
  split(u, v, f, tol, p.dom, p.mul);
  split(v, u, f, tol, p.ran, p.ker);
  return p;
}

LinearRelation inverse(const LinearRelation& a) {
  Matrix b(a.graph().ambient_dim(), a.graph().dim());
  b << a.y_block(), a.x_block();
  return LinearRelation(Subspace::from_orthonormal(b, a.field(), a.rank_tol()));
}

LinearRelation adjoint(const LinearRelation& a) {
  // -A^{-1} = {(y, -x)}.
  Matrix b(a.graph().ambient_dim(), a.graph().dim());
  b << a.y_block(), -a.x_block();
  return LinearRelation(complement(Subspace::from_orthonormal(b, a.field(), a.rank_tol())));
}

LinearRelation shift(Scalar lambda, const LinearRelation& a) {
  const Matrix u = a.x_block();
  return LinearRelation::from_pairs(u, lambda * u - a.y_block(), a.rank_tol(), join(a.field(), field_of(lambda)));
}

LinearRelation add_bounded(const LinearRelation& a, const Matrix& b) {
  if (b.rows() != a.state_dim() || b.cols() != a.state_dim())
    throw InvalidInput("add_bounded: operator shape mismatch");
  if (!linalg::all_finite(b)) throw InvalidInput("add_bounded: operator has non-finite entries");
  const Matrix u = a.x_block();
  return LinearRelation::from_pairs(u, a.y_block() + b * u, a.rank_tol(), join(a.field(), field_of(b)));
}

LinearRelation scale_output(const Matrix& m, const LinearRelation& a) {
  if (m.rows() != a.state_dim() || m.cols() != a.state_dim())
    throw InvalidInput("scale_output: multiplier shape mismatch");
  return LinearRelation::from_pairs(a.x_block(), m * a.y_block(), a.rank_tol(), join(a.field(), field_of(m)));
}

LinearRelation shift_generator(const LinearRelation& a, double omega) {
  const Index d = a.state_dim();
  return scale_output(-Matrix::Identity(d, d), shift(Scalar(omega), a));
}

Modulus injectivity_modulus(const LinearRelation& a) {
  const Field f = a.field();
  const double tol = a.rank_tol();
  const Matrix u = a.x_block();
  const Matrix v = a.y_block();
  linalg::Svd s = linalg::svd(u, f, false, true);
  const Index r = linalg::rank_above(s.sigma, tol);
  if (r == 0) return Modulus::infinite();
  // Coefficients c = Z1 Σ1^{-1} w with ‖w‖ = 1 give ‖x‖ = 1; the null(U) part
  // spans mul A, which is projected out of y.
  const Matrix z1 = s.v.leftCols(r);
  Matrix y = v * z1 * s.sigma.head(r).cwiseInverse().asDiagonal();
  const Subspace& mul = a.mul();
  if (!mul.is_zero()) y -= mul.basis() * (mul.basis().adjoint() * y);
  linalg::Svd sy = linalg::svd(y, f, false, false);
  return Modulus(sy.sigma.size() ? sy.sigma(sy.sigma.size() - 1) : 0.0);
}

Modulus surjectivity_modulus(const LinearRelation& a) { return injectivity_modulus(adjoint(a)); }

Modulus surjectivity_radius(const LinearRelation& a) {
  if (!a.ran().is_full())
    throw NotSurjective("ran A has dimension " + std::to_string(a.ran().dim()) + " < " +
                        std::to_string(a.state_dim()));
  return surjectivity_modulus(a);
}

}  // namespace relsemi
