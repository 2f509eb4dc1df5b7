// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/random.hpp"

#include <algorithm>

namespace relsemi {

namespace {

Index uniform_index(Index lo, Index hi, Rng& rng) {
  return std::uniform_int_distribution<Index>(lo, hi)(rng);
}

}  // namespace

Matrix random_matrix(Index rows, Index cols, Field field, Rng& rng) {
  std::normal_distribution<double> g;
  Matrix m(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) {
      const double re = g(rng);
      m(i, j) = Scalar(re, field == Field::complex ? g(rng) : 0.0);
    }
  return m;
}

Vector random_unit_vector(Index n, Field field, Rng& rng) {
  Vector v = random_matrix(n, 1, field, rng).col(0);
  return v / v.norm();
}

Matrix random_unitary(Index n, Field field, Rng& rng) {
  if (n == 0) return Matrix(0, 0);
  const Matrix g = random_matrix(n, n, field, rng);
  if (field == Field::real) {
    Eigen::HouseholderQR<RealMatrix> qr(g.real());
    return RealMatrix(qr.householderQ()).cast<Scalar>();
  }
  Eigen::HouseholderQR<Matrix> qr(g);
  return Matrix(qr.householderQ());
}

LinearRelation random_relation(Index d, Field field, Rng& rng) {
  const Index r = uniform_index(0, 2 * d, rng);
  const Index rx = uniform_index(std::max<Index>(0, r - d), std::min(r, d), rng);
  const Index ry = uniform_index(std::max<Index>(0, r - rx), std::min(r, d), rng);
  // X = Gx Cx and Y = Gy Cy with inner dimensions rx, ry.
  const Matrix x = random_matrix(d, rx, field, rng) * random_matrix(rx, r, field, rng);
  const Matrix y = random_matrix(d, ry, field, rng) * random_matrix(ry, r, field, rng);
  return LinearRelation::from_pairs(x, y, kDefaultRankTol, field);
}

LinearRelation random_m_dissipative(Index d, Field field, Rng& rng, const MDissipativeOptions& opts) {
  const Index hi = opts.max_dom < 0 ? d : std::min(opts.max_dom, d);
  const Index d1 = uniform_index(std::min(opts.min_dom, hi), hi, rng);
  const Index d0 = d - d1;
  const Matrix b = random_matrix(d1, d1, field, rng);
  const Matrix s = random_matrix(d1, d1, field, rng);
  const Matrix m = -(opts.epsilon * Matrix::Identity(d1, d1) + b * b.adjoint()) + 0.5 * (s - s.adjoint());

  // Graph basis in split coordinates: columns (e_i, M e_i) and (0, f_j).
  Matrix xs = Matrix::Zero(d, d);
  Matrix ys = Matrix::Zero(d, d);
  xs.topLeftCorner(d1, d1).setIdentity();
  ys.topLeftCorner(d1, d1) = m;
  ys.bottomRightCorner(d0, d0).setIdentity();
  const Matrix q = random_unitary(d, field, rng);
  return LinearRelation::from_pairs(q * xs, q * ys, kDefaultRankTol, field);
}

LinearRelation random_dissipative(Index d, Field field, Rng& rng) {
  const LinearRelation a = random_m_dissipative(d, field, rng);
  const Index r = a.graph().dim();
  const Index k = uniform_index(0, r, rng);
  const Matrix c = a.graph().basis() * random_matrix(r, k, field, rng);
  return LinearRelation::from_pairs(c.topRows(d), c.bottomRows(d), kDefaultRankTol, field);
}

}  // namespace relsemi
