// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cmath>

#include "relsemi/relation.hpp"

namespace relsemi::testing {

inline Matrix mat(std::initializer_list<std::initializer_list<double>> rows) {
  Matrix m(static_cast<Index>(rows.size()), static_cast<Index>(rows.begin()->size()));
  Index i = 0;
  for (const auto& r : rows) {
    Index j = 0;
    for (double v : r) m(i, j++) = v;
    ++i;
  }
  return m;
}

inline Vector vec(std::initializer_list<Scalar> v) {
  Vector out(static_cast<Index>(v.size()));
  Index i = 0;
  for (Scalar s : v) out(i++) = s;
  return out;
}

inline Vector unit(Index n, Index k) { return Vector::Unit(n, k); }

/// {((a, 0), (-a, b))} in K² × K²: dom = span{e1}, mul = span{e2}.
inline LinearRelation canonical() {
  return LinearRelation::from_pairs(mat({{1, 0}, {0, 0}}), mat({{-1, 0}, {0, 1}}));
}

inline LinearRelation scalar(Scalar s, Field f = Field::real) {
  Matrix m(1, 1);
  m(0, 0) = s;
  return LinearRelation::from_matrix(m, f);
}

inline Subspace span(const Matrix& m) { return Subspace::from_spanning(m); }

}  // namespace relsemi::testing
