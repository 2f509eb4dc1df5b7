// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <array>

#include "relsemi/linalg.hpp"

namespace relsemi::heat {

/// Interior nodes of an axis-aligned box (dim 2) or interval (dim 1). Node
/// (i, j) sits at center - hw + (i+1, j+1) h with h = 2 hw / (m + 1); the
/// flat index is i + m j.
class Grid {
 public:
  /// Square box [cx - hw, cx + hw] × [cy - hw, cy + hw].
  static Grid box(double cx, double cy, double half_width, Index m);
  /// Interval [a, b].
  static Grid interval(double a, double b, Index m);

  int dim() const { return dim_; }
  Index m() const { return m_; }
  double h() const { return 2.0 * hw_ / (m_ + 1); }
  double half_width() const { return hw_; }
  std::array<double, 2> center() const { return c_; }
  Index size() const { return dim_ == 1 ? m_ : m_ * m_; }
  std::array<double, 2> point(Index node) const;
  Index node(Index i, Index j = 0) const { return i + m_ * j; }
  Index ix(Index node) const { return node % m_; }
  Index iy(Index node) const { return dim_ == 1 ? 0 : node / m_; }
  /// On the outermost ring of interior nodes (2-D only).
  bool on_rim(Index node) const;
  bool operator==(const Grid& o) const { return dim_ == o.dim_ && m_ == o.m_ && hw_ == o.hw_ && c_ == o.c_; }

 private:
  Grid(int dim, std::array<double, 2> c, double hw, Index m);
  int dim_;
  std::array<double, 2> c_;
  double hw_;
  Index m_;
};

}  // namespace relsemi::heat
