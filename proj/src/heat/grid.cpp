// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/heat/grid.hpp"

#include "relsemi/errors.hpp"

namespace relsemi::heat {

Grid::Grid(int dim, std::array<double, 2> c, double hw, Index m) : dim_(dim), c_(c), hw_(hw), m_(m) {
  if (!(hw > 0.0)) throw InvalidInput("grid: half-width must be positive");
  if (m < 1) throw InvalidInput("grid: need at least one node per axis");
}

Grid Grid::box(double cx, double cy, double half_width, Index m) { return Grid(2, {cx, cy}, half_width, m); }

Grid Grid::interval(double a, double b, Index m) {
  if (!(b > a)) throw InvalidInput("grid: interval must have b > a");
  return Grid(1, {0.5 * (a + b), 0.0}, 0.5 * (b - a), m);
}

std::array<double, 2> Grid::point(Index node) const {
  const double hh = h();
  const double x = c_[0] - hw_ + (ix(node) + 1) * hh;
  const double y = dim_ == 1 ? 0.0 : c_[1] - hw_ + (iy(node) + 1) * hh;
  return {x, y};
}

bool Grid::on_rim(Index node) const {
  if (dim_ == 1) return false;
  const Index i = ix(node), j = iy(node);
  return i == 0 || j == 0 || i == m_ - 1 || j == m_ - 1;
}

}  // namespace relsemi::heat
