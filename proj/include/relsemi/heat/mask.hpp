// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include <json.hpp>

#include "relsemi/heat/grid.hpp"

namespace relsemi::heat {

/// Boolean node set Ω on a grid.
class Mask {
 public:
  Mask(Grid grid, std::vector<std::uint8_t> inside);
  static Mask empty(const Grid& g);
  static Mask full(const Grid& g);
  /// Nodes whose coordinates satisfy `pred`.
  static Mask where(const Grid& g, const std::function<bool(double, double)>& pred);

  const Grid& grid() const { return grid_; }
  bool contains(Index node) const { return inside_[node] != 0; }
  const std::vector<std::uint8_t>& bits() const { return inside_; }
  Index count() const;
  /// Ascending node indices of Ω.
  std::vector<Index> nodes() const;
  bool operator==(const Mask& o) const { return grid_ == o.grid_ && inside_ == o.inside_; }

  /// Throws MaskTouchesBoundary when a 2-D mask reaches the outer node ring.
  void check_margin() const;

 private:
  Grid grid_;
  std::vector<std::uint8_t> inside_;
};

Mask unite(const Mask& a, const Mask& b);
Mask intersect(const Mask& a, const Mask& b);
Mask minus(const Mask& a, const Mask& b);
/// Nodes of `a` that are not in `b` (the surplus set a \ b).
inline Mask surplus(const Mask& a, const Mask& b) { return minus(a, b); }

/// Open disk |x - c| < r.
Mask disk(const Grid& g, double cx, double cy, double r);
/// Strict interior of a simple polygon (even-odd rule).
Mask polygon(const Grid& g, const std::vector<std::array<double, 2>>& vertices);
/// Regular polygon inscribed in the circle of radius r, first vertex at angle `phase`.
Mask regular_polygon(const Grid& g, double cx, double cy, double r, int sides, double phase = 0.0);
/// {x : n·x < c}.
Mask halfplane(const Grid& g, double nx, double ny, double c);
/// Nodes within distance width/2 of the segment [a, b].
Mask slit(const Grid& g, std::array<double, 2> a, std::array<double, 2> b, double width);
/// 1-D open interval (a, b).
Mask interval(const Grid& g, double a, double b);

/// {grid: {m, box: {center: [cx, cy], half_width} | interval: [a, b]},
///  shape: [{disk|polygon|regular_polygon|halfplane|slit|interval: {...}, op: union|intersect|minus}, ...]}
/// Shapes are folded left to right; the first shape's op is ignored.
Mask mask_from_json(const nlohmann::ordered_json& j);
Grid grid_from_json(const nlohmann::ordered_json& j);

}  // namespace relsemi::heat
