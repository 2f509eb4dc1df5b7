// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/heat/mask.hpp"

#include <algorithm>
#include <cmath>

#include <boost/math/constants/constants.hpp>

#include "relsemi/errors.hpp"

namespace relsemi::heat {

using Json = nlohmann::ordered_json;

Mask::Mask(Grid grid, std::vector<std::uint8_t> inside) : grid_(grid), inside_(std::move(inside)) {
  if (static_cast<Index>(inside_.size()) != grid_.size()) throw InvalidInput("mask: size does not match grid");
}

Mask Mask::empty(const Grid& g) { return Mask(g, std::vector<std::uint8_t>(g.size(), 0)); }

Mask Mask::full(const Grid& g) { return Mask(g, std::vector<std::uint8_t>(g.size(), 1)); }

Mask Mask::where(const Grid& g, const std::function<bool(double, double)>& pred) {
  std::vector<std::uint8_t> in(g.size());
  for (Index k = 0; k < g.size(); ++k) {
    const auto p = g.point(k);
    in[k] = pred(p[0], p[1]) ? 1 : 0;
  }
  return Mask(g, std::move(in));
}

Index Mask::count() const { return std::count(inside_.begin(), inside_.end(), 1); }

std::vector<Index> Mask::nodes() const {
  std::vector<Index> out;
  for (Index k = 0; k < static_cast<Index>(inside_.size()); ++k)
    if (inside_[k]) out.push_back(k);
  return out;
}

void Mask::check_margin() const {
  for (Index k = 0; k < grid_.size(); ++k)
    if (inside_[k] && grid_.on_rim(k)) throw MaskTouchesBoundary(static_cast<std::size_t>(k));
}

namespace {

template <class Op>
Mask combine(const Mask& a, const Mask& b, Op op) {
  if (!(a.grid() == b.grid())) throw InvalidInput("mask: grids differ");
  std::vector<std::uint8_t> out(a.bits().size());
  for (std::size_t k = 0; k < out.size(); ++k) out[k] = op(a.bits()[k] != 0, b.bits()[k] != 0) ? 1 : 0;
  return Mask(a.grid(), std::move(out));
}

double seg_distance(double px, double py, std::array<double, 2> a, std::array<double, 2> b) {
  const double vx = b[0] - a[0], vy = b[1] - a[1];
  const double len2 = vx * vx + vy * vy;
  double s = len2 > 0.0 ? ((px - a[0]) * vx + (py - a[1]) * vy) / len2 : 0.0;
  s = std::clamp(s, 0.0, 1.0);
  return std::hypot(px - a[0] - s * vx, py - a[1] - s * vy);
}

std::array<double, 2> pair(const Json& j, const char* what) {
  if (!j.is_array() || j.size() != 2) throw ConfigError(std::string(what) + ": expected [x, y]");
  return {j[0].get<double>(), j[1].get<double>()};
}

Mask shape_from_json(const Grid& g, const Json& s) {
  auto num = [&](const Json& o, const char* k) {
    if (!o.contains(k) || !o[k].is_number()) throw ConfigError(std::string("shape: missing number '") + k + "'");
    return o[k].get<double>();
  };
  if (s.contains("disk")) {
    const Json& o = s["disk"];
    const auto c = pair(o.at("center"), "disk.center");
    return disk(g, c[0], c[1], num(o, "r"));
  }
  if (s.contains("polygon")) {
    std::vector<std::array<double, 2>> v;
    for (const auto& p : s["polygon"].at("vertices")) v.push_back(pair(p, "polygon.vertices"));
    return polygon(g, v);
  }
  if (s.contains("regular_polygon")) {
    const Json& o = s["regular_polygon"];
    const auto c = pair(o.at("center"), "regular_polygon.center");
    return regular_polygon(g, c[0], c[1], num(o, "r"), static_cast<int>(num(o, "sides")),
                           o.contains("phase") ? num(o, "phase") : 0.0);
  }
  if (s.contains("halfplane")) {
    const Json& o = s["halfplane"];
    const auto n = pair(o.at("normal"), "halfplane.normal");
    return halfplane(g, n[0], n[1], num(o, "offset"));
  }
  if (s.contains("slit")) {
    const Json& o = s["slit"];
    return slit(g, pair(o.at("from"), "slit.from"), pair(o.at("to"), "slit.to"), num(o, "width"));
  }
  if (s.contains("interval")) {
    const auto ab = pair(s["interval"], "interval");
    return interval(g, ab[0], ab[1]);
  }
  throw ConfigError("shape: unknown kind (expected disk, polygon, regular_polygon, halfplane, slit, interval)");
}

}  // namespace

Mask unite(const Mask& a, const Mask& b) {
  return combine(a, b, [](bool x, bool y) { return x || y; });
}
Mask intersect(const Mask& a, const Mask& b) {
  return combine(a, b, [](bool x, bool y) { return x && y; });
}
Mask minus(const Mask& a, const Mask& b) {
  return combine(a, b, [](bool x, bool y) { return x && !y; });
}

Mask disk(const Grid& g, double cx, double cy, double r) {
  return Mask::where(g, [=](double x, double y) { return (x - cx) * (x - cx) + (y - cy) * (y - cy) < r * r; });
}

Mask polygon(const Grid& g, const std::vector<std::array<double, 2>>& v) {
  if (v.size() < 3) throw InvalidInput("polygon: need at least three vertices");
  return Mask::where(g, [&](double x, double y) {
    bool in = false;
    for (std::size_t i = 0, j = v.size() - 1; i < v.size(); j = i++) {
      if (seg_distance(x, y, v[i], v[j]) < 1e-12) return false;  // boundary is not interior
      if ((v[i][1] > y) != (v[j][1] > y) &&
          x < (v[j][0] - v[i][0]) * (y - v[i][1]) / (v[j][1] - v[i][1]) + v[i][0])
        in = !in;
    }
    return in;
  });
}

Mask regular_polygon(const Grid& g, double cx, double cy, double r, int sides, double phase) {
  if (sides < 3) throw InvalidInput("regular_polygon: need at least three sides");
  const double pi = boost::math::constants::pi<double>();
  std::vector<std::array<double, 2>> v(sides);
  for (int k = 0; k < sides; ++k) {
    const double a = phase + 2.0 * pi * k / sides;
    v[k] = {cx + r * std::cos(a), cy + r * std::sin(a)};
  }
  return polygon(g, v);
}

Mask halfplane(const Grid& g, double nx, double ny, double c) {
  return Mask::where(g, [=](double x, double y) { return nx * x + ny * y < c; });
}

Mask slit(const Grid& g, std::array<double, 2> a, std::array<double, 2> b, double width) {
  if (!(width >= 0.0)) throw InvalidInput("slit: width must be nonnegative");
  return Mask::where(g, [=](double x, double y) { return seg_distance(x, y, a, b) <= 0.5 * width; });
}

Mask interval(const Grid& g, double a, double b) {
  return Mask::where(g, [=](double x, double) { return x > a && x < b; });
}

Grid grid_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("m")) throw ConfigError("grid: missing 'm'");
  const Index m = j["m"].get<Index>();
  if (m < 1) throw ConfigError("grid: 'm' must be positive");
  if (j.contains("interval")) {
    const auto ab = pair(j["interval"], "grid.interval");
    return Grid::interval(ab[0], ab[1], m);
  }
  if (j.contains("box")) {
    const Json& b = j["box"];
    const auto c = pair(b.at("center"), "grid.box.center");
    if (!b.contains("half_width")) throw ConfigError("grid.box: missing 'half_width'");
    return Grid::box(c[0], c[1], b["half_width"].get<double>(), m);
  }
  throw ConfigError("grid: need 'box' or 'interval'");
}

Mask mask_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("grid") || !j.contains("shape"))
    throw ConfigError("mask: need 'grid' and 'shape'");
  const Grid g = grid_from_json(j["grid"]);
  const Json& shapes = j["shape"];
  if (!shapes.is_array()) throw ConfigError("mask: 'shape' must be an array");
  Mask acc = Mask::empty(g);
  bool first = true;
  for (const auto& s : shapes) {
    const Mask m = shape_from_json(g, s);
    const std::string op = s.contains("op") ? s["op"].get<std::string>() : "union";
    if (first) {
      acc = m;
      first = false;
    } else if (op == "union") {
      acc = unite(acc, m);
    } else if (op == "intersect") {
      acc = intersect(acc, m);
    } else if (op == "minus") {
      acc = minus(acc, m);
    } else {
      throw ConfigError("mask: unknown op '" + op + "'");
    }
  }
  return acc;
}

}  // namespace relsemi::heat
