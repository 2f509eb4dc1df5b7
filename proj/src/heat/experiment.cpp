// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/heat/experiment.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <exception>
#include <limits>
#include <memory>
#include <sstream>

#include "relsemi/errors.hpp"
#include "relsemi/logging.hpp"

namespace relsemi::heat {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// 4-neighbor (2-neighbor in 1-D) distance to the nearest node off the mask;
// the lattice exterior counts as off.
std::vector<int> distance_to_outside(const Mask& mask) {
  const Grid& g = mask.grid();
  const Index n = g.size(), m = g.m();
  std::vector<int> dist(n, -1);
  std::deque<Index> queue;
  for (Index i = 0; i < n; ++i) {
    const Index x = g.ix(i), y = g.iy(i);
    const bool rim = x == 0 || x == m - 1 || (g.dim() == 2 && (y == 0 || y == m - 1));
    if (!mask.contains(i)) {
      dist[i] = 0;
      queue.push_back(i);
    } else if (rim) {
      dist[i] = 1;
      queue.push_back(i);
    }
  }
  while (!queue.empty()) {
    const Index i = queue.front();
    queue.pop_front();
    const Index x = g.ix(i), y = g.iy(i);
    Index nb[4];
    int k = 0;
    if (x > 0) nb[k++] = g.node(x - 1, y);
    if (x < m - 1) nb[k++] = g.node(x + 1, y);
    if (g.dim() == 2 && y > 0) nb[k++] = g.node(x, y - 1);
    if (g.dim() == 2 && y < m - 1) nb[k++] = g.node(x, y + 1);
    for (int q = 0; q < k; ++q)
      if (dist[nb[q]] < 0) {
        dist[nb[q]] = dist[i] + 1;
        queue.push_back(nb[q]);
      }
  }
  return dist;
}

// Runs body(i) for i < n, in parallel when asked; rethrows the first failure
// in index order.
template <class F>
void for_each_index(std::size_t n, Execution exec, F&& body) {
  std::vector<std::exception_ptr> errs(n);
  if (exec == Execution::serial) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }
#pragma omp parallel for schedule(dynamic)
  for (std::size_t i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
      errs[i] = std::current_exception();
    }
  }
  for (auto& e : errs)
    if (e) std::rethrow_exception(e);
}

}  // namespace

std::vector<Mask> polygon_family(const Grid& g, double cx, double cy, double r, const std::vector<int>& sides) {
  std::vector<Mask> out;
  for (int s : sides) out.push_back(regular_polygon(g, cx, cy, r, s));
  return out;
}

std::vector<Mask> slit_family(const Grid& g, double r, const std::vector<double>& widths) {
  // Node row nearest y = 0, so a width of h removes exactly one row.
  const Index row = g.dim() == 2 ? (g.m() - 1) / 2 : 0;
  const double y = g.point(g.node(0, row))[1];
  const Mask base = disk(g, 0.0, 0.0, r);
  std::vector<Mask> out;
  for (double w : widths) {
    if (!(w > 0.0)) throw InvalidInput("slit_family: widths must be positive");
    out.push_back(minus(base, slit(g, {0.0, y}, {r + 2 * g.h(), y}, w * (1.0 + 1e-6))));
  }
  return out;
}

std::vector<Mask> disk_family(const Grid& g, const std::vector<double>& radii) {
  std::vector<Mask> out;
  for (double r : radii) out.push_back(disk(g, 0.0, 0.0, r));
  return out;
}

DomainConvergenceCriterion domain_convergence_check(const std::vector<Mask>& seq, const Mask& limit,
                                                    const std::vector<int>& margins, EigenDirection direction,
                                                    const Mask* exclude) {
  for (const Mask& m : seq)
    if (!(m.grid() == limit.grid())) throw InvalidInput("domain_convergence_check: masks on different grids");
  if (exclude && !(exclude->grid() == limit.grid()))
    throw InvalidInput("domain_convergence_check: exclusion mask on a different grid");
  DomainConvergenceCriterion c;
  c.margins = margins;
  c.direction = direction;
  const std::vector<int> dist = distance_to_outside(limit);
  const Index n = limit.grid().size();
  c.a_holds = true;
  for (int margin : margins) {
    std::vector<Index> k;
    for (Index i = 0; i < n; ++i)
      if (limit.contains(i) && dist[i] >= margin && !(exclude && exclude->contains(i))) k.push_back(i);
    std::optional<std::size_t> n0;
    for (std::size_t j = seq.size(); j-- > 0;) {
      const bool covers = std::all_of(k.begin(), k.end(), [&](Index i) { return seq[j].contains(i); });
      if (!covers) break;
      n0 = j + 1;
    }
    if (!n0) c.a_holds = false;
    c.n0.push_back(n0);
  }
  const double cell = std::pow(limit.grid().h(), limit.grid().dim());
  for (const Mask& m : seq) {
    const Mask s = surplus(m, limit);
    c.surplus_eigenvalue.push_back(first_eigenvalue(s));
    c.surplus_measure.push_back(static_cast<double>(s.count()) * cell);
  }
  const auto& e = c.surplus_eigenvalue;
  c.eig_to_infinity = std::is_sorted(e.begin(), e.end());
  c.eig_to_zero = std::is_sorted(e.rbegin(), e.rend()) && !e.empty() && e.back() < e.front();
  c.b_holds = direction == EigenDirection::to_infinity ? c.eig_to_infinity : c.eig_to_zero;
  return c;
}

HeatConvergence perturbation_experiment(const std::vector<Mask>& masks, const Mask& limit,
                                        const HeatExperimentOptions& opts) {
  if (masks.empty()) throw InvalidInput("perturbation_experiment: empty family");
  const Grid& g = limit.grid();
  for (const Mask& m : masks)
    if (!(m.grid() == g)) throw InvalidInput("perturbation_experiment: masks on different grids");
  HeatConvergence out;
  const std::size_t nn = masks.size();

  if (opts.certify) {
    out.certificates.resize(nn + 1);
    for (std::size_t i = 0; i < nn; ++i)
      out.certificates[i] = supnorm_contraction(DirichletOperator(masks[i]), opts.certify_lambdas, opts.exec);
    out.certificates[nn] = supnorm_contraction(DirichletOperator(limit), opts.certify_lambdas, opts.exec);
  }

  // Eigendecompositions dominate; parallel over the family index.
  GeneratorSequence seq;
  seq.items.resize(nn);
  for (std::size_t i = 0; i < nn; ++i) seq.index.push_back(static_cast<double>(i + 1));
  const Execution inner = opts.exec == Execution::parallel && nn > 1 ? Execution::serial : opts.exec;
  for_each_index(nn, opts.exec, [&](std::size_t i) {
    seq.items[i] = std::make_shared<const HeatGenerator>(masks[i], inner);
  });
  const HeatGenerator lim(limit, opts.exec);

  TrotterKatoOptions tk;
  tk.lambdas = opts.lambdas;
  tk.t_grid = opts.t_grid;
  if (tk.t_grid.empty())
    for (int k = 0; k <= 10; ++k) tk.t_grid.push_back(0.1 * k);
  tk.f_set = opts.f_set;
  if (tk.f_set.empty()) {
    Vector bump(g.size());
    for (Index i = 0; i < g.size(); ++i) {
      const auto p = g.point(i);
      bump(i) = 1.0 - 0.5 * (p[0] * p[0] + p[1] * p[1]);
    }
    tk.f_set = {Vector::Ones(g.size()), bump};
  }
  tk.mu = opts.mu;
  tk.tol = opts.tol;
  tk.strict = false;
  out.tk = trotter_kato_report(seq, lim, tk);
  out.criterion = domain_convergence_check(masks, limit, opts.margins, opts.direction);

  out.off_domain.assign(nn, 0.0);
  for (std::size_t i = 0; i < nn; ++i)
    for (double t : tk.t_grid)
      for (const Vector& f : tk.f_set) {
        const Vector s = seq.items[i]->integrated_apply(t, f);
        for (Index j = 0; j < g.size(); ++j)
          if (!limit.contains(j)) out.off_domain[i] = std::max(out.off_domain[i], std::abs(s(j)));
      }

  const auto& se = out.tk.s_error;
  out.s_strictly_decreasing = std::adjacent_find(se.begin(), se.end(), std::less_equal<>()) == se.end();
  out.resolvent_decreasing = true;
  for (std::size_t i = 1; i < nn; ++i)
    for (std::size_t j = 0; j < opts.lambdas.size(); ++j)
      if (out.tk.resolvent_error[i][j] > out.tk.resolvent_error[i - 1][j]) out.resolvent_decreasing = false;
  const auto& od = out.off_domain;
  out.off_domain_decreasing = std::is_sorted(od.rbegin(), od.rend());
  out.assumptions =
      "continuum shapes are Dirichlet regular and stable; errors are sup norms over the listed t and f; "
      "graph gaps are sampled";
  std::ostringstream msg;
  msg << "perturbation_experiment: " << nn << " masks, final S-error " << se.back() << ", final off-domain "
      << od.back();
  log::info(msg.str());
  return out;
}

SectorUniformity sector_uniformity(const std::vector<Mask>& masks, double eps, int rays, int radii,
                                   Execution exec) {
  const double half_pi = std::acos(-1.0) / 2;
  if (!(eps > 0.0 && eps < half_pi)) throw InvalidInput("sector_uniformity: eps must lie in (0, pi/2)");
  if (rays < 1 || radii < 1) throw InvalidInput("sector_uniformity: need at least one sample");
  SectorUniformity ev;
  ev.per_mask.assign(masks.size(), 0.0);
  const double th = half_pi - eps;
  for_each_index(masks.size(), exec, [&](std::size_t i) {
    const DirichletOperator op(masks[i]);
    double worst = 0.0;
    for (int a = 0; a < rays; ++a) {
      const double theta = rays == 1 ? 0.0 : -th + 2.0 * th * a / (rays - 1);
      for (int r = 0; r < radii; ++r) {
        const double rad = std::pow(10.0, radii == 1 ? 0.0 : -2.0 + 6.0 * r / (radii - 1));
        worst = std::max(worst, rad * supnorm_resolvent_norm(op, std::polar(rad, theta), Execution::serial));
      }
    }
    ev.per_mask[i] = worst;
  });
  ev.bound = ev.per_mask.empty() ? 0.0 : *std::max_element(ev.per_mask.begin(), ev.per_mask.end());
  ev.finite = std::isfinite(ev.bound);
  return ev;
}

HeatOrbit heat_orbit(const HeatGenerator& gen, const Vector& u0, const std::vector<double>& t_grid,
                     double membership_tol) {
  if (u0.size() != gen.dim()) throw InvalidInput("heat_orbit: initial value has the wrong length");
  for (std::size_t k = 0; k < t_grid.size(); ++k)
    if (!(t_grid[k] > 0.0) || (k > 0 && !(t_grid[k] > t_grid[k - 1])))
      throw InvalidInput("heat_orbit: t-grid must be positive and increasing");
  const Mask& mask = gen.op().mask();
  HeatOrbit o;
  o.t = t_grid;
  Vector pu0 = u0;
  for (Index i = 0; i < u0.size(); ++i)
    if (!mask.contains(i)) pu0(i) = 0.0;
  o.projection_error = (gen.semigroup_apply(0.0, u0) - pu0).cwiseAbs().maxCoeff();
  const double scale = std::max(1.0, linalg::sup_norm(u0));
  bool member_ok = true;
  for (double t : t_grid) {
    const Vector u = gen.semigroup_apply(t, u0);
    const double dt = 1e-4 * t;
    const Vector du = (gen.semigroup_apply(t + dt, u0) - gen.semigroup_apply(t - dt, u0)) / (2.0 * dt);
    const double dist = gen.graph_distance(u, du);
    if (!(dist <= membership_tol * scale)) member_ok = false;
    o.membership.push_back(dist);
    o.initial_trace.push_back((u - pu0).norm());
    for (Index i = 0; i < u.size(); ++i)
      if (!mask.contains(i)) o.off_domain_max = std::max(o.off_domain_max, std::abs(u(i)));
    o.u.push_back(u);
  }
  const bool trace_ok = o.initial_trace.empty() || o.initial_trace.front() <= o.initial_trace.back();
  o.passed = member_ok && trace_ok && o.off_domain_max == 0.0 && o.projection_error <= 1e-14 * scale;
  return o;
}

}  // namespace relsemi::heat
