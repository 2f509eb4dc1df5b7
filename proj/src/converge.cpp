// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/converge.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include <boost/math/tools/minima.hpp>

#include "relsemi/errors.hpp"
#include "relsemi/logging.hpp"
#include "relsemi/random.hpp"
#include "relsemi/spectral.hpp"

namespace relsemi {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

}  // namespace

RelationGenerator::RelationGenerator(LinearRelation a, double cert_tol)
    : a_(std::move(a)), sd_(decompose(a_, cert_tol)) {}

Vector RelationGenerator::resolvent_apply(Scalar lambda, const Vector& f) const {
  return try_resolvent(lambda, a_).matrix * f;
}

double RelationGenerator::resolvent_norm(Scalar lambda) const {
  return linalg::norm2(try_resolvent(lambda, a_).matrix);
}

Vector RelationGenerator::integrated_apply(double t, const Vector& f) const { return integrated_at(sd_, t) * f; }

Vector RelationGenerator::semigroup_apply(Scalar z, const Vector& f) const { return holomorphic_at(sd_, z) * f; }

bool RelationGenerator::range_full(Scalar mu) const { return shift(mu, a_).ran().is_full(); }

double RelationGenerator::graph_gap(const Generator& other) const {
  const auto* r = dynamic_cast<const RelationGenerator*>(&other);
  if (!r) throw InvalidInput("graph_gap: generators of different kinds");
  return gap(a_.graph(), r->a_.graph());
}

double RelationGenerator::sector_ratio(const SectorSpec& spec, double eps) const {
  const SectorEvidence ev = sector_verify(a_, spec, eps);
  if (!ev.passed && ev.worst_norm <= ev.bound + 1e-8) return kInf;  // left the resolvent set
  return ev.worst_norm / ev.bound;
}

RelationSequence RelationSequence::from_rule(const std::function<LinearRelation(double)>& rule,
                                             const std::vector<double>& index) {
  RelationSequence s;
  s.index = index;
  for (double n : index) s.items.push_back(rule(n));
  return s;
}

GeneratorSequence GeneratorSequence::from_relations(const RelationSequence& seq, double cert_tol) {
  GeneratorSequence g;
  g.index = seq.index;
  for (const LinearRelation& a : seq.items) g.items.push_back(std::make_shared<RelationGenerator>(a, cert_tol));
  return g;
}

EmpiricalLimit empirical_limit(const RelationSequence& seq, double cauchy_tol, std::size_t window) {
  const std::size_t n = seq.items.size();
  if (window < 2 || n < window) throw InvalidInput("empirical_limit: need items >= window >= 2");
  const LinearRelation& last = seq.items.back();
  EmpiricalLimit out{last, {}};
  double worst = 0.0;
  for (std::size_t k = n - window; k < n; ++k) {
    if (seq.items[k].state_dim() != last.state_dim()) throw InvalidInput("empirical_limit: mixed state dims");
    const double g = gap(seq.items[k].graph(), last.graph());
    out.trace.push_back(g);
    worst = std::max(worst, g);
  }
  if (worst >= cauchy_tol) throw NotCauchy("trailing gap trace exceeds the Cauchy tolerance", worst);
  return out;
}

LinearRelation limit_from_resolvents(Scalar lambda0, const RelationSequence& seq, double cauchy_tol,
                                     std::size_t window, double accept_tol, double norm_cap) {
  const std::size_t n = seq.items.size();
  if (n == 0) throw InvalidInput("limit_from_resolvents: empty sequence");
  window = std::clamp<std::size_t>(window, 1, n);
  std::vector<Matrix> r;
  r.reserve(n);
  for (std::size_t k = 0; k < n; ++k) {
    r.push_back(try_resolvent(lambda0, seq.items[k], accept_tol).matrix);
    const double nr = linalg::norm2(r.back());
    if (!(nr <= norm_cap)) throw UnboundedResolventFamily(k, nr);
  }
  double worst = 0.0;
  for (std::size_t k = n - window; k < n; ++k) worst = std::max(worst, linalg::norm2(r[k] - r.back()));
  if (worst > cauchy_tol)
    throw ResolventNotConvergent("resolvents at lambda0 are not Cauchy on the trailing window", worst);
  return relation_from_resolvent(lambda0, r.back(), seq.items.back().rank_tol());
}

std::vector<Vector> default_f_set(Index d, Field field, std::uint64_t seed, int extra) {
  std::vector<Vector> out;
  for (Index i = 0; i < d; ++i) out.push_back(Vector::Unit(d, i));
  Rng rng(seed);
  for (int k = 0; k < extra; ++k) out.push_back(random_unit_vector(d, field, rng));
  return out;
}

ConvergenceReport trotter_kato_report(const GeneratorSequence& seq, const Generator& limit,
                                      const TrotterKatoOptions& opts) {
  if (seq.items.empty() || seq.index.size() != seq.items.size())
    throw InvalidInput("trotter_kato_report: empty or ragged sequence");
  if (opts.lambdas.empty()) throw InvalidInput("trotter_kato_report: empty lambda grid");
  for (double l : opts.lambdas)
    if (!(l > 0.0)) throw InvalidInput("trotter_kato_report: lambdas must be positive");
  if (!(opts.mu.real() > 0.0)) throw InvalidInput("trotter_kato_report: Re mu must be positive");
  const Index d = limit.dim();
  std::vector<double> tg = opts.t_grid;
  if (tg.empty())
    for (int k = 0; k <= 10; ++k) tg.push_back(0.1 * k);
  const std::vector<Vector> fs = opts.f_set.empty() ? default_f_set(d, Field::complex) : opts.f_set;
  const Norm nk = limit.norm_kind();

  // Limit-side quantities are shared by every n.
  std::vector<std::vector<Vector>> s_lim(tg.size()), t_lim(tg.size()), r_lim(opts.lambdas.size());
  std::vector<Vector> mu_lim;
  for (std::size_t j = 0; j < tg.size(); ++j)
    for (const Vector& f : fs) {
      s_lim[j].push_back(limit.integrated_apply(tg[j], f));
      t_lim[j].push_back(limit.semigroup_apply(tg[j], f));
    }
  for (std::size_t j = 0; j < opts.lambdas.size(); ++j)
    for (const Vector& f : fs) r_lim[j].push_back(limit.resolvent_apply(opts.lambdas[j], f));
  for (const Vector& f : fs) mu_lim.push_back(limit.resolvent_apply(opts.mu, f));

  ConvergenceReport rep;
  rep.index = seq.index;
  const std::size_t nn = seq.items.size();
  rep.s_error.assign(nn, 0.0);
  rep.t_error.assign(nn, 0.0);
  rep.single_error.assign(nn, 0.0);
  rep.mu_error.assign(nn, 0.0);
  rep.gap.assign(nn, 0.0);
  rep.resolvent_error.assign(nn, std::vector<double>(opts.lambdas.size(), 0.0));
  double mu_sup = 0.0;
  bool mu_bounded = true;

  for (std::size_t i = 0; i < nn; ++i) {
    const Generator& an = *seq.items[i];
    if (an.dim() != d) throw InvalidInput("trotter_kato_report: state dims differ");
    const double n = seq.index[i];
    for (std::size_t j = 0; j < tg.size(); ++j) {
      double se = 0.0, te = 0.0;
      for (std::size_t k = 0; k < fs.size(); ++k) {
        se = std::max(se, norm(Vector(an.integrated_apply(tg[j], fs[k]) - s_lim[j][k]), nk));
        te = std::max(te, norm(Vector(an.semigroup_apply(tg[j], fs[k]) - t_lim[j][k]), nk));
      }
      rep.rows.push_back({n, "S", tg[j], se});
      rep.rows.push_back({n, "T", tg[j], te});
      rep.s_error[i] = std::max(rep.s_error[i], se);
      rep.t_error[i] = std::max(rep.t_error[i], te);
    }
    for (std::size_t j = 0; j < opts.lambdas.size(); ++j) {
      double re = 0.0;
      for (std::size_t k = 0; k < fs.size(); ++k)
        re = std::max(re, norm(Vector(an.resolvent_apply(opts.lambdas[j], fs[k]) - r_lim[j][k]), nk));
      rep.resolvent_error[i][j] = re;
      rep.rows.push_back({n, "R", opts.lambdas[j], re});
    }
    rep.single_error[i] = rep.resolvent_error[i][0];
    rep.rows.push_back({n, "R1", opts.lambdas[0], rep.single_error[i]});
    try {
      const double nr = an.resolvent_norm(opts.mu);
      mu_sup = std::max(mu_sup, nr);
      if (!(nr <= opts.norm_cap)) mu_bounded = false;
      double me = 0.0;
      for (std::size_t k = 0; k < fs.size(); ++k)
        me = std::max(me, norm(Vector(an.resolvent_apply(opts.mu, fs[k]) - mu_lim[k]), nk));
      rep.mu_error[i] = me;
    } catch (const NotInResolventSet&) {
      mu_bounded = false;
      rep.mu_error[i] = kInf;
    }
    rep.rows.push_back({n, "Rmu", opts.mu, rep.mu_error[i]});
    rep.gap[i] = an.graph_gap(limit);
    rep.rows.push_back({n, "gap", 0.0, rep.gap[i]});
  }

  rep.mu_sup_norm = mu_sup;
  rep.mu_hypotheses = mu_bounded && limit.range_full(opts.mu);
  const double tol = opts.tol;
  rep.verdict[0] = rep.s_error.back() <= tol;
  rep.verdict[1] = std::all_of(rep.resolvent_error.back().begin(), rep.resolvent_error.back().end(),
                               [&](double e) { return e <= tol; });
  rep.verdict[2] = rep.single_error.back() <= tol;
  rep.verdict[3] = rep.mu_error.back() <= tol;
  rep.verdict[4] = rep.gap.back() <= tol;
  rep.consistent = rep.verdict[0] == rep.verdict[1] && rep.verdict[0] == rep.verdict[2] &&
                   rep.verdict[0] == rep.verdict[4] && (!rep.mu_hypotheses || rep.verdict[0] == rep.verdict[3]);
  rep.passed = rep.consistent && rep.verdict[0];
  if (!rep.consistent) {
    std::ostringstream msg;
    msg << "Trotter-Kato items disagree at tol " << tol << ": (i) " << rep.s_error.back() << ", (ii) "
        << *std::max_element(rep.resolvent_error.back().begin(), rep.resolvent_error.back().end()) << ", (iii) "
        << rep.single_error.back() << ", (iv) " << rep.mu_error.back() << ", (v) " << rep.gap.back();
    if (opts.strict) throw InconsistentEquivalence(msg.str());
    log::warn(msg.str());
  }
  return rep;
}

ConvergenceReport trotter_kato_report(const RelationSequence& seq, const LinearRelation& limit,
                                      TrotterKatoOptions opts) {
  const RelationGenerator lim(limit);
  if (opts.f_set.empty()) opts.f_set = default_f_set(limit.state_dim(), limit.field());
  return trotter_kato_report(GeneratorSequence::from_relations(seq), lim, opts);
}

double sup_integrated_error(const Generator& an, const Generator& a, const Vector& f, double horizon,
                            int grid_points) {
  if (!(horizon > 0.0) || grid_points < 3) throw InvalidInput("sup_integrated_error: bad horizon or grid");
  const Norm nk = a.norm_kind();
  auto err = [&](double t) { return norm(Vector(an.integrated_apply(t, f) - a.integrated_apply(t, f)), nk); };
  const double h = horizon / (grid_points - 1);
  int best = 0;
  double best_val = -1.0;
  for (int k = 0; k < grid_points; ++k) {
    const double e = err(k * h);
    if (e > best_val) {
      best_val = e;
      best = k;
    }
  }
  const double lo = std::max(0.0, (best - 1) * h);
  const double hi = std::min(horizon, (best + 1) * h);
  const auto r = boost::math::tools::brent_find_minima([&](double t) { return -err(t); }, lo, hi,
                                                       std::numeric_limits<double>::digits);
  return std::max(best_val, -r.second);
}

HolomorphicReport holomorphic_convergence_report(const GeneratorSequence& seq, const Generator& limit,
                                                 const SectorSpec& spec, const std::vector<Scalar>& z_grid,
                                                 const std::vector<Vector>& f_set, double tol) {
  if (seq.items.empty() || z_grid.empty() || f_set.empty())
    throw InvalidInput("holomorphic_convergence_report: empty sequence, z-grid or f-set");
  const double eps = spec.alpha / 2.0;
  HolomorphicReport rep;
  rep.index = seq.index;
  for (std::size_t i = 0; i < seq.items.size(); ++i) {
    const double ratio = seq.items[i]->sector_ratio(spec, eps);
    rep.sector_ratio.push_back(ratio);
    if (!(ratio <= 1.0 + 1e-8)) throw SectorHypothesisFailed(i, ratio);
  }
  rep.limit_sector_ratio = limit.sector_ratio(spec, eps);
  if (!(rep.limit_sector_ratio <= 1.0 + 1e-8)) throw SectorHypothesisFailed(seq.items.size(), rep.limit_sector_ratio);

  const Norm nk = limit.norm_kind();
  std::vector<std::vector<Vector>> lim(z_grid.size());
  for (std::size_t j = 0; j < z_grid.size(); ++j)
    for (const Vector& f : f_set) lim[j].push_back(limit.semigroup_apply(z_grid[j], f));
  for (const auto& g : seq.items) {
    double e = 0.0;
    for (std::size_t j = 0; j < z_grid.size(); ++j)
      for (std::size_t k = 0; k < f_set.size(); ++k)
        e = std::max(e, norm(Vector(g->semigroup_apply(z_grid[j], f_set[k]) - lim[j][k]), nk));
    rep.error.push_back(e);
  }
  rep.decreasing = true;
  for (std::size_t i = 1; i < rep.error.size(); ++i)
    if (!(rep.error[i] < rep.error[i - 1])) rep.decreasing = false;
  rep.passed = rep.error.back() <= rep.error.front() && rep.error.back() <= tol;
  return rep;
}

HolomorphicReport holomorphic_convergence_report(const RelationSequence& seq, const SectorSpec& spec,
                                                 const std::vector<Scalar>& z_grid,
                                                 const std::vector<Vector>& f_set, double tol, double cauchy_tol) {
  const RelationGenerator lim(limit_from_resolvents(1.0, seq, cauchy_tol));
  return holomorphic_convergence_report(GeneratorSequence::from_relations(seq), lim, spec, z_grid, f_set, tol);
}

}  // namespace relsemi
