// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

// Acceptance runner: one PASS/FAIL line per criterion, each with its runtime
// against the allowed budget. Exit status 1 when any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <numbers>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "relsemi/converge.hpp"
#include "relsemi/dissipative.hpp"
#include "relsemi/errors.hpp"
#include "relsemi/heat/dirichlet.hpp"
#include "relsemi/heat/experiment.hpp"
#include "relsemi/random.hpp"
#include "relsemi/semigroup.hpp"
#include "relsemi/spectral.hpp"

using namespace relsemi;

namespace {

constexpr double kPi = std::numbers::pi;

// Collects sub-check outcomes and a short diagnostic line.
struct Check {
  bool ok = true;
  std::ostringstream note;

  void expect(bool cond, const std::string& what) {
    if (!cond) {
      if (ok) note << "failed: ";
      note << what << "; ";
      ok = false;
    }
  }
};

Field field_for(int k) { return k % 2 == 0 ? Field::real : Field::complex; }
Index dim_for(Rng& rng) { return std::uniform_int_distribution<Index>(1, 8)(rng); }

std::vector<LinearRelation> relation_battery(std::uint64_t seed, int count) {
  Rng rng(seed);
  std::vector<LinearRelation> out;
  for (int k = 0; k < count; ++k) out.push_back(random_relation(dim_for(rng), field_for(k), rng));
  return out;
}

std::vector<LinearRelation> m_dissipative_battery(std::uint64_t seed, int count, bool proper_mul = false) {
  Rng rng(seed);
  std::vector<LinearRelation> out;
  for (int k = 0; k < count; ++k) {
    MDissipativeOptions o;
    const Index d = proper_mul ? std::max<Index>(2, dim_for(rng)) : dim_for(rng);
    if (proper_mul) {
      o.min_dom = 1;
      o.max_dom = d - 1;
    }
    out.push_back(random_m_dissipative(d, field_for(k), rng, o));
  }
  return out;
}

LinearRelation scalar_relation(Scalar s) {
  Matrix m(1, 1);
  m(0, 0) = s;
  return LinearRelation::from_matrix(m, field_of(m));
}

// 1 and the bump 1 - |x|²/2 on the grid nodes.
std::vector<Vector> grid_f_set(const heat::Grid& g) {
  Vector one = Vector::Ones(g.size()), bump(g.size());
  for (Index k = 0; k < g.size(); ++k) {
    const auto p = g.point(k);
    bump(k) = 1.0 - (p[0] * p[0] + p[1] * p[1]) / 2.0;
  }
  return {one, bump};
}

bool strictly_decreasing(const std::vector<double>& v) {
  for (std::size_t i = 1; i < v.size(); ++i)
    if (!(v[i] < v[i - 1])) return false;
  return true;
}

std::string join_values(const std::vector<double>& v) {
  std::ostringstream s;
  s.precision(3);
  for (std::size_t i = 0; i < v.size(); ++i) s << (i ? " " : "") << v[i];
  return s.str();
}

// ---------------------------------------------------------------------------

Check adjoint_duality() {
  Check c;
  double worst = 0.0;
  for (const LinearRelation& a : relation_battery(1, 200)) {
    const LinearRelation ad = adjoint(a);
    worst = std::max({worst, gap(ad.ker(), complement(a.ran())), gap(a.ker(), complement(ad.ran()))});
  }
  c.expect(worst <= 1e-11, "gap above 1e-11");
  c.note << "worst gap " << worst;
  return c;
}

Check surjectivity_duality() {
  Check c;
  int agree = 0, surjective = 0;
  for (const LinearRelation& a : relation_battery(1, 200)) {
    const bool positive = surjectivity_modulus(a).exceeds(1e-8);
    const bool full = a.ran().dim() == a.state_dim();
    agree += positive == full;
    surjective += full;
  }
  c.expect(agree == 200, "modulus and rank disagree");
  Rng rng(2);
  int instances = 0, perturbed_ok = 0;
  while (instances < 50) {
    const Index d = dim_for(rng);
    const LinearRelation a = random_relation(d, field_for(instances), rng);
    if (!a.ran().is_full()) continue;
    // An infinite radius (A = K^d × K^d) admits every perturbation; probe at 1.
    const Modulus rad = surjectivity_radius(a);
    const double r = rad.is_infinite() ? 1.0 : rad.value();
    for (int k = 0; k < 20; ++k) {
      Matrix b = random_matrix(d, d, a.field(), rng);
      b *= 0.9 * r / linalg::norm2(b);
      perturbed_ok += add_bounded(a, b).ran().is_full();
    }
    ++instances;
  }
  c.expect(perturbed_ok == 1000, "perturbation inside the radius lost surjectivity");
  c.note << agree << "/200 agree (" << surjective << " surjective), " << perturbed_ok << "/1000 perturbations surjective";
  return c;
}

Check resolvent_identity() {
  Check c;
  const std::vector<Scalar> pts{0.5, 2.0, Scalar(1.0, 1.0)};
  double worst = 0.0, neumann = 0.0;
  for (const LinearRelation& a : m_dissipative_battery(3, 100)) {
    for (Scalar l : pts)
      for (Scalar m : pts) worst = std::max(worst, resolvent_identity_residual(a, l, m));
    const Matrix r0 = try_resolvent(1.0, a).matrix;
    // R0 = 0 (pure multivalued A) extends to every λ.
    const double rad = std::min(1.0 / linalg::norm2(r0), 10.0);
    for (int k = 0; k < 4; ++k) {
      const Scalar l = 1.0 + 0.5 * rad * std::polar(1.0, kPi * k / 2);
      const Matrix direct = try_resolvent(l, a).matrix;
      neumann = std::max(neumann, linalg::norm2(neumann_extend(1.0, r0, l) - direct) / std::max(1.0, linalg::norm2(direct)));
    }
  }
  c.expect(worst <= 1e-10, "identity residual");
  c.expect(neumann <= 1e-9, "Neumann continuation");
  c.note << "identity " << worst << ", Neumann " << neumann;
  return c;
}

Check pseudo_resolvent_round_trip() {
  Check c;
  double worst = 0.0;
  for (const LinearRelation& a : m_dissipative_battery(4, 200)) {
    const ResolventSample s = try_resolvent(1.0, a);
    worst = std::max(worst, gap(relation_from_resolvent(1.0, s.matrix).graph(), a.graph()));
  }
  c.expect(worst <= 1e-11, "round-trip gap");
  c.note << "worst gap " << worst;
  return c;
}

Check lumer_phillips() {
  Check c;
  int inverted = 0;
  double worst = 0.0;
  for (const LinearRelation& a : m_dissipative_battery(5, 100)) {
    const LumerPhillipsResult lp = lumer_phillips_invert(a);
    inverted += lp.kernel_trivial && lp.evidence.m_dissipative;
    try_resolvent(0.0, a);  // 0 ∈ ρ(A), throws otherwise
    for (int k = -3; k <= 6; ++k) {
      const double l = std::pow(10.0, k);
      worst = std::max(worst, l * linalg::norm2(try_resolvent(l, a).matrix));
    }
  }
  c.expect(inverted == 100, "inversion");
  c.expect(worst <= 1.0 + 1e-9, "resolvent bound");
  c.note << inverted << "/100 inverted, max ||lR|| = " << worst;
  return c;
}

Check maximal_extension() {
  Check c;
  const double zero_gap = gap(maximal_dissipative_extension(LinearRelation::zero(1)).graph(),
                              LinearRelation::from_matrix(-Matrix::Identity(1, 1)).graph());
  c.expect(zero_gap <= 1e-12, "zero relation");
  Rng rng(6);
  int m_diss = 0;
  double idem = 0.0, contain = 0.0;
  for (int k = 0; k < 100; ++k) {
    const LinearRelation a = random_dissipative(dim_for(rng), field_for(k), rng);
    const LinearRelation b = maximal_dissipative_extension(a);
    m_diss += is_m_dissipative(b).m_dissipative;
    idem = std::max(idem, gap(maximal_dissipative_extension(b).graph(), b.graph()));
    contain = std::max(contain, max_member_distance(b.graph(), a.graph().basis()));
  }
  c.expect(m_diss == 100, "extension not m-dissipative");
  c.expect(idem <= 1e-10, "not idempotent");
  c.expect(contain <= 1e-10, "does not extend A");
  c.note << "zero gap " << zero_gap << ", " << m_diss << "/100 m-dissipative, idempotence " << idem;
  return c;
}

Check generation() {
  Check c;
  double worst_slope = -1e9, raw_slope = -1e9, law = 0.0, annihilate = 0.0, t_last = 0.0;
  bool monotone = true, t_monotone = true;
  for (const LinearRelation& a : m_dissipative_battery(7, 50, true)) {
    const SemigroupData sd = decompose(a);
    // Decades are taken relative to the generator scale s = max(1, ‖M1‖):
    // λ = s·10^k, which is the fixed window 10^k applied to A/s.
    const double scale = std::max(1.0, linalg::norm2(sd.m1));
    const auto slope_of = [&](double s, bool* mono) {
      std::vector<double> ly;
      for (int k = 1; k <= 6; ++k) {
        const double l = s * std::pow(10.0, k);
        ly.push_back(std::log10(linalg::norm2(l * try_resolvent(l, a).matrix - sd.p)));
      }
      if (mono) *mono = strictly_decreasing(ly);
      double my = 0.0;
      for (double y : ly) my += y / 6;
      double num = 0.0, den = 0.0;
      for (int i = 0; i < 6; ++i) {
        num += (i + 1 - 3.5) * (ly[i] - my);
        den += (i + 1 - 3.5) * (i + 1 - 3.5);
      }
      return num / den;
    };
    bool mono = false;
    worst_slope = std::max(worst_slope, slope_of(scale, &mono));
    monotone = monotone && mono;
    raw_slope = std::max(raw_slope, slope_of(1.0, nullptr));
    std::vector<double> tr;
    for (int k = 1; k <= 8; ++k) tr.push_back(linalg::norm2(semigroup_at(sd, std::pow(10.0, -k)) - sd.p));
    t_monotone = t_monotone && strictly_decreasing(tr);
    t_last = std::max(t_last, tr.back());
    for (double t : {0.3, 1.0})
      for (double s : {0.2, 0.7})
        law = std::max(law, linalg::norm2(semigroup_at(sd, t + s) - semigroup_at(sd, t) * semigroup_at(sd, s)));
    if (!a.mul().is_zero())
      for (double t : {0.0, 0.5, 2.0})
        annihilate = std::max(annihilate, linalg::norm2(semigroup_at(sd, t) * a.mul().basis()));
  }
  c.expect(monotone, "lR - P not decreasing");
  c.expect(worst_slope <= -0.9, "slope above -0.9");
  c.expect(t_monotone && t_last <= 1e-6, "T(t) does not approach P");
  c.expect(law <= 1e-10, "semigroup law");
  c.expect(annihilate <= 1e-12, "T does not annihilate mul A");
  c.note << "worst slope " << worst_slope << " (fixed window " << raw_slope << "), ||T(1e-8)-P|| " << t_last << ", law " << law << ", mul " << annihilate;
  return c;
}

Check integrated_semigroup() {
  Check c;
  double lip = -1.0, fe = 0.0, lap = 0.0;
  const std::vector<double> ts{0.0, 0.1, 0.3, 0.7, 1.0, 1.5, 2.5};
  for (const LinearRelation& a : m_dissipative_battery(8, 30, true)) {
    const SemigroupData sd = decompose(a);
    for (double t : ts)
      for (double s : ts)
        lip = std::max(lip, linalg::norm2(integrated_at(sd, t) - integrated_at(sd, s)) - std::abs(t - s));
    for (double t : {0.3, 1.0})
      for (double s : {0.3, 1.0}) {
        const FunctionalEqResidual r = functional_eq_residual(sd, t, s);
        fe = std::max({fe, r.first, r.second});
      }
    for (Scalar l : {Scalar(1.0), Scalar(2.0, 1.0)}) lap = std::max(lap, laplace_residual_integrated(sd, a, l, 40.0));
  }
  c.expect(lip <= 1e-10, "Lipschitz bound");
  c.expect(fe <= 1e-8, "functional equation");
  c.expect(lap <= 1e-9, "Laplace transform");
  c.note << "Lipschitz excess " << lip << ", functional eq " << fe << ", Laplace " << lap;
  return c;
}

Check mild_solutions() {
  Check c;
  std::vector<double> tg;
  for (int k = 0; k <= 30; ++k) tg.push_back(0.1 * k);
  double member = 0.0, excess = -1e9;
  bool zero = true;
  Rng rng(9);
  for (const LinearRelation& a : m_dissipative_battery(9, 40, true)) {
    const SemigroupData sd = decompose(a);
    const MildSolution ms = mild_solution(sd, a, random_unit_vector(a.state_dim(), a.field(), rng), tg);
    member = std::max(member, ms.max_membership);
    excess = std::max(excess, ms.lipschitz_excess);
    const Vector x = a.mul().basis() * random_unit_vector(a.mul().dim(), a.field(), rng);
    // Zero up to rounding in the oblique X1 coordinates.
    zero = zero && mild_solution(sd, a, x, tg).u.cwiseAbs().maxCoeff() <= 1e-14 * x.norm();
  }
  c.expect(member <= 1e-8, "membership");
  c.expect(excess <= 1e-9, "Lipschitz in t");
  c.expect(zero, "x in mul A gives a nonzero orbit");
  c.note << "membership " << member << ", Lipschitz excess " << excess;
  return c;
}

Check example_rotation() {
  Check c;
  const auto rot = [](double n) { return scalar_relation(Scalar(0.0, n)); };
  const LinearRelation lim = LinearRelation::pure_multivalued(1, Field::complex);
  const RelationGenerator glim(lim);
  double sup_dev = 0.0;
  for (double n : {10.0, 100.0}) {
    const double s = sup_integrated_error(RelationGenerator(rot(n)), glim, Vector::Ones(1), 10.0);
    sup_dev = std::max(sup_dev, std::abs(s - 2.0 / n));
  }
  c.expect(sup_dev <= 1e-12, "sup |S_n| differs from 2/n");
  const RelationSequence seq = RelationSequence::from_rule(rot, {10, 100, 1000});
  TrotterKatoOptions o;
  o.strict = false;
  const ConvergenceReport r = trotter_kato_report(seq, lim, o);
  c.expect(r.verdict[0] && r.verdict[1] && r.verdict[2] && r.verdict[4], "items (i), (ii), (iii), (v)");
  bool bound = true, t_stays = true;
  for (std::size_t i = 0; i < r.index.size(); ++i) {
    bound = bound && r.s_error[i] <= 2.0 / r.index[i] + 1e-12;
    const Vector diff = RelationGenerator(seq.items[i]).semigroup_apply(1.0, Vector::Ones(1)) -
                        glim.semigroup_apply(1.0, Vector::Ones(1));
    t_stays = t_stays && diff.norm() >= 0.5;
  }
  c.expect(bound, "S-error above 2/n");
  c.expect(t_stays, "T_n(1) approaches T(1)");
  c.note << "|sup - 2/n| " << sup_dev << ", S-errors " << join_values(r.s_error);
  return c;
}

struct HeatFamilies {
  heat::Grid g = heat::Grid::box(0.0, 0.0, 1.0, 64);
  heat::Mask disk = heat::disk(g, 0.0, 0.0, 0.7);
  std::vector<heat::Mask> polygons = heat::polygon_family(g, 0.0, 0.0, 0.7, {3, 6, 12, 24, 48, 96});
  std::vector<heat::Mask> slits = heat::slit_family(g, 0.7, {8 * g.h(), 6 * g.h(), 4 * g.h(), 2 * g.h(), g.h()});
  heat::Mask cracked = heat::slit_family(g, 0.7, {g.h()}).front();
  std::vector<heat::Mask> outer =
      heat::disk_family(g, {0.7 + 6 * g.h(), 0.7 + 4 * g.h(), 0.7 + 2 * g.h(), 0.7 + g.h()});
};

const HeatFamilies& families() {
  static const HeatFamilies f;
  return f;
}

Check heat_domain_convergence() {
  Check c;
  const HeatFamilies& f = families();
  heat::HeatExperimentOptions o;
  o.certify = false;  // criterion 12 certifies every mask
  o.f_set = grid_f_set(f.g);
  const heat::HeatConvergence p = heat::perturbation_experiment(f.polygons, f.disk, o);
  c.expect(p.s_strictly_decreasing, "polygon S-errors not strictly decreasing");
  c.expect(p.tk.s_error.back() <= 0.05, "final polygon S-error above 0.05");
  c.expect(p.resolvent_decreasing, "polygon resolvent errors not decreasing");
  const heat::HeatConvergence s = heat::perturbation_experiment(f.slits, f.cracked, o);
  c.expect(s.s_strictly_decreasing, "slit S-errors not strictly decreasing");
  c.expect(s.tk.s_error.back() <= 0.05, "final slit S-error above 0.05");
  c.expect(s.resolvent_decreasing, "slit resolvent errors not decreasing");
  const heat::HeatConvergence d = heat::perturbation_experiment(f.outer, f.disk, o);
  c.expect(d.off_domain_decreasing && d.off_domain.back() <= 0.05, "off-domain values do not decay");
  c.expect(d.s_strictly_decreasing, "outer-disk S-errors not strictly decreasing");
  c.note << "polygons S " << join_values(p.tk.s_error) << " | slits S " << join_values(s.tk.s_error)
         << " | outer off-domain " << join_values(d.off_domain);
  return c;
}

Check contraction_and_max_principle() {
  Check c;
  const HeatFamilies& f = families();
  std::vector<heat::Mask> all{f.disk, f.cracked};
  for (const auto* fam : {&f.polygons, &f.slits, &f.outer}) all.insert(all.end(), fam->begin(), fam->end());
  double worst = 0.0;
  bool positive = true;
  for (const heat::Mask& m : all) {
    const heat::ContractionEvidence ev = heat::supnorm_contraction(heat::DirichletOperator(m), {0.1, 1.0, 10.0});
    positive = positive && ev.positive && ev.passed;
    for (double v : ev.norms) worst = std::max(worst, v);
  }
  c.expect(worst <= 1.0 + 1e-12 && positive, "contraction");
  const heat::MaxPrincipleEvidence mp = heat::max_principle_check(heat::DirichletOperator(f.disk), 500, 12);
  c.expect(mp.passed && mp.samples == 500, "maximum principle");
  c.note << all.size() << " masks, max ||lR||_inf " << worst << ", worst slack " << mp.worst_slack;
  return c;
}

Check sectorial_estimates() {
  Check c;
  const heat::Grid line = heat::Grid::interval(0.0, 1.0, 9);
  const LinearRelation a = heat::build_dirichlet_relation(heat::Mask::full(line));
  const SectorEvidence ev = sector_verify(a, {kPi / 2, 1.0}, kPi / 4);
  c.expect(ev.passed && ev.worst_norm <= 1.0 / std::sin(kPi / 4) + 1e-8, "interval sector bound");
  const heat::Grid g = heat::Grid::box(0.0, 0.0, 1.0, 32);
  const heat::SectorUniformity u =
      heat::sector_uniformity(heat::polygon_family(g, 0.0, 0.0, 0.7, {3, 6, 12, 24, 48}), kPi / 4);
  c.expect(u.finite, "no finite bound for the mask family");
  c.note << "interval max " << ev.worst_norm << " vs " << ev.bound << ", mask family bound " << u.bound;
  return c;
}

Check holomorphic_convergence() {
  Check c;
  std::vector<Scalar> k;
  for (int j = -4; j <= 4; ++j) k.push_back(std::polar(0.5, j * kPi / 16));
  const RelationSequence seq =
      RelationSequence::from_rule([](double n) { return scalar_relation(-1.0 - 1.0 / n); }, {10, 100, 1000});
  const HolomorphicReport r =
      holomorphic_convergence_report(GeneratorSequence::from_relations(seq), RelationGenerator(scalar_relation(-1.0)),
                                     {kPi / 3, 2.0}, k, {Vector::Ones(1)}, 1e-3);
  c.expect(r.decreasing && r.error.back() <= 1e-3, "graph(-1-1/n) errors");
  const heat::Grid g = heat::Grid::box(0.0, 0.0, 1.0, 32);
  GeneratorSequence hs;
  const std::vector<int> sides{3, 6, 12, 24};
  const auto masks = heat::polygon_family(g, 0.0, 0.0, 0.7, sides);
  for (std::size_t i = 0; i < masks.size(); ++i) {
    hs.index.push_back(sides[i]);
    hs.items.push_back(std::make_shared<heat::HeatGenerator>(masks[i]));
  }
  const HolomorphicReport h = holomorphic_convergence_report(
      hs, heat::HeatGenerator(heat::disk(g, 0.0, 0.0, 0.7)), {kPi / 2, 1.0},
      {Scalar(0.2), std::polar(0.2, kPi / 8)}, grid_f_set(g), 0.05);
  c.expect(h.decreasing, "heat family errors not decreasing");
  c.note << "scalar " << join_values(r.error) << " | heat " << join_values(h.error);
  return c;
}

Check mesh_oracle() {
  Check c;
  double eig = 0.0;
  for (Index m : {9, 99}) {
    const double h = 1.0 / (m + 1);
    const double s = std::sin(kPi * h / 2);
    eig = std::max(eig, std::abs(heat::first_eigenvalue(heat::Mask::full(heat::Grid::interval(0.0, 1.0, m))) -
                                 4.0 / (h * h) * s * s));
  }
  const heat::DirichletOperator op(heat::Mask::full(heat::Grid::interval(0.0, 1.0, 15)));
  const Vector u = heat::surjective_solve(op, Vector::Ones(15));
  double q = 0.0;
  for (Index i = 0; i < 15; ++i) {
    const double x = (i + 1) / 16.0;
    q = std::max(q, std::abs(u(i) - x * (x - 1) / 2));
  }
  c.expect(eig <= 1e-10, "eigenvalue");
  c.expect(q <= 1e-13, "quadratic");
  c.note << "eigenvalue error " << eig << ", quadratic error " << q;
  return c;
}

struct Criterion {
  int id;
  const char* name;
  double budget_s;
  std::function<Check()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "adjoint duality", 5, adjoint_duality},
      {2, "surjectivity duality and radius", 10, surjectivity_duality},
      {3, "resolvent identity and Neumann continuation", 5, resolvent_identity},
      {4, "pseudo-resolvent round trip", 5, pseudo_resolvent_round_trip},
      {5, "Lumer-Phillips for relations", 10, lumer_phillips},
      {6, "maximal dissipative extension", 5, maximal_extension},
      {7, "generation and degeneracy", 10, generation},
      {8, "integrated semigroup", 20, integrated_semigroup},
      {9, "mild solutions", 10, mild_solutions},
      {10, "rotation example S_n(t) = (e^{int} - 1)/(in)", 5, example_rotation},
      {11, "heat domain convergence", 180, heat_domain_convergence},
      {12, "sup-norm contraction and maximum principle", 30, contraction_and_max_principle},
      {13, "sectorial estimates", 30, sectorial_estimates},
      {14, "holomorphic convergence", 60, holomorphic_convergence},
      {15, "mesh oracle", 5, mesh_oracle},
  };
  int failed = 0;
  for (const Criterion& cr : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Check c;
    try {
      c = cr.run();
    } catch (const std::exception& e) {
      c.ok = false;
      c.note << "exception: " << e.what();
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= cr.budget_s;
    const bool pass = c.ok && in_time;
    failed += !pass;
    std::printf("%s %2d %-46s %7.2fs / %4.0fs%s  %s\n", pass ? "PASS" : "FAIL", cr.id, cr.name, secs, cr.budget_s,
                in_time ? "" : " (over budget)", c.note.str().c_str());
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
