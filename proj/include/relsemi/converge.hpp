// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "relsemi/semigroup.hpp"
#include "relsemi/spectral.hpp"

namespace relsemi {

/// What the convergence reports need from an m-dissipative generator. Dense
/// relations implement it directly; heatlab provides a structured version for
/// grids too large to materialize.
class Generator {
 public:
  virtual ~Generator() = default;
  virtual Index dim() const = 0;
  /// Norm in which errors and resolvent bounds are measured.
  virtual Norm norm_kind() const = 0;
  virtual Vector resolvent_apply(Scalar lambda, const Vector& f) const = 0;
  /// ‖R(λ, A)‖ in norm_kind().
  virtual double resolvent_norm(Scalar lambda) const = 0;
  virtual Vector integrated_apply(double t, const Vector& f) const = 0;
  virtual Vector semigroup_apply(Scalar z, const Vector& f) const = 0;
  /// ran(μ - A) = K^d.
  virtual bool range_full(Scalar mu) const = 0;
  /// Distance between the graphs of this generator and `other`.
  virtual double graph_gap(const Generator& other) const = 0;
  /// Max sampled ‖λR(λ, A)‖ over Σ_{α+π/2-ε} divided by M/sin ε; +inf if a
  /// sample leaves the resolvent set.
  virtual double sector_ratio(const SectorSpec& spec, double eps) const = 0;
};

class RelationGenerator final : public Generator {
 public:
  /// Throws NotMDissipative.
  explicit RelationGenerator(LinearRelation a, double cert_tol = kDefaultCertTol);

  const LinearRelation& relation() const { return a_; }
  const SemigroupData& data() const { return sd_; }

  Index dim() const override { return a_.state_dim(); }
  Norm norm_kind() const override { return Norm::l2; }
  Vector resolvent_apply(Scalar lambda, const Vector& f) const override;
  double resolvent_norm(Scalar lambda) const override;
  Vector integrated_apply(double t, const Vector& f) const override;
  Vector semigroup_apply(Scalar z, const Vector& f) const override;
  bool range_full(Scalar mu) const override;
  double graph_gap(const Generator& other) const override;
  double sector_ratio(const SectorSpec& spec, double eps) const override;

 private:
  LinearRelation a_;
  SemigroupData sd_;
};

/// A finite sequence A_n with its index labels n.
struct RelationSequence {
  std::vector<double> index;
  std::vector<LinearRelation> items;

  static RelationSequence from_rule(const std::function<LinearRelation(double)>& rule,
                                    const std::vector<double>& index);
};

struct GeneratorSequence {
  std::vector<double> index;
  std::vector<std::shared_ptr<const Generator>> items;

  /// Wraps every relation in a RelationGenerator (checks m-dissipativity).
  static GeneratorSequence from_relations(const RelationSequence& seq, double cert_tol = kDefaultCertTol);
};

struct EmpiricalLimit {
  LinearRelation limit;
  std::vector<double> trace;  // gap(A_n, A_N) over the trailing window, oldest first
};

/// Throws NotCauchy when the trailing-window gaps exceed `cauchy_tol`.
EmpiricalLimit empirical_limit(const RelationSequence& seq, double cauchy_tol, std::size_t window);

/// relation_from_resolvent(λ0, R_N) once ‖R(λ0, A_n) - R_N‖₂ ≤ cauchy_tol on the
/// trailing window. Throws UnboundedResolventFamily when some ‖R(λ0, A_n)‖₂
/// exceeds `norm_cap` and ResolventNotConvergent when the window is not Cauchy.
LinearRelation limit_from_resolvents(Scalar lambda0, const RelationSequence& seq, double cauchy_tol,
                                     std::size_t window = 3, double accept_tol = kDefaultAcceptTol,
                                     double norm_cap = 1e8);

/// The canonical basis plus `extra` seeded Gaussian unit vectors.
std::vector<Vector> default_f_set(Index d, Field field, std::uint64_t seed = 0, int extra = 3);

struct TrotterKatoOptions {
  std::vector<double> lambdas{0.5, 1.0, 2.0};
  std::vector<double> t_grid;  // defaults to 0:0.1:1 when empty
  std::vector<Vector> f_set;   // defaults to default_f_set
  Scalar mu{1.0, 1.0};
  double tol = 1e-2;
  double norm_cap = 1e8;
  /// Throw InconsistentEquivalence when the item verdicts disagree.
  bool strict = true;
};

struct ReportRow {
  double n;
  std::string kind;  // S, T, R, R1, Rmu, gap
  Scalar param;
  double error;
};

struct ConvergenceReport {
  std::vector<double> index;
  std::vector<double> s_error;                      // (i) sup over t-grid and f
  std::vector<std::vector<double>> resolvent_error;  // (ii) [n][λ], max over f
  std::vector<double> single_error;                 // (iii) first λ only
  std::vector<double> mu_error;                     // (iv)
  std::vector<double> gap;                          // (v)
  std::vector<double> t_error;                      // diagnostic: T_n(t) vs T(t)
  double mu_sup_norm = 0.0;
  bool mu_hypotheses = false;
  bool verdict[5] = {false, false, false, false, false};
  bool consistent = false;
  bool passed = false;
  std::vector<ReportRow> rows;
};

ConvergenceReport trotter_kato_report(const GeneratorSequence& seq, const Generator& limit,
                                      const TrotterKatoOptions& opts);
ConvergenceReport trotter_kato_report(const RelationSequence& seq, const LinearRelation& limit,
                                      TrotterKatoOptions opts);

/// sup_{t ∈ [0, horizon]} ‖S_n(t)f - S(t)f‖ by a grid scan refined with Brent's method.
double sup_integrated_error(const Generator& an, const Generator& a, const Vector& f, double horizon,
                            int grid_points = 2001);

struct HolomorphicReport {
  std::vector<double> index;
  std::vector<double> sector_ratio;  // per n, ≤ 1 required
  double limit_sector_ratio = 0.0;
  std::vector<double> error;         // max over z-grid and f of ‖T_n(z)f - T(z)f‖
  bool decreasing = false;           // strictly, along the sequence
  bool passed = false;               // last ≤ first and last ≤ tol
};

/// Requires every A_n to satisfy the sector hypothesis at ε = α/2
/// (SectorHypothesisFailed otherwise) and checks the limit as well.
HolomorphicReport holomorphic_convergence_report(const GeneratorSequence& seq, const Generator& limit,
                                                 const SectorSpec& spec, const std::vector<Scalar>& z_grid,
                                                 const std::vector<Vector>& f_set, double tol);
/// Builds the limit with limit_from_resolvents at λ0 = 1.
HolomorphicReport holomorphic_convergence_report(const RelationSequence& seq, const SectorSpec& spec,
                                                 const std::vector<Scalar>& z_grid,
                                                 const std::vector<Vector>& f_set, double tol,
                                                 double cauchy_tol = 1e-2);

}  // namespace relsemi
