// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relsemi/converge.hpp"
#include "relsemi/dissipative.hpp"
#include "relsemi/heat/kernels.hpp"

namespace relsemi::heat {

/// Largest grid for which the dense relation on K^N is materialized.
inline constexpr Index kDenseLimit = 1024;

/// The discrete Dirichlet Laplacian of a mask: the Ω-block L of the stencil
/// and the bookkeeping between grid functions and Ω-coordinates.
class DirichletOperator {
 public:
  /// Throws MaskTouchesBoundary.
  explicit DirichletOperator(Mask mask);

  const Mask& mask() const { return mask_; }
  const Grid& grid() const { return mask_.grid(); }
  Index size() const { return grid().size(); }
  Index omega_size() const { return stencil_.n; }
  const std::vector<Index>& omega() const { return omega_; }
  const Stencil& stencil() const { return stencil_; }
  const SparseMatrix& laplacian() const { return l_; }

  Vector restrict(const Vector& full) const;
  /// Zero extension off Ω.
  Vector extend(const Vector& on_omega) const;

 private:
  Mask mask_;
  std::vector<Index> omega_;
  Stencil stencil_;
  SparseMatrix l_;
};

/// A_Ω = {(u, f) : u = 0 off Ω, f = L u on Ω} as a dense relation on K^N
/// (N ≤ kDenseLimit). The graph basis and the parts are written down directly.
LinearRelation build_dirichlet_relation(const Mask& mask);

/// u = 0 off Ω with L u = f on Ω. Throws SolverBreakdown if the relative
/// residual exceeds 1e-10.
Vector surjective_solve(const DirichletOperator& op, const Vector& f);

/// Smallest eigenvalue of -L on the node set (inverse power iteration with a
/// Rayleigh quotient); +inf for the empty set. The mask may touch the rim.
double first_eigenvalue(const Mask& set, double tol = 1e-8);

struct ContractionEvidence {
  std::vector<double> lambdas;
  std::vector<double> norms;      // ‖λR(λ, A_Ω)‖_{∞→∞}
  std::vector<double> min_entry;  // smallest entry of R(λ, A_Ω) on Ω
  bool positive = true;           // every entry ≥ 0
  bool zero_in_resolvent = false;
  bool passed = false;
};

/// Dense R(λ, A_Ω) from sparse column solves and its max row sum. Throws
/// ContractFailed when some ‖λR‖ exceeds 1 + 1e-12.
ContractionEvidence supnorm_contraction(const DirichletOperator& op, const std::vector<double>& lambdas,
                                        Execution exec = Execution::parallel);

/// Exact ‖R(λ, A_Ω)‖_{∞→∞} for complex λ off the spectrum, from a sparse LU
/// of λ - L and the dense resolvent. Throws NotInResolventSet.
double supnorm_resolvent_norm(const DirichletOperator& op, Scalar lambda, Execution exec = Execution::parallel);

/// The heat generator A_Ω through the eigendecomposition of L, for grids
/// too large for the dense relation. Norms are sup norms on grid functions.
class HeatGenerator final : public Generator {
 public:
  explicit HeatGenerator(Mask mask, Execution exec = Execution::parallel);

  const DirichletOperator& op() const { return op_; }
  /// Eigenvalues of -L, ascending.
  const RealVector& kappa() const { return kappa_; }
  const RealMatrix& vectors() const { return q_; }

  /// Euclidean distance from (x, y) to the graph of A_Ω.
  double graph_distance(const Vector& x, const Vector& y) const;

  Index dim() const override { return op_.size(); }
  Norm norm_kind() const override { return Norm::sup; }
  Vector resolvent_apply(Scalar lambda, const Vector& f) const override;
  /// Exact for real λ > 0 (R ≥ 0, so the row sums are R·1); otherwise the
  /// upper bound √|Ω| ‖R‖₂.
  double resolvent_norm(Scalar lambda) const override;
  Vector integrated_apply(double t, const Vector& f) const override;
  Vector semigroup_apply(Scalar z, const Vector& f) const override;
  bool range_full(Scalar mu) const override;
  /// Sampled: pairs (R(1)g, R(1)g - g) for fixed probes g, distances to the
  /// other graph relative to the pair norm, maximized over both directions.
  double graph_gap(const Generator& other) const override;
  /// The ℓ² ratio from the symmetric spectrum: ‖λR(λ)‖₂ = max_k |λ|/|λ + κ_k|.
  double sector_ratio(const SectorSpec& spec, double eps) const override;

 private:
  Vector apply_coeff(const Vector& c, const Vector& f) const;
  Index nearest_eigen(Scalar lambda) const;

  DirichletOperator op_;
  RealVector kappa_;
  RealMatrix q_;
  Execution exec_;
};

struct MultiplierResult {
  LinearRelation relation;
  DissipativityCertificate sampled;
  bool surjective = false;
  /// m > 0 only: max over λ of ‖λR(λ, mA_Ω)‖_{∞→∞}.
  std::optional<double> contraction;
  bool passed = false;
};

/// mA_Ω = {(u, m f) : (u, f) ∈ A_Ω} for a grid function m with |m| ≥ m_min at
/// every node (N ≤ kDenseLimit). Throws VanishingMultiplier.
MultiplierResult multiplier_relation(const Mask& mask, const RealVector& m, double m_min = 1e-8,
                                     const std::vector<double>& lambdas = {0.1, 1.0, 10.0},
                                     std::uint64_t seed = 0);

struct MaxPrincipleEvidence {
  std::size_t samples = 0;
  double worst_slack = 0.0;  // min of -f(x0) at the sup-attaining node
  bool passed = false;
};

/// Samples (u, f) from the graph; at the lowest-index node where |u| peaks
/// (sign flipped so u(x0) > 0) checks f(x0) ≤ 0.
MaxPrincipleEvidence max_principle_check(const DirichletOperator& op, std::size_t samples,
                                         std::uint64_t seed = 0, double slack_tol = 1e-12);

}  // namespace relsemi::heat
