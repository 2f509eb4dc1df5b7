// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <string>
#include <vector>

#include "relsemi/heat/dirichlet.hpp"

namespace relsemi::heat {

/// Inscribed regular polygons of the disk (cx, cy, r), one per side count.
std::vector<Mask> polygon_family(const Grid& g, double cx, double cy, double r, const std::vector<int>& sides);

/// Disk (0, 0, r) minus a horizontal crack from the center to past the rim,
/// centered on the node row nearest y = 0. Width w removes the rows within w/2.
std::vector<Mask> slit_family(const Grid& g, double r, const std::vector<double>& widths);

/// Disks (0, 0, r_k) for the given radii.
std::vector<Mask> disk_family(const Grid& g, const std::vector<double>& radii);

/// Which way the surplus-set eigenvalue trace is required to go.
enum class EigenDirection { to_infinity, to_zero };

struct DomainConvergenceCriterion {
  std::vector<int> margins;
  /// Per margin: first 1-based index from which every Ω_n contains the
  /// compact K; empty when the last mask misses K.
  std::vector<std::optional<std::size_t>> n0;
  /// First eigenvalue of -Δ_h on Ω_n \ Ω; +inf when empty.
  std::vector<double> surplus_eigenvalue;
  /// |Ω_n \ Ω| as node count × h^dim.
  std::vector<double> surplus_measure;
  EigenDirection direction = EigenDirection::to_infinity;
  bool eig_to_infinity = false;  // nondecreasing trace
  bool eig_to_zero = false;      // nonincreasing trace, last below first
  bool a_holds = false;
  bool b_holds = false;
};

/// K(margin) = limit nodes at 4-neighbor graph distance ≥ margin from the
/// nodes off the limit, minus `exclude` when given.
DomainConvergenceCriterion domain_convergence_check(const std::vector<Mask>& seq, const Mask& limit,
                                                    const std::vector<int>& margins = {1, 2, 4},
                                                    EigenDirection direction = EigenDirection::to_infinity,
                                                    const Mask* exclude = nullptr);

struct HeatExperimentOptions {
  std::vector<double> lambdas{0.5, 1.0, 2.0};
  std::vector<double> t_grid;  // 0:0.1:1 when empty
  /// Grid functions with ‖f‖_∞ = 1; {1, 1 - |x|²/2} when empty.
  std::vector<Vector> f_set;
  Scalar mu{1.0, 1.0};
  double tol = 0.05;
  std::vector<int> margins{1, 2, 4};
  EigenDirection direction = EigenDirection::to_infinity;
  /// Run supnorm_contraction on every mask first.
  bool certify = true;
  std::vector<double> certify_lambdas{0.1, 1.0, 10.0};
  Execution exec = Execution::parallel;
};

struct HeatConvergence {
  ConvergenceReport tk;
  DomainConvergenceCriterion criterion;
  /// max over t and f of |S_n(t)f| at nodes off the limit domain.
  std::vector<double> off_domain;
  std::vector<ContractionEvidence> certificates;
  bool s_strictly_decreasing = false;
  bool resolvent_decreasing = false;
  bool off_domain_decreasing = false;
  std::string assumptions;
};

/// Trotter-Kato report in the sup norm for a mask family against a limit mask.
HeatConvergence perturbation_experiment(const std::vector<Mask>& masks, const Mask& limit,
                                        const HeatExperimentOptions& opts = {});

struct SectorUniformity {
  std::vector<double> per_mask;  // max sampled ‖λR(λ, A_Ω)‖_{∞→∞}
  double bound = 0.0;
  bool finite = false;
};

/// Samples λ = r e^{iθ}, |θ| ≤ π/2 - ε, r log-spaced in [1e-2, 1e4].
SectorUniformity sector_uniformity(const std::vector<Mask>& masks, double eps, int rays = 7, int radii = 13,
                                   Execution exec = Execution::parallel);

struct HeatOrbit {
  std::vector<double> t;
  std::vector<Vector> u;
  std::vector<double> membership;     // graph distance of (u, central-difference u̇)
  std::vector<double> initial_trace;  // ‖(u(t) - u0)·1_Ω‖₂
  double off_domain_max = 0.0;
  double projection_error = 0.0;  // T(0)u0 against 1_Ω·u0
  bool passed = false;
};

HeatOrbit heat_orbit(const HeatGenerator& gen, const Vector& u0, const std::vector<double>& t_grid,
                     double membership_tol = 1e-6);

}  // namespace relsemi::heat
