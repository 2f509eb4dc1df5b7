// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <optional>
#include <vector>

#include "relsemi/dissipative.hpp"

namespace relsemi {

inline constexpr int kDefaultQuadNodes = 64;

/// Splitting K^d = X1 ⊕ X0 with X1 = dom A, X0 = mul A and the operator part
/// of A in X1 coordinates.
struct SemigroupData {
  Index d = 0;
  Field field = Field::real;
  Subspace x1, x0;
  Matrix basis;   // d×d1, orthonormal basis B1 of X1
  Matrix coords;  // d1×d, X1-coordinates along X0, so P = basis * coords
  Matrix p;       // projection onto X1 along X0
  Matrix m1;      // d1×d1 matrix of the part of A in X1
};

struct SectorSpec {
  double alpha = 0.0;  // in (0, π/2]
  double m = 1.0;
};

/// Requires A m-dissipative (NotMDissipative otherwise).
SemigroupData decompose(const LinearRelation& a, double cert_tol = kDefaultCertTol);

/// The same splitting without the m-dissipativity check. Throws
/// DecompositionFailure when dom A ⊕ mul A ≠ K^d.
SemigroupData decompose_unchecked(const LinearRelation& a);

/// T(t) = B1 exp(t M1) coords, with T(0) = P.
Matrix semigroup_at(const SemigroupData& sd, double t);

/// S(t) = ∫_0^t T(s) ds, through the augmented exponential of [[tM1, tI], [0, 0]].
Matrix integrated_at(const SemigroupData& sd, double t);

/// Both orderings of the functional equation of S:
///   first:  S(t)S(s) - (∫_t^{t+s} S - ∫_0^s S)
///   second: S(t)S(s) - (∫_s^{t+s} S - ∫_0^t S)
struct FunctionalEqResidual {
  double first = 0.0;
  double second = 0.0;
};
FunctionalEqResidual functional_eq_residual(const SemigroupData& sd, double t, double s,
                                            int quad_n = kDefaultQuadNodes);

/// ‖∫_0^H e^{-λt} T(t) dt - R(λ, A)‖₂ + e^{-Re λ H}/Re λ.
double laplace_residual(const SemigroupData& sd, const LinearRelation& a, Scalar lambda, double horizon,
                        int quad_n = kDefaultQuadNodes);

/// ‖λ ∫_0^H e^{-λt} S(t) dt - R(λ, A)‖₂ plus the tail bound of the truncated
/// integral of t e^{-Re λ t}.
double laplace_residual_integrated(const SemigroupData& sd, const LinearRelation& a, Scalar lambda,
                                   double horizon, int quad_n = kDefaultQuadNodes);

struct MildSolution {
  std::vector<double> t;
  Matrix u;                    // d × t.size(), u(:, k) = S(t_k) x
  std::vector<double> membership;  // graph distance of (∫_0^{t_k} u, u(t_k) - t_k x)
  double max_membership = 0.0;
  /// max over grid pairs of ‖u(t) - u(s)‖ - |t - s| ‖x‖ (≤ 0 when the bound holds).
  double lipschitz_excess = 0.0;
};

MildSolution mild_solution(const SemigroupData& sd, const LinearRelation& a, const Vector& x,
                           const std::vector<double>& t_grid, int quad_n = kDefaultQuadNodes);

struct WellposednessVerdict {
  bool decomposable = false;   // dom A ⊕ mul A = K^d
  bool lipschitz_ok = false;   // ‖S(t)x - S(s)x‖ ≤ |t-s|‖x‖ + tol on the trials
  bool unique = false;         // only w ≡ 0 solves w' ∈ Aw, w(0) = 0
  double worst_excess = 0.0;
  bool m_dissipative = false;  // independent check
  bool passed = false;
  bool consistent = false;     // passed == m_dissipative
};

WellposednessVerdict wellposedness_check(const LinearRelation& a, const std::vector<Vector>& trials,
                                         const std::vector<double>& t_grid, double tol = 1e-9);

struct SectorEvidence {
  double bound = 0.0;          // M / sin ε
  double worst_norm = 0.0;     // max sampled ‖λR(λ, A)‖₂
  Scalar worst_lambda = 0.0;
  std::optional<Scalar> failing;  // first λ outside ρ(A) or above the bound
  std::size_t samples = 0;
  bool passed = false;
};

/// Samples λ = r e^{iθ}, r log-spaced in [1e-3, 1e6], |θ| ≤ (α + π/2 - ε)(1 - δ),
/// and checks ‖λR(λ, A)‖₂ ≤ M/sin ε + slack.
SectorEvidence sector_verify(const LinearRelation& a, const SectorSpec& spec, double eps, int ray_samples = 40,
                             int angle_samples = 17, double delta = 1e-6, double slack = 1e-8);

/// α = π/2 - θ_W, θ_W the largest |arg(-w)| over 64 rotation samples of the
/// boundary of the numerical range of M1. π/2 when X1 = {0}; 0 when the
/// numerical range reaches the imaginary axis.
double certified_sector_angle(const SemigroupData& sd);

/// T(z) = B1 exp(z M1) coords for |arg z| < α (real z ≥ 0 always allowed).
/// α defaults to certified_sector_angle. The bound ‖T(z)‖ ≤ M(1 + 2eπ/sin ε),
/// ε = α - |arg z|, is checked as a logged warning.
Matrix holomorphic_at(const SemigroupData& sd, Scalar z, std::optional<SectorSpec> spec = std::nullopt);

}  // namespace relsemi
