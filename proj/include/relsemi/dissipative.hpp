// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "relsemi/relation.hpp"

namespace relsemi {

inline constexpr double kDefaultCertTol = 1e-10;

enum class Norm { l2, sup };

double norm(const Vector& v, Norm n);

struct DissipativityCertificate {
  enum class Kind { l2_exact, sampled_norm };
  Kind kind = Kind::l2_exact;
  Norm norm = Norm::l2;
  /// l2_exact: λ_max of Herm(U^H V) over the orthonormal graph basis.
  /// sampled_norm: worst margin min(‖λx - y‖ - ‖λx‖) over samples and λ.
  double witness = 0.0;
  /// sampled_norm only: worst Re⟨y, x'⟩ for the duality element x' ∈ dN(x)
  /// built from the lowest-index maximizing coordinate (sup norm) or x' = x (l2).
  double duality_witness = 0.0;
  std::size_t samples = 0;
  bool passed = false;
};

/// Re⟨x, y⟩ ≤ 0 on A, decided through the Hermitian form on the graph basis.
DissipativityCertificate is_dissipative_l2(const LinearRelation& a, double cert_tol = kDefaultCertTol);

/// Sampled one-sided check of ‖λx‖ ≤ ‖λx - y‖: a failure refutes
/// dissipativity, a pass only supports it.
DissipativityCertificate is_dissipative_sampled(const LinearRelation& a, Norm norm, std::size_t n_samples,
                                                const std::vector<double>& lambdas, std::uint64_t seed = 0,
                                                double margin_tol = 1e-12);

struct MDissipativeEvidence {
  DissipativityCertificate l2;
  Index range_dim = 0;  // dim ran(1 - A)
  /// max ‖λR(λ,A)‖₂ over λ = 10^k, k = -3..6 (+inf if some λ ∉ ρ(A)).
  double resolvent_bound = 0.0;
  bool m_dissipative = false;
};

MDissipativeEvidence is_m_dissipative(const LinearRelation& a, double cert_tol = kDefaultCertTol);

struct LumerPhillipsResult {
  Matrix inverse;  // A^{-1} is the graph of this matrix
  MDissipativeEvidence evidence;
  bool kernel_trivial = false;
};

/// A dissipative and surjective ⇒ A m-dissipative and 0 ∈ ρ(A).
/// Throws NotDissipative or NotSurjective when the hypotheses fail.
LumerPhillipsResult lumer_phillips_invert(const LinearRelation& a, double cert_tol = kDefaultCertTol);

/// B = {(x + v, y - v) : (x,y) ∈ A, v ⊥ ran(1 - A)}.
LinearRelation maximal_dissipative_extension(const LinearRelation& a, double cert_tol = kDefaultCertTol);

}  // namespace relsemi
