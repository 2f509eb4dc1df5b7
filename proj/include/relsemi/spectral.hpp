// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "relsemi/execution.hpp"
#include "relsemi/relation.hpp"

namespace relsemi {

inline constexpr double kDefaultAcceptTol = 1e-9;

/// A certified resolvent evaluation R(λ, A).
struct ResolventSample {
  Scalar lambda;
  Matrix matrix;
  /// Max over canonical basis vectors of the graph distance of
  /// (R e_i, λ R e_i - e_i) plus the linear-solve residual.
  double residual = 0.0;
};

/// Throws NotInResolventSet when λ - A is not boundedly invertible or the
/// residual certificate exceeds `accept_tol`.
ResolventSample try_resolvent(Scalar lambda, const LinearRelation& a, double accept_tol = kDefaultAcceptTol);

/// ker R(λ, A), which equals mul A.
Subspace mul_from_resolvent(const LinearRelation& a, Scalar lambda);

/// Partial sums of Σ (λ0 - λ)^n R0^{n+1}; stops after nmax terms or once a term
/// drops below 1e-15 in norm. Throws DivergentSeries if |λ-λ0|‖R0‖ ≥ 1.
Matrix neumann_extend(Scalar lambda0, const Matrix& r0, Scalar lambda, int nmax = 200);

/// ‖R(λ) - R(μ) - (μ - λ) R(λ) R(μ)‖₂.
double resolvent_identity_residual(const LinearRelation& a, Scalar lambda, Scalar mu);

/// The unique relation {(Qu, λ0 Qu - u)} with R(λ0, A) = Q.
LinearRelation relation_from_resolvent(Scalar lambda0, const Matrix& q, double rank_tol = kDefaultRankTol);

struct PseudoResolventTable {
  std::vector<Scalar> lambdas;
  std::vector<Matrix> matrices;
};

/// Checks the resolvent identity on every pair, rebuilds A from the first
/// sample and verifies the remaining samples within 10·tol.
LinearRelation relation_from_pseudo_resolvent(const PseudoResolventTable& table, double tol);

struct ScanEntry {
  Scalar lambda;
  bool in_resolvent_set = false;
  double norm = 0.0;      // ‖R(λ)‖₂, +inf outside the resolvent set
  double residual = 0.0;  // certificate residual, +inf when rank failed
};

std::vector<ScanEntry> resolvent_set_scan(const LinearRelation& a, const std::vector<Scalar>& grid,
                                          double accept_tol = kDefaultAcceptTol,
                                          Execution exec = Execution::parallel);

}  // namespace relsemi
