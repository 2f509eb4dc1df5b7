// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <random>

#include "relsemi/relation.hpp"

namespace relsemi {

/// Test-support generators. Every function takes the engine explicitly, so a
/// battery is reproducible from its seed alone.
using Rng = std::mt19937_64;

/// Gaussian matrix; imaginary parts are zero for the real field.
Matrix random_matrix(Index rows, Index cols, Field field, Rng& rng);

/// Gaussian unit vector.
Vector random_unit_vector(Index n, Field field, Rng& rng);

/// Haar-like unitary from the QR factorization of a Gaussian matrix.
Matrix random_unitary(Index n, Field field, Rng& rng);

/// Span of [X; Y] with independently chosen ranks of X and Y, so that dom,
/// ran, ker and mul all vary across a battery.
LinearRelation random_relation(Index d, Field field, Rng& rng);

struct MDissipativeOptions {
  double epsilon = 0.1;   // Herm(M) ⪯ -epsilon I on the operator part
  Index min_dom = 0;      // lower bound on dim dom A
  Index max_dom = -1;     // upper bound, -1 means d
};

/// A = Q {(x1, M x1 + v) : x1 ∈ X1, v ∈ X0} Q^H for an orthogonal split
/// K^d = X1 ⊕ X0, M = -(εI + BB^H) + (S - S^H)/2 and a random unitary Q.
/// The result is dissipative, surjective and m-dissipative.
LinearRelation random_m_dissipative(Index d, Field field, Rng& rng, const MDissipativeOptions& opts = {});

/// A random subspace of the graph of random_m_dissipative: dissipative, but
/// in general neither surjective nor maximal.
LinearRelation random_dissipative(Index d, Field field, Rng& rng);

}  // namespace relsemi
