// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <functional>
#include <vector>

#include "relsemi/linalg.hpp"

namespace relsemi {

struct GaussRule {
  std::vector<double> nodes;    // on [-1, 1], ascending
  std::vector<double> weights;
};

/// n-point Gauss–Legendre rule (Newton iteration on P_n). Rules are cached.
const GaussRule& gauss_legendre(int n);

/// Composite Gauss–Legendre on [a, b]: ceil(b - a) panels of `n` nodes each,
/// so the node density is n per unit length.
Matrix integrate_matrix(const std::function<Matrix(double)>& f, double a, double b, int n);
Vector integrate_vector(const std::function<Vector(double)>& f, double a, double b, int n);

}  // namespace relsemi
