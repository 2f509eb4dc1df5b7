// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include <Eigen/SparseCholesky>

#include "relsemi/execution.hpp"
#include "relsemi/heat/mask.hpp"

namespace relsemi::heat {

using SparseMatrix = Eigen::SparseMatrix<double>;
using Ldlt = Eigen::SimplicialLDLT<SparseMatrix>;

/// The 5-point (3-point in 1-D) stencil on Ω in Ω-local numbering; neighbors
/// off Ω are -1 and read as zero.
struct Stencil {
  Index n = 0;
  int dim = 2;
  double inv_h2 = 0.0;
  std::vector<Index> nbr;  // n × 2·dim
};

Stencil build_stencil(const Mask& mask);

/// The same operator as a sparse matrix.
SparseMatrix stencil_matrix(const Stencil& s);

/// y = L x.
void stencil_apply(const Stencil& s, const double* x, double* y, Execution exec);

/// Dense (λ - L)^{-1} from column solves with a factorization of λ - L.
RealMatrix resolvent_columns(const Ldlt& factor, Index n, Execution exec);

/// Max absolute row sum; the maximizing row goes to `argmax` when given.
double max_row_sum(const RealMatrix& m, Execution exec, Index* argmax = nullptr);

/// Q diag(c) Q^T x for real orthogonal Q.
Vector spectral_apply(const RealMatrix& q, const Vector& c, const Vector& x, Execution exec);

struct SymEig {
  RealVector values;  // ascending
  RealMatrix vectors;
};

/// Symmetric eigendecomposition (LAPACK dsyevd). Throws SolverBreakdown.
SymEig symmetric_eigen(RealMatrix a);

}  // namespace relsemi::heat
