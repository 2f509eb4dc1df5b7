// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <string_view>

#include <Eigen/Dense>

namespace relsemi {

using Scalar = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealMatrix = Eigen::MatrixXd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

/// Scalar field tag. Real objects are stored as complex arrays with zero
/// imaginary parts so that both fields share one code path.
enum class Field { real, complex };

Field join(Field a, Field b);
Field field_of(const Matrix& m);
Field field_of(Scalar s);
std::string_view to_string(Field f);
Field field_from_string(std::string_view s);

inline constexpr double kDefaultRankTol = 1e-10;

namespace linalg {

struct Svd {
  RealVector sigma;  // descending
  Matrix u;
  Matrix v;
};

/// SVD that keeps real inputs real when `field` is real.
Svd svd(const Matrix& m, Field field, bool full_u, bool full_v);

/// Largest singular value; 0 for empty matrices.
double norm2(const Matrix& m);

/// Number of singular values strictly above `threshold`.
Index rank_above(const RealVector& sigma, double threshold);

/// Orthonormal basis of the null space { c : m c = 0 }, using an absolute
/// singular-value threshold.
Matrix null_space(const Matrix& m, Field field, double threshold);

/// Largest eigenvalue of the Hermitian part (m + m^H)/2; -inf for empty input.
double max_hermitian_eigenvalue(const Matrix& m);

/// exp(m) by scaling and squaring with a degree-13 Padé approximant.
Matrix expm(const Matrix& m);

/// Max absolute row sum (the operator norm induced by the sup norm).
double inf_norm(const Matrix& m);

double sup_norm(const Vector& v);

bool all_finite(const Matrix& m);

}  // namespace linalg
}  // namespace relsemi
