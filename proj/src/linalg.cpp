// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/linalg.hpp"

#include <cmath>
#include <limits>

#include <unsupported/Eigen/MatrixFunctions>

#include "relsemi/errors.hpp"

namespace relsemi {

Field join(Field a, Field b) {
  return (a == Field::complex || b == Field::complex) ? Field::complex : Field::real;
}

Field field_of(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (m(i, j).imag() != 0.0) return Field::complex;
  return Field::real;
}

Field field_of(Scalar s) { return s.imag() != 0.0 ? Field::complex : Field::real; }

std::string_view to_string(Field f) { return f == Field::real ? "real" : "complex"; }

Field field_from_string(std::string_view s) {
  if (s == "real") return Field::real;
  if (s == "complex") return Field::complex;
  throw InvalidInput("unknown field tag '" + std::string(s) + "'");
}

namespace linalg {

Svd svd(const Matrix& m, Field field, bool full_u, bool full_v) {
  Svd out;
  const Index k = std::min(m.rows(), m.cols());
  unsigned opts = (full_u ? Eigen::ComputeFullU : Eigen::ComputeThinU) |
                  (full_v ? Eigen::ComputeFullV : Eigen::ComputeThinV);
  if (m.size() == 0) {
    out.sigma = RealVector::Zero(0);
    out.u = full_u ? Matrix::Identity(m.rows(), m.rows()) : Matrix(m.rows(), 0);
    out.v = full_v ? Matrix::Identity(m.cols(), m.cols()) : Matrix(m.cols(), 0);
    return out;
  }
  if (field == Field::real) {
    Eigen::JacobiSVD<RealMatrix> s(m.real(), opts);
    out.sigma = s.singularValues().head(k);
    out.u = s.matrixU().cast<Scalar>();
    out.v = s.matrixV().cast<Scalar>();
  } else {
    Eigen::JacobiSVD<Matrix> s(m, opts);
    out.sigma = s.singularValues().head(k);
    out.u = s.matrixU();
    out.v = s.matrixV();
  }
  return out;
}

double norm2(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  Eigen::JacobiSVD<Matrix> s(m);
  return s.singularValues()(0);
}

Index rank_above(const RealVector& sigma, double threshold) {
  Index r = 0;
  for (Index i = 0; i < sigma.size(); ++i)
    if (sigma(i) > threshold) ++r;
  return r;
}

Matrix null_space(const Matrix& m, Field field, double threshold) {
  if (m.cols() == 0) return Matrix(0, 0);
  Svd s = svd(m, field, false, true);
  const Index r = rank_above(s.sigma, threshold);
  return s.v.rightCols(m.cols() - r);
}

double max_hermitian_eigenvalue(const Matrix& m) {
  if (m.size() == 0) return -std::numeric_limits<double>::infinity();
  Matrix h = 0.5 * (m + m.adjoint());
  Eigen::SelfAdjointEigenSolver<Matrix> es(h, Eigen::EigenvaluesOnly);
  return es.eigenvalues().maxCoeff();
}

Matrix expm(const Matrix& m) {
  if (m.size() == 0) return m;
  return m.exp();
}

double inf_norm(const Matrix& m) {
  if (m.size() == 0) return 0.0;
  return m.cwiseAbs().rowwise().sum().maxCoeff();
}

double sup_norm(const Vector& v) {
  if (v.size() == 0) return 0.0;
  return v.cwiseAbs().maxCoeff();
}

bool all_finite(const Matrix& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!std::isfinite(m(i, j).real()) || !std::isfinite(m(i, j).imag())) return false;
  return true;
}

}  // namespace linalg
}  // namespace relsemi
