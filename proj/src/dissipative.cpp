// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/dissipative.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>

#include "relsemi/errors.hpp"
#include "relsemi/spectral.hpp"

namespace relsemi {

double norm(const Vector& v, Norm n) { return n == Norm::l2 ? v.norm() : linalg::sup_norm(v); }

DissipativityCertificate is_dissipative_l2(const LinearRelation& a, double cert_tol) {
  DissipativityCertificate c;
  c.kind = DissipativityCertificate::Kind::l2_exact;
  c.norm = Norm::l2;
  if (a.graph().is_zero()) {
    c.witness = -std::numeric_limits<double>::infinity();
    c.passed = true;
    return c;
  }
  c.witness = linalg::max_hermitian_eigenvalue(a.x_block().adjoint() * a.y_block());
  c.passed = c.witness <= cert_tol;
  return c;
}

namespace {

// Lowest index whose modulus attains the maximum (ties within 1e-14 relative).
Index sup_maximizer(const Vector& x) {
  const double m = linalg::sup_norm(x);
  for (Index i = 0; i < x.size(); ++i)
    if (std::abs(x(i)) >= m * (1.0 - 1e-14)) return i;
  return 0;
}

}  // namespace

DissipativityCertificate is_dissipative_sampled(const LinearRelation& a, Norm nrm, std::size_t n_samples,
                                                const std::vector<double>& lambdas, std::uint64_t seed,
                                                double margin_tol) {
  if (n_samples == 0) throw InvalidInput("is_dissipative_sampled: need at least one sample");
  DissipativityCertificate c;
  c.kind = DissipativityCertificate::Kind::sampled_norm;
  c.norm = nrm;
  c.samples = n_samples;
  c.witness = std::numeric_limits<double>::infinity();
  c.duality_witness = -std::numeric_limits<double>::infinity();
  const Index r = a.graph().dim();
  if (r == 0) {
    c.passed = true;
    return c;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  const bool cplx = a.field() == Field::complex;
  const Matrix u = a.x_block();
  const Matrix v = a.y_block();
  for (std::size_t k = 0; k < n_samples; ++k) {
    Vector coef(r);
    for (Index i = 0; i < r; ++i) coef(i) = Scalar(gauss(rng), cplx ? gauss(rng) : 0.0);
    coef.normalize();
    const Vector x = u * coef;
    Vector y = v * coef;
    // Odd samples drop the mul A component of y, which (0, m) ∈ A allows; a
    // large multivalued part otherwise masks violations in the sup norm.
    if (k % 2 == 1 && !a.mul().is_zero()) y -= a.mul().project(y);
    for (double lam : lambdas) {
      const double lhs = norm(Vector(lam * x), nrm);
      const double rhs = norm(Vector(lam * x - y), nrm);
      const double scale = std::max({lhs, rhs, 1e-300});
      c.witness = std::min(c.witness, (rhs - lhs) / scale);
    }
    const double xn = norm(x, nrm);
    if (xn > 0.0) {
      double dual;
      if (nrm == Norm::l2) {
        dual = std::real(x.dot(y)) / xn;
      } else {
        const Index i0 = sup_maximizer(x);
        dual = std::real(std::conj(x(i0)) * y(i0)) / std::abs(x(i0));
      }
      c.duality_witness = std::max(c.duality_witness, dual);
    }
  }
  c.passed = c.witness >= -margin_tol;
  return c;
}

MDissipativeEvidence is_m_dissipative(const LinearRelation& a, double cert_tol) {
  MDissipativeEvidence e;
  e.l2 = is_dissipative_l2(a, cert_tol);
  e.range_dim = shift(Scalar(1.0), a).ran().dim();
  e.resolvent_bound = 0.0;
  for (int k = -3; k <= 6; ++k) {
    const double lam = std::pow(10.0, k);
    try {
      e.resolvent_bound = std::max(e.resolvent_bound, lam * linalg::norm2(try_resolvent(lam, a).matrix));
    } catch (const NotInResolventSet&) {
      e.resolvent_bound = std::numeric_limits<double>::infinity();
      break;
    }
  }
  e.m_dissipative = e.l2.passed && e.range_dim == a.state_dim() && e.resolvent_bound <= 1.0 + cert_tol;
  return e;
}

LumerPhillipsResult lumer_phillips_invert(const LinearRelation& a, double cert_tol) {
  const DissipativityCertificate l2 = is_dissipative_l2(a, cert_tol);
  if (!l2.passed) throw NotDissipative("relation is not dissipative", l2.witness);
  if (!a.ran().is_full())
    throw NotSurjective("ran A has dimension " + std::to_string(a.ran().dim()) + " < " +
                        std::to_string(a.state_dim()));
  LumerPhillipsResult out;
  // R(0, A) = (-A)^{-1} = -A^{-1}.
  out.inverse = -try_resolvent(Scalar(0.0), a).matrix;
  out.kernel_trivial = a.ker().is_zero();
  out.evidence = is_m_dissipative(a, cert_tol);
  return out;
}

LinearRelation maximal_dissipative_extension(const LinearRelation& a, double cert_tol) {
  const DissipativityCertificate l2 = is_dissipative_l2(a, cert_tol);
  if (!l2.passed) throw NotDissipative("relation is not dissipative", l2.witness);
  const Subspace perp = complement(shift(Scalar(1.0), a).ran());
  const Index d = a.state_dim();
  const Index r = a.graph().dim();
  const Index p = perp.dim();
  Matrix xs(d, r + p), ys(d, r + p);
  xs << a.x_block(), perp.basis();
  ys << a.y_block(), -perp.basis();
  return LinearRelation::from_pairs(xs, ys, a.rank_tol(), a.field());
}

}  // namespace relsemi
