// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/semigroup.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/constants/constants.hpp>

#include "relsemi/errors.hpp"
#include "relsemi/logging.hpp"
#include "relsemi/quadrature.hpp"
#include "relsemi/spectral.hpp"

namespace relsemi {

namespace {

constexpr double kPi = boost::math::constants::pi<double>();

Matrix pseudo_inverse(const Matrix& m, Field field, double rel_tol) {
  const linalg::Svd s = linalg::svd(m, field, false, false);
  if (s.sigma.size() == 0) return Matrix::Zero(m.cols(), m.rows());
  const Index r = linalg::rank_above(s.sigma, rel_tol * s.sigma(0));
  return s.v.leftCols(r) * s.sigma.head(r).cwiseInverse().asDiagonal() * s.u.leftCols(r).adjoint();
}

Matrix embed(const SemigroupData& sd, const Matrix& inner) { return sd.basis * inner * sd.coords; }

}  // namespace

SemigroupData decompose_unchecked(const LinearRelation& a) {
  SemigroupData sd;
  sd.d = a.state_dim();
  sd.field = a.field();
  sd.x1 = a.dom();
  sd.x0 = a.mul();
  const Index d1 = sd.x1.dim();
  const Index d0 = sd.x0.dim();
  if (d1 + d0 != sd.d)
    throw DecompositionFailure("dim dom A + dim mul A = " + std::to_string(d1 + d0) + " != " +
                               std::to_string(sd.d));
  Matrix w(sd.d, sd.d);
  w << sd.x1.basis(), sd.x0.basis();
  const linalg::Svd s = linalg::svd(w, sd.field, false, false);
  if (sd.d > 0 && !(s.sigma(sd.d - 1) > a.rank_tol() * s.sigma(0)))
    throw DecompositionFailure("dom A and mul A intersect nontrivially");
  const Matrix winv = s.v * s.sigma.cwiseInverse().asDiagonal() * s.u.adjoint();
  sd.basis = sd.x1.basis();
  sd.coords = winv.topRows(d1);
  sd.p = sd.basis * sd.coords;
  // For x = B1 ξ pick c with U c = x; then A1 ξ = coords V c.
  const Matrix uplus = pseudo_inverse(a.x_block(), sd.field, a.rank_tol());
  sd.m1 = sd.coords * a.y_block() * uplus * sd.basis;
  return sd;
}

SemigroupData decompose(const LinearRelation& a, double cert_tol) {
  const MDissipativeEvidence e = is_m_dissipative(a, cert_tol);
  if (!e.m_dissipative)
    throw NotMDissipative("relation is not m-dissipative (l2 witness " + std::to_string(e.l2.witness) +
                          ", dim ran(1-A) = " + std::to_string(e.range_dim) + ")");
  return decompose_unchecked(a);
}

Matrix semigroup_at(const SemigroupData& sd, double t) {
  if (t < 0.0) throw InvalidInput("semigroup_at: t must be nonnegative");
  if (t == 0.0) return sd.p;
  return embed(sd, linalg::expm(t * sd.m1));
}

Matrix integrated_at(const SemigroupData& sd, double t) {
  if (t < 0.0) throw InvalidInput("integrated_at: t must be nonnegative");
  const Index d1 = sd.m1.rows();
  if (t == 0.0 || d1 == 0) return Matrix::Zero(sd.d, sd.d);
  Matrix z = Matrix::Zero(2 * d1, 2 * d1);
  z.topLeftCorner(d1, d1) = t * sd.m1;
  z.topRightCorner(d1, d1) = t * Matrix::Identity(d1, d1);
  return embed(sd, linalg::expm(z).topRightCorner(d1, d1));
}

FunctionalEqResidual functional_eq_residual(const SemigroupData& sd, double t, double s, int quad_n) {
  if (t < 0.0 || s < 0.0) throw InvalidInput("functional_eq_residual: t, s must be nonnegative");
  if (quad_n < 8) throw InvalidInput("functional_eq_residual: need at least 8 nodes");
  auto sfun = [&](double r) { return integrated_at(sd, r); };
  const Matrix lhs = integrated_at(sd, t) * integrated_at(sd, s);
  const Matrix first = integrate_matrix(sfun, t, t + s, quad_n) - integrate_matrix(sfun, 0.0, s, quad_n);
  const Matrix second = integrate_matrix(sfun, s, t + s, quad_n) - integrate_matrix(sfun, 0.0, t, quad_n);
  return {linalg::norm2(lhs - first), linalg::norm2(lhs - second)};
}

double laplace_residual(const SemigroupData& sd, const LinearRelation& a, Scalar lambda, double horizon,
                        int quad_n) {
  if (!(lambda.real() > 0.0)) throw InvalidInput("laplace_residual: Re lambda must be positive");
  const Matrix r = try_resolvent(lambda, a).matrix;
  const Matrix q = integrate_matrix([&](double t) -> Matrix { return std::exp(-lambda * t) * semigroup_at(sd, t); },
                             0.0, horizon, quad_n);
  return linalg::norm2(q - r) + std::exp(-lambda.real() * horizon) / lambda.real();
}

double laplace_residual_integrated(const SemigroupData& sd, const LinearRelation& a, Scalar lambda,
                                   double horizon, int quad_n) {
  if (!(lambda.real() > 0.0)) throw InvalidInput("laplace_residual: Re lambda must be positive");
  const Matrix r = try_resolvent(lambda, a).matrix;
  const Matrix q = integrate_matrix([&](double t) -> Matrix { return std::exp(-lambda * t) * integrated_at(sd, t); },
                             0.0, horizon, quad_n);
  const double re = lambda.real();
  // ‖S(t)‖ ≤ t, and ∫_H^∞ t e^{-re t} dt = (H/re + 1/re²) e^{-re H}.
  const double tail = std::abs(lambda) * (horizon / re + 1.0 / (re * re)) * std::exp(-re * horizon);
  return linalg::norm2(lambda * q - r) + tail;
}

MildSolution mild_solution(const SemigroupData& sd, const LinearRelation& a, const Vector& x,
                           const std::vector<double>& t_grid, int quad_n) {
  if (x.size() != sd.d) throw InvalidInput("mild_solution: x has the wrong length");
  MildSolution out;
  out.t = t_grid;
  const Index k = static_cast<Index>(t_grid.size());
  out.u.resize(sd.d, k);
  out.membership.resize(k);
  auto ufun = [&](double s) -> Vector { return integrated_at(sd, s) * x; };
  Vector cumulative = Vector::Zero(sd.d);
  double prev = 0.0;
  for (Index j = 0; j < k; ++j) {
    const double t = t_grid[j];
    if (t < prev) throw InvalidInput("mild_solution: t-grid must be sorted and nonnegative");
    if (t > prev) cumulative += integrate_vector(ufun, prev, t, quad_n);
    prev = t;
    out.u.col(j) = ufun(t);
    out.membership[j] = a.pair_distance(cumulative, out.u.col(j) - t * x);
    out.max_membership = std::max(out.max_membership, out.membership[j]);
  }
  const double xn = x.norm();
  out.lipschitz_excess = -std::numeric_limits<double>::infinity();
  for (Index i = 0; i < k; ++i)
    for (Index j = i + 1; j < k; ++j)
      out.lipschitz_excess = std::max(out.lipschitz_excess, (out.u.col(j) - out.u.col(i)).norm() -
                                                                std::abs(t_grid[j] - t_grid[i]) * xn);
  if (k < 2) out.lipschitz_excess = 0.0;
  return out;
}

WellposednessVerdict wellposedness_check(const LinearRelation& a, const std::vector<Vector>& trials,
                                         const std::vector<double>& t_grid, double tol) {
  WellposednessVerdict v;
  v.m_dissipative = is_m_dissipative(a).m_dissipative;
  try {
    const SemigroupData sd = decompose_unchecked(a);
    v.decomposable = true;
    // A solution of w' ∈ Aw with w(0) = 0 lives in X1 and has w' - A1 w ∈ X1 ∩ X0;
    // a direct sum leaves only w ≡ 0.
    v.unique = true;
    v.worst_excess = -std::numeric_limits<double>::infinity();
    std::vector<Matrix> s_grid;
    s_grid.reserve(t_grid.size());
    for (double t : t_grid) s_grid.push_back(integrated_at(sd, t));
    for (const Vector& x : trials) {
      for (std::size_t i = 0; i < t_grid.size(); ++i)
        for (std::size_t j = i + 1; j < t_grid.size(); ++j) {
          const double ex = ((s_grid[j] - s_grid[i]) * x).norm() - std::abs(t_grid[j] - t_grid[i]) * x.norm();
          v.worst_excess = std::max(v.worst_excess, ex);
        }
    }
    if (trials.empty() || t_grid.size() < 2) v.worst_excess = 0.0;
    v.lipschitz_ok = v.worst_excess <= tol;
  } catch (const DecompositionFailure& e) {
    log::info(std::string("wellposedness_check: ") + e.what());
  }
  v.passed = v.decomposable && v.unique && v.lipschitz_ok;
  v.consistent = v.passed == v.m_dissipative;
  return v;
}

SectorEvidence sector_verify(const LinearRelation& a, const SectorSpec& spec, double eps, int ray_samples,
                             int angle_samples, double delta, double slack) {
  if (!(eps > 0.0 && eps < spec.alpha)) throw InvalidInput("sector_verify: need 0 < eps < alpha");
  if (ray_samples < 2 || angle_samples < 1) throw InvalidInput("sector_verify: too few samples");
  SectorEvidence ev;
  ev.bound = spec.m / std::sin(eps);
  const double theta_max = (spec.alpha + kPi / 2.0 - eps) * (1.0 - delta);
  for (int i = 0; i < ray_samples; ++i) {
    const double r = std::pow(10.0, -3.0 + 9.0 * i / (ray_samples - 1));
    for (int j = 0; j < angle_samples; ++j) {
      const double theta = angle_samples == 1 ? theta_max : -theta_max + 2.0 * theta_max * j / (angle_samples - 1);
      const Scalar lambda = std::polar(r, theta);
      ++ev.samples;
      double n;
      try {
        n = std::abs(lambda) * linalg::norm2(try_resolvent(lambda, a).matrix);
      } catch (const NotInResolventSet&) {
        if (!ev.failing) ev.failing = lambda;
        continue;
      }
      if (n > ev.worst_norm) {
        ev.worst_norm = n;
        ev.worst_lambda = lambda;
      }
      if (n > ev.bound + slack && !ev.failing) ev.failing = lambda;
    }
  }
  ev.passed = !ev.failing.has_value();
  return ev;
}

double certified_sector_angle(const SemigroupData& sd) {
  const Index d1 = sd.m1.rows();
  if (d1 == 0) return kPi / 2.0;
  const double scale = linalg::norm2(sd.m1);
  double theta_w = 0.0;
  for (int k = 0; k < 64; ++k) {
    const Scalar rot = std::polar(1.0, 2.0 * kPi * k / 64.0);
    const Matrix h = 0.5 * (rot * sd.m1 + std::conj(rot) * sd.m1.adjoint());
    Eigen::SelfAdjointEigenSolver<Matrix> es(h);
    const Vector v = es.eigenvectors().col(d1 - 1);
    const Scalar w = v.dot(sd.m1 * v);
    if (std::abs(w) <= 1e-14 * scale) continue;
    theta_w = std::max(theta_w, std::abs(std::arg(-w)));
  }
  return std::max(0.0, kPi / 2.0 - theta_w);
}

Matrix holomorphic_at(const SemigroupData& sd, Scalar z, std::optional<SectorSpec> spec) {
  if (z.imag() == 0.0 && z.real() >= 0.0) return semigroup_at(sd, z.real());
  const double alpha = spec ? spec->alpha : certified_sector_angle(sd);
  const double arg = std::abs(std::arg(z));
  if (!(arg < alpha)) throw OutsideSector(z, alpha);
  const Matrix t = embed(sd, linalg::expm(z * sd.m1));
  const double bound = (spec ? spec->m : 1.0) * (1.0 + 2.0 * std::exp(1.0) * kPi / std::sin(alpha - arg));
  const double n = linalg::norm2(t);
  if (n > bound) log::warn("holomorphic_at: ||T(z)|| = " + std::to_string(n) + " exceeds the sector bound " +
                           std::to_string(bound));
  return t;
}

}  // namespace relsemi
