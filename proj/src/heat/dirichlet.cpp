// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/heat/dirichlet.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include <Eigen/SparseLU>

#include "relsemi/errors.hpp"
#include "relsemi/logging.hpp"

namespace relsemi::heat {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

RealMatrix dense_neg(const SparseMatrix& l) { return -RealMatrix(l); }

SparseMatrix shifted(const SparseMatrix& l, double lambda) {
  SparseMatrix a = -l;
  for (Index k = 0; k < a.rows(); ++k) a.coeffRef(k, k) += lambda;
  return a;
}

Matrix coordinate_basis(Index n, const std::vector<Index>& nodes) {
  Matrix b = Matrix::Zero(n, static_cast<Index>(nodes.size()));
  for (std::size_t k = 0; k < nodes.size(); ++k) b(nodes[k], static_cast<Index>(k)) = 1.0;
  return b;
}

std::vector<Index> complement_nodes(const Mask& mask) {
  std::vector<Index> out;
  for (Index i = 0; i < mask.grid().size(); ++i)
    if (!mask.contains(i)) out.push_back(i);
  return out;
}

}  // namespace

DirichletOperator::DirichletOperator(Mask mask) : mask_(std::move(mask)) {
  mask_.check_margin();
  omega_ = mask_.nodes();
  stencil_ = build_stencil(mask_);
  l_ = stencil_matrix(stencil_);
}

Vector DirichletOperator::restrict(const Vector& full) const {
  if (full.size() != size()) throw InvalidInput("restrict: grid function has the wrong length");
  Vector out(omega_size());
  for (Index k = 0; k < omega_size(); ++k) out(k) = full(omega_[k]);
  return out;
}

Vector DirichletOperator::extend(const Vector& on_omega) const {
  if (on_omega.size() != omega_size()) throw InvalidInput("extend: length differs from |Omega|");
  Vector out = Vector::Zero(size());
  for (Index k = 0; k < omega_size(); ++k) out(omega_[k]) = on_omega(k);
  return out;
}

LinearRelation build_dirichlet_relation(const Mask& mask) {
  const DirichletOperator op(mask);
  const Index n = op.size(), w = op.omega_size();
  if (n > kDenseLimit)
    throw InvalidInput("build_dirichlet_relation: grid too large for a dense relation (N = " + std::to_string(n) +
                       ")");
  // Ω columns: (q_k, -κ_k q_k)/sqrt(1 + κ_k²) with -L q_k = κ_k q_k. Off-Ω
  // columns: (0, e_j). Both families are orthonormal and mutually orthogonal.
  Matrix b = Matrix::Zero(2 * n, n);
  if (w > 0) {
    const SymEig e = symmetric_eigen(dense_neg(op.laplacian()));
    for (Index k = 0; k < w; ++k) {
      const double s = 1.0 / std::sqrt(1.0 + e.values(k) * e.values(k));
      for (Index i = 0; i < w; ++i) {
        b(op.omega()[i], k) = e.vectors(i, k) * s;
        b(n + op.omega()[i], k) = -e.values(k) * e.vectors(i, k) * s;
      }
    }
  }
  const std::vector<Index> off = complement_nodes(mask);
  for (std::size_t j = 0; j < off.size(); ++j) b(n + off[j], w + static_cast<Index>(j)) = 1.0;

  RelationParts parts{Subspace::from_orthonormal(coordinate_basis(n, op.omega()), Field::real),
                      Subspace::full(n, Field::real), Subspace(n, Field::real),
                      Subspace::from_orthonormal(coordinate_basis(n, off), Field::real)};
  return LinearRelation::from_parts(Subspace::from_orthonormal(std::move(b), Field::real), std::move(parts));
}

Vector surjective_solve(const DirichletOperator& op, const Vector& f) {
  const Vector fo = op.restrict(f);
  const Index w = op.omega_size();
  if (w == 0 || fo.norm() == 0.0) return Vector::Zero(op.size());
  const SparseMatrix neg = -op.laplacian();
  Ldlt ldlt(neg);
  if (ldlt.info() != Eigen::Success) throw SolverBreakdown("surjective_solve: factorization failed");
  const RealVector re = ldlt.solve(RealVector(-fo.real()));
  const RealVector im = ldlt.solve(RealVector(-fo.imag()));
  Vector u(w);
  for (Index k = 0; k < w; ++k) u(k) = Scalar(re(k), im(k));
  RealVector lre(w), lim(w);
  stencil_apply(op.stencil(), re.data(), lre.data(), Execution::serial);
  stencil_apply(op.stencil(), im.data(), lim.data(), Execution::serial);
  const double res = std::sqrt((lre - fo.real()).squaredNorm() + (lim - fo.imag()).squaredNorm());
  if (!(res <= 1e-10 * fo.norm())) {
    std::ostringstream msg;
    msg << "surjective_solve: relative residual " << res / fo.norm();
    throw SolverBreakdown(msg.str());
  }
  return op.extend(u);
}

double first_eigenvalue(const Mask& set, double tol) {
  const Stencil s = build_stencil(set);
  if (s.n == 0) return kInf;
  const SparseMatrix a = -stencil_matrix(s);
  if (s.n <= 512) {
    // Thin sets have clustered spectra where power iteration crawls.
    return symmetric_eigen(RealMatrix(a)).values(0);
  }
  Ldlt ldlt(a);
  if (ldlt.info() != Eigen::Success) throw SolverBreakdown("first_eigenvalue: factorization failed");
  RealVector v = RealVector::Ones(s.n).normalized();
  double theta = v.dot(a * v);
  for (int it = 0; it < 20000; ++it) {
    v = ldlt.solve(v);
    v.normalize();
    const RealVector av = a * v;
    theta = v.dot(av);
    if ((av - theta * v).norm() <= tol * theta) break;
  }
  return theta;
}

ContractionEvidence supnorm_contraction(const DirichletOperator& op, const std::vector<double>& lambdas,
                                        Execution exec) {
  ContractionEvidence ev;
  ev.lambdas = lambdas;
  const Index w = op.omega_size();
  if (w == 0) {
    ev.norms.assign(lambdas.size(), 0.0);
    ev.min_entry.assign(lambdas.size(), 0.0);
    ev.zero_in_resolvent = true;
    ev.passed = true;
    return ev;
  }
  {
    Ldlt zero(SparseMatrix(-op.laplacian()));
    ev.zero_in_resolvent = zero.info() == Eigen::Success && zero.vectorD().minCoeff() > 0.0;
  }
  for (double lambda : lambdas) {
    if (!(lambda > 0.0)) throw InvalidInput("supnorm_contraction: lambdas must be positive");
    Ldlt f(shifted(op.laplacian(), lambda));
    if (f.info() != Eigen::Success) throw SolverBreakdown("supnorm_contraction: factorization failed");
    const RealMatrix r = resolvent_columns(f, w, exec);
    Index row = 0;
    const double nrm = lambda * max_row_sum(r, exec, &row);
    const double lo = r.minCoeff();
    ev.norms.push_back(nrm);
    ev.min_entry.push_back(lo);
    if (lo < 0.0) ev.positive = false;
    log::debug("supnorm_contraction: lambda=" + std::to_string(lambda) + " norm=" + std::to_string(nrm) +
               " min entry=" + std::to_string(lo));
    if (nrm > 1.0 + 1e-12) throw ContractFailed(lambda, static_cast<std::size_t>(op.omega()[row]), nrm);
  }
  ev.passed = ev.zero_in_resolvent;
  return ev;
}

double supnorm_resolvent_norm(const DirichletOperator& op, Scalar lambda, Execution exec) {
  const Index w = op.omega_size();
  if (w == 0) return 0.0;
  using CSparse = Eigen::SparseMatrix<Scalar>;
  CSparse a = -op.laplacian().cast<Scalar>();
  for (Index k = 0; k < w; ++k) a.coeffRef(k, k) += lambda;
  a.makeCompressed();
  Eigen::SparseLU<CSparse> lu(a);
  if (lu.info() != Eigen::Success) throw NotInResolventSet(lambda, w, 0.0, "sparse LU of lambda - L failed");
  const Matrix r = lu.solve(Matrix::Identity(w, w));
  if (!linalg::all_finite(r)) throw NotInResolventSet(lambda, w, 0.0, "resolvent is not finite");
  return max_row_sum(r.cwiseAbs(), exec);
}

HeatGenerator::HeatGenerator(Mask mask, Execution exec) : op_(std::move(mask)), exec_(exec) {
  if (op_.omega_size() > 0) {
    SymEig e = symmetric_eigen(dense_neg(op_.laplacian()));
    kappa_ = std::move(e.values);
    q_ = std::move(e.vectors);
  }
}

Vector HeatGenerator::apply_coeff(const Vector& c, const Vector& f) const {
  if (op_.omega_size() == 0) {
    if (f.size() != dim()) throw InvalidInput("heat generator: grid function has the wrong length");
    return Vector::Zero(dim());
  }
  return op_.extend(spectral_apply(q_, c, op_.restrict(f), exec_));
}

Index HeatGenerator::nearest_eigen(Scalar lambda) const {
  Index best = 0;
  for (Index k = 1; k < kappa_.size(); ++k)
    if (std::abs(lambda + kappa_(k)) < std::abs(lambda + kappa_(best))) best = k;
  return best;
}

Vector HeatGenerator::resolvent_apply(Scalar lambda, const Vector& f) const {
  const Index w = op_.omega_size();
  if (w > 0) {
    const double dist = std::abs(lambda + kappa_(nearest_eigen(lambda)));
    if (dist <= 1e-14 * std::max(1.0, kappa_(w - 1)))
      throw NotInResolventSet(lambda, w, dist, "lambda is an eigenvalue of the Dirichlet Laplacian");
  }
  Vector c(w);
  for (Index k = 0; k < w; ++k) c(k) = 1.0 / (lambda + kappa_(k));
  return apply_coeff(c, f);
}

double HeatGenerator::resolvent_norm(Scalar lambda) const {
  const Index w = op_.omega_size();
  if (w == 0) return 0.0;
  if (lambda.imag() == 0.0 && lambda.real() > 0.0) {
    const Vector r1 = resolvent_apply(lambda, Vector::Ones(dim()));
    return r1.cwiseAbs().maxCoeff();
  }
  const double dist = std::abs(lambda + kappa_(nearest_eigen(lambda)));
  if (dist == 0.0) return kInf;
  return std::sqrt(static_cast<double>(w)) / dist;
}

Vector HeatGenerator::integrated_apply(double t, const Vector& f) const {
  const Index w = op_.omega_size();
  Vector c(w);
  for (Index k = 0; k < w; ++k) c(k) = -std::expm1(-kappa_(k) * t) / kappa_(k);
  return apply_coeff(c, f);
}

Vector HeatGenerator::semigroup_apply(Scalar z, const Vector& f) const {
  if (z.real() < 0.0) throw OutsideSector(z, std::acos(-1.0) / 2);
  const Index w = op_.omega_size();
  Vector c(w);
  for (Index k = 0; k < w; ++k) c(k) = std::exp(-kappa_(k) * z);
  return apply_coeff(c, f);
}

bool HeatGenerator::range_full(Scalar mu) const {
  if (op_.omega_size() == 0) return true;
  return std::abs(mu + kappa_(nearest_eigen(mu))) > 1e-12 * std::max(1.0, std::abs(mu));
}

double HeatGenerator::graph_distance(const Vector& x, const Vector& y) const {
  if (x.size() != dim() || y.size() != dim()) throw InvalidInput("graph_distance: length mismatch");
  double d2 = 0.0;
  for (Index i = 0; i < dim(); ++i)
    if (!op_.mask().contains(i)) d2 += std::norm(x(i));
  const Index w = op_.omega_size();
  if (w > 0) {
    // Least squares over v: ‖a - v‖² + ‖b - L v‖², diagonal in the eigenbasis.
    const Vector a = op_.restrict(x), b = op_.restrict(y);
    const RealMatrix qt = q_.transpose();
    const RealVector ar = qt * a.real(), ai = qt * a.imag();
    const RealVector br = qt * b.real(), bi = qt * b.imag();
    for (Index k = 0; k < w; ++k) {
      const Scalar ah(ar(k), ai(k)), bh(br(k), bi(k));
      const double kk = kappa_(k);
      const Scalar v = (ah - kk * bh) / (1.0 + kk * kk);
      d2 += std::norm(ah - v) + std::norm(bh + kk * v);
    }
  }
  return std::sqrt(d2);
}

double HeatGenerator::graph_gap(const Generator& other) const {
  const auto* o = dynamic_cast<const HeatGenerator*>(&other);
  if (!o) throw InvalidInput("graph_gap: generators of different kinds");
  if (!(o->op_.grid() == op_.grid())) throw InvalidInput("graph_gap: masks live on different grids");
  const Index n = dim();
  std::vector<Vector> probes;
  probes.push_back(Vector::Ones(n));
  Vector xs(n);
  for (Index i = 0; i < n; ++i) xs(i) = op_.grid().point(i)[0];
  probes.push_back(xs);
  std::mt19937_64 rng(0x5eed);
  std::normal_distribution<double> gauss;
  for (int p = 0; p < 2; ++p) {
    Vector g(n);
    for (Index i = 0; i < n; ++i) g(i) = gauss(rng);
    probes.push_back(g);
  }
  double worst = 0.0;
  for (const HeatGenerator* from : {this, o}) {
    const HeatGenerator* to = from == this ? o : this;
    for (const Vector& g : probes) {
      const Vector u = from->resolvent_apply(1.0, g);
      const Vector y = u - g;
      const double scale = std::sqrt(u.squaredNorm() + y.squaredNorm());
      if (scale > 0.0) worst = std::max(worst, to->graph_distance(u, y) / scale);
    }
  }
  return worst;
}

double HeatGenerator::sector_ratio(const SectorSpec& spec, double eps) const {
  const double half_pi = std::acos(-1.0) / 2;
  if (!(eps > 0.0) || !(eps < spec.alpha + half_pi)) throw InvalidInput("sector_ratio: eps out of range");
  const double bound = spec.m / std::sin(eps);
  const Index w = op_.omega_size();
  if (w == 0) return 0.0;
  const double theta_max = (spec.alpha + half_pi - eps) * (1.0 - 1e-6);
  double worst = 0.0;
  constexpr int kRays = 17, kRadii = 40;
  for (int a = 0; a < kRays; ++a) {
    const double th = -theta_max + 2.0 * theta_max * a / (kRays - 1);
    for (int r = 0; r < kRadii; ++r) {
      const double rad = std::pow(10.0, -3.0 + 9.0 * r / (kRadii - 1));
      const Scalar lambda = std::polar(rad, th);
      const double dist = std::abs(lambda + kappa_(nearest_eigen(lambda)));
      if (dist == 0.0) return kInf;
      worst = std::max(worst, rad / dist);
    }
  }
  return worst / bound;
}

MultiplierResult multiplier_relation(const Mask& mask, const RealVector& m, double m_min,
                                     const std::vector<double>& lambdas, std::uint64_t seed) {
  const Index n = mask.grid().size();
  if (m.size() != n) throw InvalidInput("multiplier_relation: multiplier has the wrong length");
  for (Index i = 0; i < n; ++i)
    if (!(std::abs(m(i)) >= m_min)) throw VanishingMultiplier(static_cast<std::size_t>(i));
  const LinearRelation a = build_dirichlet_relation(mask);
  MultiplierResult res{scale_output(Matrix(m.cast<Scalar>().asDiagonal()), a), {}, false, std::nullopt, false};
  res.surjective = res.relation.ran().is_full();
  res.sampled = is_dissipative_sampled(res.relation, Norm::sup, 200, lambdas, seed);
  if (m.minCoeff() > 0.0) {
    const DirichletOperator op(mask);
    const Index w = op.omega_size();
    RealVector mo(w);
    for (Index k = 0; k < w; ++k) mo(k) = m(op.omega()[k]);
    double worst = 0.0;
    for (double lambda : lambdas) {
      if (w == 0) break;
      SparseMatrix ml = -(mo.asDiagonal() * op.laplacian());
      for (Index k = 0; k < w; ++k) ml.coeffRef(k, k) += lambda;
      ml.makeCompressed();
      Eigen::SparseLU<SparseMatrix> lu(ml);
      if (lu.info() != Eigen::Success) throw SolverBreakdown("multiplier_relation: factorization failed");
      const RealMatrix r = lu.solve(RealMatrix::Identity(w, w));
      worst = std::max(worst, lambda * max_row_sum(r, Execution::serial));
    }
    res.contraction = worst;
  }
  res.passed = res.surjective && res.sampled.passed && (!res.contraction || *res.contraction <= 1.0 + 1e-12);
  return res;
}

MaxPrincipleEvidence max_principle_check(const DirichletOperator& op, std::size_t samples, std::uint64_t seed,
                                         double slack_tol) {
  MaxPrincipleEvidence ev;
  const Index w = op.omega_size();
  ev.worst_slack = kInf;
  if (w == 0) {
    ev.passed = true;
    return ev;
  }
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> gauss;
  std::uniform_real_distribution<double> unif;
  RealVector u(w), f(w);
  for (std::size_t s = 0; s < samples; ++s) {
    // Alternate rough samples with smooth nonnegative ones (R(λ)g, g ≥ 0),
    // where the peak sits in the interior and the inequality is tight.
    for (Index k = 0; k < w; ++k) u(k) = s % 2 == 0 ? gauss(rng) : unif(rng);
    if (s % 2 == 1) {
      Ldlt ldlt(shifted(op.laplacian(), 0.1 + unif(rng)));
      u = ldlt.solve(u);
    }
    stencil_apply(op.stencil(), u.data(), f.data(), Execution::serial);
    Index x0 = 0;
    for (Index k = 1; k < w; ++k)
      if (std::abs(u(k)) > std::abs(u(x0))) x0 = k;
    const double sign = u(x0) < 0.0 ? -1.0 : 1.0;
    ev.worst_slack = std::min(ev.worst_slack, -sign * f(x0));
    ++ev.samples;
  }
  ev.passed = ev.worst_slack >= -slack_tol;
  return ev;
}

}  // namespace relsemi::heat
