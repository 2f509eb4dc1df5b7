// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include <boost/math/constants/constants.hpp>

#include "relsemi/errors.hpp"

namespace relsemi {

namespace {

GaussRule build_rule(int n) {
  const double pi = boost::math::constants::pi<double>();
  GaussRule r;
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(pi * (i + 0.75) / (n + 0.5));
    double dp = 0.0;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      const double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    const double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

template <class T>
T composite(const std::function<T(double)>& f, double a, double b, int n) {
  if (n < 1) throw InvalidInput("quadrature needs at least one node");
  const GaussRule& rule = gauss_legendre(n);
  const int panels = std::max(1, static_cast<int>(std::ceil(std::abs(b - a) - 1e-12)));
  const double h = (b - a) / panels;
  T acc;
  bool first = true;
  for (int p = 0; p < panels; ++p) {
    const double mid = a + (p + 0.5) * h;
    for (int k = 0; k < n; ++k) {
      T v = f(mid + 0.5 * h * rule.nodes[k]) * (0.5 * h * rule.weights[k]);
      if (first) {
        acc = std::move(v);
        first = false;
      } else {
        acc += v;
      }
    }
  }
  return acc;
}

}  // namespace

const GaussRule& gauss_legendre(int n) {
  if (n < 1) throw InvalidInput("quadrature needs at least one node");
  static std::mutex mu;
  static std::map<int, GaussRule> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it == cache.end()) it = cache.emplace(n, build_rule(n)).first;
  return it->second;
}

Matrix integrate_matrix(const std::function<Matrix(double)>& f, double a, double b, int n) {
  return composite<Matrix>(f, a, b, n);
}

Vector integrate_vector(const std::function<Vector(double)>& f, double a, double b, int n) {
  return composite<Vector>(f, a, b, n);
}

}  // namespace relsemi
