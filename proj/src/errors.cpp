// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#include "relsemi/errors.hpp"

#include <cmath>
#include <sstream>

namespace relsemi {
namespace {

std::string fmt_complex(std::complex<double> z) {
  std::ostringstream os;
  os << z.real();
  if (z.imag() != 0.0) os << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

}  // namespace

NotInResolventSet::NotInResolventSet(std::complex<double> l, std::ptrdiff_t r, double res,
                                     const std::string& why)
    : Error("lambda=" + fmt_complex(l) + " is not in the resolvent set: " + why),
      lambda(l),
      rank(r),
      residual(res) {}

DivergentSeries::DivergentSeries(double q)
    : Error("Neumann series does not converge: |lambda-lambda0|*||R0|| = " + std::to_string(q)),
      contraction(q) {}

NotAPseudoResolvent::NotAPseudoResolvent(std::size_t a, std::size_t b, double r)
    : Error("resolvent identity violated between samples " + std::to_string(a) + " and " +
            std::to_string(b) + " (residual " + std::to_string(r) + ")"),
      first(a),
      second(b),
      residual(r) {}

InconsistentTable::InconsistentTable(std::size_t s, double d)
    : Error("sample " + std::to_string(s) + " is not reproduced by the reconstructed relation (deviation " +
            std::to_string(d) + ")"),
      sample(s),
      deviation(d) {}

NotDissipative::NotDissipative(const std::string& why, double w) : Error(why), witness(w) {}

OutsideSector::OutsideSector(std::complex<double> zz, double a)
    : Error("z=" + fmt_complex(zz) + " lies outside the sector of half-angle " + std::to_string(a)),
      z(zz),
      alpha(a) {}

NotCauchy::NotCauchy(const std::string& why, double w) : Error(why), worst(w) {}

ResolventNotConvergent::ResolventNotConvergent(const std::string& why, double w)
    : Error(why), worst(w) {}

UnboundedResolventFamily::UnboundedResolventFamily(std::size_t i, double n)
    : Error("resolvent norm " + std::to_string(n) + " at sequence index " + std::to_string(i) +
            " exceeds the boundedness cap"),
      index(i),
      norm(n) {}

SectorHypothesisFailed::SectorHypothesisFailed(std::size_t i, double r)
    : Error("sequence element " + std::to_string(i) + " violates the sector bound (ratio " +
            std::to_string(r) + ")"),
      index(i),
      ratio(r) {}

MaskTouchesBoundary::MaskTouchesBoundary(std::size_t n)
    : Error("domain mask contains lattice-boundary node " + std::to_string(n)), node(n) {}

ContractFailed::ContractFailed(double l, std::size_t r, double n)
    : Error("sup-norm contraction fails at lambda=" + std::to_string(l) + ", row " + std::to_string(r) +
            " (norm " + std::to_string(n) + ")"),
      lambda(l),
      row(r),
      norm(n) {}

VanishingMultiplier::VanishingMultiplier(std::size_t n)
    : Error("multiplier vanishes at node " + std::to_string(n)), node(n) {}

}  // namespace relsemi
