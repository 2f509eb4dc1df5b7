// Copyright 2026 The relsemi Authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>

namespace relsemi {

/// Base class of every failure raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class NotInResolventSet : public Error {
 public:
  NotInResolventSet(std::complex<double> lambda, std::ptrdiff_t rank, double residual,
                    const std::string& why);
  std::complex<double> lambda;
  std::ptrdiff_t rank;  // numerical rank of lambda*U - V, -1 when not computed
  double residual;      // certificate residual, NaN when the rank test already failed
};

class DivergentSeries : public Error {
 public:
  explicit DivergentSeries(double contraction);
  double contraction;  // |lambda - lambda0| * ||R0||
};

class NotAPseudoResolvent : public Error {
 public:
  NotAPseudoResolvent(std::size_t first, std::size_t second, double residual);
  std::size_t first, second;
  double residual;
};

class InconsistentTable : public Error {
 public:
  InconsistentTable(std::size_t sample, double deviation);
  std::size_t sample;
  double deviation;
};

class NotSurjective : public Error {
 public:
  using Error::Error;
};

class NotDissipative : public Error {
 public:
  NotDissipative(const std::string& why, double witness);
  double witness;
};

class NotMDissipative : public Error {
 public:
  using Error::Error;
};

class DecompositionFailure : public Error {
 public:
  using Error::Error;
};

class OutsideSector : public Error {
 public:
  OutsideSector(std::complex<double> z, double alpha);
  std::complex<double> z;
  double alpha;
};

class NotCauchy : public Error {
 public:
  NotCauchy(const std::string& why, double worst);
  double worst;
};

class ResolventNotConvergent : public Error {
 public:
  ResolventNotConvergent(const std::string& why, double worst);
  double worst;
};

class UnboundedResolventFamily : public Error {
 public:
  UnboundedResolventFamily(std::size_t index, double norm);
  std::size_t index;
  double norm;
};

class InconsistentEquivalence : public Error {
 public:
  using Error::Error;
};

class SectorHypothesisFailed : public Error {
 public:
  SectorHypothesisFailed(std::size_t index, double ratio);
  std::size_t index;
  double ratio;
};

class MaskTouchesBoundary : public Error {
 public:
  explicit MaskTouchesBoundary(std::size_t node);
  std::size_t node;
};

class ContractFailed : public Error {
 public:
  ContractFailed(double lambda, std::size_t row, double norm);
  double lambda;
  std::size_t row;
  double norm;
};

class SolverBreakdown : public Error {
 public:
  using Error::Error;
};

class VanishingMultiplier : public Error {
 public:
  explicit VanishingMultiplier(std::size_t node);
  std::size_t node;
};

class ConfigError : public Error {
 public:
  using Error::Error;
};

}  // namespace relsemi
