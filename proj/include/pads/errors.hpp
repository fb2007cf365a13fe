#pragma once

#include <stdexcept>
#include <string>

namespace pads {

enum class ErrorKind {
  domain,
  pole,
  singularPoint,
  imaginaryOrder,
  notSquareIntegrable,
  extrapolation,
  normalization,
  groundStateAbsent,
  quadrature,
  stencil,
  resolution,
  region,
  fit,
  degree,
  basis,
  config,
};

// Exit-code category used by the CLI: 2 for bad input, 3 for numerical failure.
enum class ErrorCategory { config, convergence };

const char* kindName(ErrorKind k);
ErrorCategory categoryOf(ErrorKind k);

class Error : public std::runtime_error {
public:
  Error(ErrorKind kind, const std::string& what) : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }
  ErrorCategory category() const { return categoryOf(kind_); }

private:
  ErrorKind kind_;
};

template <ErrorKind K>
class ErrorOf : public Error {
public:
  explicit ErrorOf(const std::string& what) : Error(K, what) {}
};

using DomainError = ErrorOf<ErrorKind::domain>;
using PoleError = ErrorOf<ErrorKind::pole>;
using SingularPointError = ErrorOf<ErrorKind::singularPoint>;
using ImaginaryOrderError = ErrorOf<ErrorKind::imaginaryOrder>;
using NotSquareIntegrableError = ErrorOf<ErrorKind::notSquareIntegrable>;
using ExtrapolationError = ErrorOf<ErrorKind::extrapolation>;
using NormalizationError = ErrorOf<ErrorKind::normalization>;
using GroundStateAbsentError = ErrorOf<ErrorKind::groundStateAbsent>;
using QuadratureError = ErrorOf<ErrorKind::quadrature>;
using StencilError = ErrorOf<ErrorKind::stencil>;
using ResolutionError = ErrorOf<ErrorKind::resolution>;
using RegionError = ErrorOf<ErrorKind::region>;
using FitError = ErrorOf<ErrorKind::fit>;
using DegreeError = ErrorOf<ErrorKind::degree>;
using BasisError = ErrorOf<ErrorKind::basis>;
using ConfigError = ErrorOf<ErrorKind::config>;

inline const char* kindName(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain";
    case ErrorKind::pole: return "pole";
    case ErrorKind::singularPoint: return "singular-point";
    case ErrorKind::imaginaryOrder: return "imaginary-order";
    case ErrorKind::notSquareIntegrable: return "not-square-integrable";
    case ErrorKind::extrapolation: return "extrapolation-failure";
    case ErrorKind::normalization: return "normalization-singularity";
    case ErrorKind::groundStateAbsent: return "ground-state-absent";
    case ErrorKind::quadrature: return "quadrature";
    case ErrorKind::stencil: return "stencil";
    case ErrorKind::resolution: return "resolution";
    case ErrorKind::region: return "region";
    case ErrorKind::fit: return "fit";
    case ErrorKind::degree: return "degree";
    case ErrorKind::basis: return "basis-construction";
    case ErrorKind::config: return "config";
  }
  return "unknown";
}

inline ErrorCategory categoryOf(ErrorKind k) {
  switch (k) {
    case ErrorKind::pole:
    case ErrorKind::singularPoint:
    case ErrorKind::extrapolation:
    case ErrorKind::quadrature:
    case ErrorKind::resolution:
    case ErrorKind::fit:
    case ErrorKind::basis:
      return ErrorCategory::convergence;
    default:
      return ErrorCategory::config;
  }
}

}  // namespace pads
