#pragma once

#include <vector>

#include "pads/geometry.hpp"
#include "pads/kernels.hpp"
#include "pads/modes.hpp"

namespace pads::wavefront {

struct CovectorPoint {
  SpacetimePoint x;
  std::vector<double> k;  // (k_t, k_x..., k_z), nonzero

  CovectorPoint(SpacetimePoint point, std::vector<double> covector);
};

struct CommutatorRelation {
  bool direct;
  bool reflected;
};

inline constexpr double kPredicateTol = 1e-9;

// Null covector transported along the straight (direct) or boundary-reflected ray from x to x'.
CommutatorRelation wfPredicateCommutator(const CovectorPoint& a, const CovectorPoint& b, double tol = kPredicateTol);
// Commutator relation with the covector at x future-pointing: its dual vector has positive time component (k_t < 0).
bool wfPredicateState(const CovectorPoint& a, const CovectorPoint& b, double tol = kPredicateTol);
bool futurePointing(const std::vector<double>& k);
// (k_t, k_x, -k_z)
std::vector<double> mirrored(const std::vector<double>& k);

// Straight segment of second points x'(s) = from + s (to - from), s in [0, 1], against a fixed first point.
struct ScanPath {
  SpacetimePoint x;
  SpacetimePoint from;
  SpacetimePoint to;
  SpacetimePoint at(double s) const;
  PairGeometry pair(double s) const { return PairGeometry::of(x, at(s)); }
};

struct SingularFit {
  double uStar;       // 1 (direct) or 0 (reflected)
  double sStar;       // path parameter of the crossing
  double exponent;
  cplx coefficient;   // kernel / |u - u*|^exponent, averaged over the window
  double windowMin;   // |u - u*| range used
  double windowMax;
  double quality;     // rms residual of the log-log fit
};

inline constexpr double kFitQualityMax = 0.05;

struct ScanOptions {
  int coarseSamples = 400;  // bracket search along the path
  int fitSamples = 12;      // per side of each crossing
  double windowMax = 1e-7;
};

// Locates every crossing of u = 1 and u = 0 along the path and fits |kernel| ~ |u - u*|^p on each side,
// excluding a 10 eps collar (eps the smallest ladder value). Throws FitError if a fit is poor.
std::vector<SingularFit> singularScanAndFit(const KernelFn& kernel, const ScanPath& path,
                                            const std::vector<double>& epsLadder, const ScanOptions& opt = {});

// |coefficient at u = 0| / |coefficient at u = 1| over a fit list holding both crossings.
double coefficientRatio(const std::vector<SingularFit>& fits);

struct RestrictionReport {
  double differenceMax;  // max fourth divided difference of omega_alpha - omega_ref
  double kernelMax;      // the same for omega_alpha alone
};

// Fourth divided differences along the path of omega_2(alpha) - omega_2(reference); the path must stay clear of the
// reflected locus (RegionError otherwise).
RestrictionReport hadamardRestrictionCheck(const ModelParams& params, const BoundaryCondition& bc,
                                           const BoundaryCondition& reference, const ScanPath& region,
                                           int samples = 200);

}  // namespace pads::wavefront
