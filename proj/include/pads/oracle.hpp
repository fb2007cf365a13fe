#pragma once

#include <vector>

#include "pads/geometry.hpp"
#include "pads/kernels.hpp"
#include "pads/modes.hpp"
#include "pads/smearing.hpp"

namespace pads::oracle {

// -(2 pi)^{-(d-1)/2} q int_0^inf dk k (k/r)^{(d-3)/2} J_{(d-3)/2}(kr) sin(w dt) e^{-eps w} / w,  w = sqrt(k^2 + q^2).
// q < 0 encodes the bound-state continuation w = sqrt(k^2 - q^2) with prefactor q.
double iEps(double q, double r, double dt, double eps, int d);

// Mode-sum causal propagator on the rescaled half space H. The damping rate is 2 eps, which
// matches the closed form at u_eps to first order in eps.
double modeSumG(const ModelParams& params, const BoundaryCondition& bc, const PairGeometry& g, double eps);

// Second-order central-difference P_eta acting on the first (side = 0) or second (side = 1) slot.
cplx pdeResidual(const KernelFn& kernel, const ModelParams& params, const SpacetimePoint& x,
                 const SpacetimePoint& xp, double h, int side = 0, double eps = 0.0);

// sigma(f, f') = G(f, f') for d = 2 test functions.
double symplecticForm(const TestFunction& f, const TestFunction& fp, const ModelParams& params,
                      const BoundaryCondition& bc, const QuadratureSpec& quad = {});

struct TimeSliceReport {
  double residual;  // max |G(f)(x) - G(g)(x)| over the samples
  double scale;     // max |G(f)(x)| over the samples
};

struct TimeSliceSetup {
  double tBar;        // slab centre
  double halfWidth;   // chi switches from 0 to 1 over [tBar - halfWidth, tBar + halfWidth]
  int gridT = 12;     // interpolation grid for G(f) over the slab
  int gridX = 32;
  int gridZ = 32;
  int gridRadial = 24;  // per panel, polar quadrature about each sample
  int gridAngle = 64;
};

// g = P_eta(chi_+ G(f)) with chi_+ = 0 before and 1 after the slab, computed for d = 2.
TimeSliceReport timeSliceSurrogate(const TestFunction& f, const TimeSliceSetup& setup, const ModelParams& params,
                                   const BoundaryCondition& bc, const std::vector<SpacetimePoint>& samples);

struct EqualTimeReport {
  double commutatorAtEqualTime;
  double timeDerivativePairing;
  double overlap;  // integral of f f' over the slice
};

struct GaussianProfile {
  std::vector<double> centre;  // (x_1.., z)
  double width;
};

// Spatial Gaussian smearing at a common time, d = 3 only.
EqualTimeReport equalTimeChecks(const GaussianProfile& f, const GaussianProfile& fp, const ModelParams& params,
                                const BoundaryCondition& bc);

}  // namespace pads::oracle
