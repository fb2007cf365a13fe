#pragma once

#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "pads/geometry.hpp"
#include "pads/modes.hpp"
#include "pads/specfun.hpp"

namespace pads {

enum class KernelKind { D, N };

// u^{-d/2 -+ nu} F(d/2 +- nu, 1/2 +- nu; 1 +- 2nu; 1/u)/Gamma(1 +- 2nu). For real u the side picks u +- i0.
cplx omega2DN(KernelKind kind, int d, double nu, cplx u, int side = 1);

// Normalized Dirichlet (N: nu -> -nu) two-point function on PAdS as a function of u.
// d = 2 and (d = 3, nu = 1/2) use elementary reductions.
cplx omegaCanonical(KernelKind kind, int d, double nu, cplx u, int side = 1);
// Same through the hypergeometric series and continuation for every d.
cplx omegaCanonicalGeneral(KernelKind kind, int d, double nu, cplx u, int side = 1);

// Gamma((d+1)/2) F(d/2+nu, d/2-nu; (d+1)/2; w): the direct (w = u) and image (w = 1-u) pieces.
// d = 2 uses F(1+nu, 1-nu; 3/2; sin^2 x) = sin(2 nu x)/(nu sin 2x).
cplx decompositionHyp(int d, double nu, cplx w, int side = 1);
cplx decompositionHypGeneral(int d, double nu, cplx w, int side = 1);

// Image weight of the Hadamard form.
cplx cAlphaNu(const BoundaryCondition& bc, double nu, int branchSign = specfun::kBranchSign);

struct KernelCoefficients {
  cplx Nalpha;
  cplx Aalpha;
  cplx Balpha;
  cplx UpsA;       // Upsilon_A(nu)
  cplx UpsAminus;  // Upsilon_A(-nu)
  cplx UpsB;
  cplx UpsBminus;
  cplx cAlphaNu;
  int side;
};

// Coefficients for Im u_eps of sign `side` (the lower side is the complex conjugate).
KernelCoefficients coefficients(const ModelParams& params, const BoundaryCondition& bc, int side = 1,
                                int branchSign = specfun::kBranchSign);

struct RegulatedKernelValue {
  cplx value;
  double epsilon;
  std::vector<std::pair<double, cplx>> ladder;
};

inline const std::vector<double> kEpsLadder = {1e-2, 1e-3, 1e-4};

// Kernels on PAdS as functions of the pair geometry; eps = 0 gives the boundary value from the side sign(dt).
using KernelFn = std::function<cplx(const PairGeometry&, double eps)>;

// Validated (model, boundary condition) combination with closed-form kernels.
class PropagatorModel {
 public:
  // Throws NormalizationError at cos(alpha) + sin(alpha) = 0.
  PropagatorModel(const ModelParams& params, const BoundaryCondition& bc);

  const ModelParams& params() const { return params_; }
  const BoundaryCondition& bc() const { return bc_; }
  bool hasGroundState() const { return bc_.admissibleForGroundState(params_.nu); }

  // Closed forms. omega requires an admissible condition (GroundStateAbsentError otherwise).
  cplx omega(const PairGeometry& g, double eps) const;
  // G = -i [omega(u_eps) - omega(conj u_eps)], real; the bound-state mode is added when present.
  cplx propagator(const PairGeometry& g, double eps) const;
  // Same two kernels through the split into direct and image hypergeometric pieces.
  cplx omegaDecomposed(const PairGeometry& g, double eps, int branchSign = specfun::kBranchSign) const;
  cplx propagatorDecomposed(const PairGeometry& g, double eps, int branchSign = specfun::kBranchSign) const;
  // Direct piece plus image weight times its reflection.
  cplx hadamardPart(const PairGeometry& g, double eps) const;
  // Bound-state addition to G on PAdS; zero outside the bound-state regime.
  cplx boundStateTerm(const PairGeometry& g, double eps) const;

  KernelFn omegaFn() const;
  KernelFn propagatorFn() const;

 private:
  cplx omegaFromU(const CrossRatio& cr, int side) const;
  cplx continuumPropagator(const PairGeometry& g, double eps) const;
  KernelCoefficients coefficientsFor(int side, int branchSign) const;
  ModelParams params_;
  BoundaryCondition bc_;
  std::optional<std::pair<KernelCoefficients, KernelCoefficients>> coef_;
};

RegulatedKernelValue omega2(const ModelParams& params, const BoundaryCondition& bc, const SpacetimePoint& x,
                            const SpacetimePoint& xp, double eps);
RegulatedKernelValue causalPropagator(const ModelParams& params, const BoundaryCondition& bc,
                                      const SpacetimePoint& x, const SpacetimePoint& xp, double eps);
RegulatedKernelValue kernelViaDecomposition(const ModelParams& params, const BoundaryCondition& bc,
                                            const SpacetimePoint& x, const SpacetimePoint& xp, double eps);
RegulatedKernelValue boundStateTerm(const ModelParams& params, const BoundaryCondition& bc,
                                    const SpacetimePoint& x, const SpacetimePoint& xp, double eps);

// Evaluates a kernel on the ladder and extrapolates to eps -> 0 assuming an O(eps) error.
RegulatedKernelValue onLadder(const KernelFn& k, const PairGeometry& g, const std::vector<double>& ladder = kEpsLadder);

enum class RescaleDirection { toH, toPAdS };
// The same kernel divided by (z z')^{(d-1)/2}.
KernelFn onH(KernelFn k, int d);
// Multiplies (toPAdS) or divides (toH) by (z z')^{(d-1)/2}.
cplx rescale(cplx value, double z, double zp, int d, RescaleDirection dir);

}  // namespace pads
