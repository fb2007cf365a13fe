#include "pads/kernels.hpp"

#include <cmath>
#include <numbers>

#include "pads/errors.hpp"
#include "pads/oracle.hpp"
#include "pads/quadrature.hpp"

namespace pads {

namespace {

constexpr double kPi = std::numbers::pi;
const cplx kI(0.0, 1.0);

int sideOf(double dt) { return dt < 0.0 ? -1 : 1; }

// 2^{d+1} pi^{(d+1)/2}
double volumeFactor(int d) { return std::pow(2.0, d + 1) * std::pow(kPi, 0.5 * (d + 1)); }

cplx powSided(cplx u, double p, int side) {
  if (u.imag() == 0.0 && u.real() < 0.0) return std::pow(cplx(u.real(), side >= 0 ? 0.0 : -0.0), p);
  return std::pow(u, p);
}

void checkU(cplx u) {
  if (u == cplx(0.0)) throw SingularPointError("kernel evaluated on the reflected null cone (u = 0)");
}

// Gamma((d+1)/2) F(d/2+nu, d/2-nu; (d+1)/2; w)
// F(1+nu, 1-nu; 3/2; sin^2 x) = sin(2 nu x)/(nu sin 2x), upper side of the cut.
cplx decompositionF2Upper(double nu, cplx w) {
  if (w == cplx(0.0)) return 1.0;
  if (w == cplx(1.0)) throw SingularPointError("decomposition evaluated on the light cone");
  const cplx sw = std::sqrt(w);
  const cplx om = std::sqrt(cplx(1.0 - w.real(), -w.imag()));
  return std::sin(2.0 * nu * std::asin(sw)) / (2.0 * nu * sw * om);
}

cplx decompositionF(int d, double nu, cplx w, int side) {
  if (d == 2 && nu > 0.0) {
    if (w.imag() == 0.0 && w.real() > 1.0) {
      const cplx up = decompositionF2Upper(nu, cplx(w.real(), 0.0));
      return side >= 0 ? up : std::conj(up);
    }
    return decompositionF2Upper(nu, w);
  }
  const double c = 0.5 * (d + 1);
  return specfun::gammaFn(c) * specfun::hyp2f1Reg(0.5 * d + nu, 0.5 * d - nu, c, w, side);
}

}  // namespace

cplx decompositionHyp(int d, double nu, cplx w, int side) { return decompositionF(d, nu, w, side); }

cplx decompositionHypGeneral(int d, double nu, cplx w, int side) {
  const double c = 0.5 * (d + 1);
  return specfun::gammaFn(c) * specfun::hyp2f1Reg(0.5 * d + nu, 0.5 * d - nu, c, w, side);
}

namespace {

}  // namespace

cplx omega2DN(KernelKind kind, int d, double nu, cplx u, int side) {
  checkU(u);
  const double s = kind == KernelKind::D ? 1.0 : -1.0;
  const double a = 0.5 * d + s * nu;
  const cplx w = 1.0 / u;
  return powSided(u, -a, side) * specfun::hyp2f1Reg(a, 0.5 + s * nu, 1.0 + 2.0 * s * nu, w, -side);
}

namespace {

// Upper-side (Im u >= 0) evaluation of the normalized kernel; 1-u is passed separately for accuracy.
cplx canonicalUpper(KernelKind kind, int d, double nu, const CrossRatio& cr) {
  checkU(cr.u);
  const double s = kind == KernelKind::D ? 1.0 : -1.0;
  const double a = 0.5 * d + s * nu;
  const cplx u = cr.u;
  if (d == 3 && nu == 0.5) {
    // Elementary: (1/16 pi^2) (1/(u-1) -+ 1/u)
    const cplx um1 = -cr.oneMinusU;
    if (um1 == cplx(0.0)) throw SingularPointError("kernel evaluated on the light cone (u = 1)");
    return (1.0 / (16.0 * kPi * kPi)) * (1.0 / um1 - s / u);
  }
  if (d == 2) {
    // F(b+1/2, b; 2b; w) = (1-w)^{-1/2} ((1 + sqrt(1-w))/2)^{1-2b} makes the kernel elementary.
    cplx omw = -cr.oneMinusU / u;
    if (omw == cplx(0.0)) throw SingularPointError("kernel evaluated on the light cone (u = 1)");
    if (omw.imag() == 0.0) omw = cplx(omw.real(), 0.0);
    return (1.0 / (8.0 * kPi)) * powSided(u, -a, 1) * std::pow(omw, -0.5) * std::pow(1.0 + std::sqrt(omw), -2.0 * s * nu);
  }
  const double b = 0.5 + s * nu;
  return specfun::gammaFn(a) / volumeFactor(d) * powSided(u, -a, 1) * specfun::hyp2f1HalfC(a, b, 1.0 / u, -1);
}

cplx canonical(KernelKind kind, int d, double nu, const CrossRatio& cr, int side) {
  if (side < 0) return std::conj(canonicalUpper(kind, d, nu, {std::conj(cr.u), std::conj(cr.oneMinusU)}));
  return canonicalUpper(kind, d, nu, cr);
}

}  // namespace

cplx omegaCanonical(KernelKind kind, int d, double nu, cplx u, int side) {
  return canonical(kind, d, nu, {u, 1.0 - u}, side);
}

cplx omegaCanonicalGeneral(KernelKind kind, int d, double nu, cplx u, int side) {
  checkU(u);
  if (side < 0) return std::conj(omegaCanonicalGeneral(kind, d, nu, std::conj(u), 1));
  const double s = kind == KernelKind::D ? 1.0 : -1.0;
  const double a = 0.5 * d + s * nu;
  const double b = 0.5 + s * nu;
  return specfun::gammaFn(a) / volumeFactor(d) * powSided(u, -a, 1) * specfun::hyp2f1HalfC(a, b, 1.0 / u, -1);
}

namespace {

cplx boundStateOnPAdS(const ModelParams& params, const BoundaryCondition& bc, const PairGeometry& g, double eps) {
  const auto kappa = boundStateKappa(bc, params.nu);
  if (!kappa) return 0.0;
  if (!(eps > 0.0)) throw DomainError("bound-state term needs eps > 0");
  const double k = *kappa;
  const double radial = specfun::besselK(params.nu, k * g.z) * specfun::besselK(params.nu, k * g.zp);
  const double onH = 2.0 * oracle::iEps(-k, std::sqrt(g.r2), g.dt, 2.0 * eps, params.d) * radial;
  return rescale(onH, g.z, g.zp, params.d, RescaleDirection::toPAdS);
}

}  // namespace

cplx cAlphaNu(const BoundaryCondition& bc, double nu, int branchSign) {
  const double denom = bc.a() + bc.b();
  if (denom == 0.0) throw NormalizationError("cos(alpha) + sin(alpha) = 0: normalization undefined at alpha = 3pi/4");
  return kI * specfun::minusOnePow(nu, branchSign) * (bc.a() + specfun::minusOnePow(-2.0 * nu, branchSign) * bc.b()) /
         denom;
}

KernelCoefficients coefficients(const ModelParams& params, const BoundaryCondition& bc, int side, int branchSign) {
  const int d = params.d;
  const double nu = params.nu;
  const double denom = bc.a() + bc.b();
  if (denom == 0.0) throw NormalizationError("cos(alpha) + sin(alpha) = 0: normalization undefined at alpha = 3pi/4");
  if (!(nu > 0.0 && nu < 1.0) && !bc.isDirichlet())
    throw DomainError("hypergeometric decomposition needs nu in (0,1) away from Dirichlet");
  const double sg = side >= 0 ? 1.0 : -1.0;
  const int branch = int(sg) * branchSign;
  using specfun::gammaFn;
  using specfun::minusOnePow;
  KernelCoefficients k{};
  k.side = int(sg);
  k.Nalpha = gammaFn(0.5 * (d - 1)) / (volumeFactor(d) * denom);
  const double gammas = gammaFn(0.5 * d + nu) * gammaFn(0.5 * d - nu) / (gammaFn(0.5 * (d - 1)) * gammaFn(0.5 * (d + 1)));
  k.UpsA = sg * kI * minusOnePow(0.5 * d, branch) * gammas;
  k.UpsAminus = k.UpsA;
  k.UpsB = -minusOnePow(-(0.5 * d - nu), branch) * k.UpsA;
  k.UpsBminus = -minusOnePow(-(0.5 * d + nu), branch) * k.UpsA;
  k.Aalpha = bc.a() * k.UpsA + bc.b() * k.UpsAminus;
  k.Balpha = bc.a() * k.UpsB + bc.b() * k.UpsBminus;
  k.cAlphaNu = cAlphaNu(bc, nu, branchSign);
  return k;
}

PropagatorModel::PropagatorModel(const ModelParams& params, const BoundaryCondition& bc) : params_(params), bc_(bc) {
  if (bc.a() + bc.b() == 0.0)
    throw NormalizationError("cos(alpha) + sin(alpha) = 0: normalization undefined at alpha = 3pi/4");
  if (params.nu >= 1.0 && !bc.isDirichlet())
    throw NotSquareIntegrableError("only the Dirichlet condition is available for nu >= 1");
  if (params.nu == 0.0 && !bc.isDirichlet())
    throw DomainError("closed-form kernels at nu = 0 are available for the Dirichlet condition only");
  try {
    coef_ = {coefficients(params, bc, 1), coefficients(params, bc, -1)};
  } catch (const Error&) {
    coef_.reset();
  }
}

KernelCoefficients PropagatorModel::coefficientsFor(int side, int branchSign) const {
  if (coef_ && branchSign == specfun::kBranchSign) return side >= 0 ? coef_->first : coef_->second;
  return coefficients(params_, bc_, side, branchSign);
}

cplx PropagatorModel::omegaFromU(const CrossRatio& cr, int side) const {
  const int d = params_.d;
  const double nu = params_.nu;
  cplx v = bc_.a() * canonical(KernelKind::D, d, nu, cr, side);
  if (bc_.b() != 0.0) v += bc_.b() * canonical(KernelKind::N, d, nu, cr, side);
  return v / (bc_.a() + bc_.b());
}

cplx PropagatorModel::omega(const PairGeometry& g, double eps) const {
  if (!hasGroundState())
    throw GroundStateAbsentError("no ground state for this boundary condition (bound-state regime)");
  return omegaFromU(g.uEps(eps), sideOf(g.dt));
}

cplx PropagatorModel::continuumPropagator(const PairGeometry& g, double eps) const {
  return 2.0 * omegaFromU(g.uEps(eps), sideOf(g.dt)).imag();
}

cplx PropagatorModel::propagator(const PairGeometry& g, double eps) const {
  cplx v = continuumPropagator(g, eps);
  if (!hasGroundState()) v += boundStateTerm(g, eps);
  return v;
}

cplx PropagatorModel::omegaDecomposed(const PairGeometry& g, double eps, int branchSign) const {
  const int side = sideOf(g.dt);
  const KernelCoefficients k = coefficientsFor(side, branchSign);
  const CrossRatio cr = g.uEps(eps);
  checkU(cr.u);
  const int d = params_.d;
  const double nu = params_.nu;
  return k.Nalpha * (k.Aalpha * decompositionF(d, nu, cr.u, side) + k.Balpha * decompositionF(d, nu, cr.oneMinusU, -side));
}

cplx PropagatorModel::propagatorDecomposed(const PairGeometry& g, double eps, int branchSign) const {
  const cplx forward = omegaDecomposed(g, eps, branchSign);
  const cplx backward = omegaDecomposed(g.swapped(), eps, branchSign);
  return -kI * (forward - backward);
}

cplx PropagatorModel::hadamardPart(const PairGeometry& g, double eps) const {
  const int side = sideOf(g.dt);
  const KernelCoefficients k = coefficientsFor(side, specfun::kBranchSign);
  const CrossRatio cr = g.uEps(eps);
  checkU(cr.u);
  const int d = params_.d;
  const double nu = params_.nu;
  // Image weight of H + c iota_z H carries the dimension phase exp(i pi (d-3)/2) on the upper side.
  cplx weight = k.cAlphaNu * std::exp(kI * (kPi * 0.5 * (d - 3)));
  if (side < 0) weight = std::conj(coefficientsFor(1, specfun::kBranchSign).cAlphaNu) * std::exp(-kI * (kPi * 0.5 * (d - 3)));
  return k.Nalpha * k.Aalpha * (decompositionF(d, nu, cr.u, side) + weight * decompositionF(d, nu, cr.oneMinusU, -side));
}

cplx PropagatorModel::boundStateTerm(const PairGeometry& g, double eps) const {
  return boundStateOnPAdS(params_, bc_, g, eps);
}

KernelFn PropagatorModel::omegaFn() const {
  return [m = *this](const PairGeometry& g, double eps) { return m.omega(g, eps); };
}

KernelFn PropagatorModel::propagatorFn() const {
  return [m = *this](const PairGeometry& g, double eps) { return m.propagator(g, eps); };
}

namespace {

RegulatedKernelValue single(cplx v, double eps) { return {v, eps, {}}; }

}  // namespace

RegulatedKernelValue omega2(const ModelParams& params, const BoundaryCondition& bc, const SpacetimePoint& x,
                            const SpacetimePoint& xp, double eps) {
  return single(PropagatorModel(params, bc).omega(PairGeometry::of(x, xp), eps), eps);
}

RegulatedKernelValue causalPropagator(const ModelParams& params, const BoundaryCondition& bc,
                                      const SpacetimePoint& x, const SpacetimePoint& xp, double eps) {
  return single(PropagatorModel(params, bc).propagator(PairGeometry::of(x, xp), eps), eps);
}

RegulatedKernelValue kernelViaDecomposition(const ModelParams& params, const BoundaryCondition& bc,
                                            const SpacetimePoint& x, const SpacetimePoint& xp, double eps) {
  return single(PropagatorModel(params, bc).propagatorDecomposed(PairGeometry::of(x, xp), eps), eps);
}

RegulatedKernelValue boundStateTerm(const ModelParams& params, const BoundaryCondition& bc,
                                    const SpacetimePoint& x, const SpacetimePoint& xp, double eps) {
  return single(boundStateOnPAdS(params, bc, PairGeometry::of(x, xp), eps), eps);
}

RegulatedKernelValue onLadder(const KernelFn& k, const PairGeometry& g, const std::vector<double>& ladder) {
  if (ladder.empty()) throw DomainError("empty eps ladder");
  RegulatedKernelValue out{0.0, ladder.back(), {}};
  std::vector<cplx> vals;
  for (double e : ladder) {
    vals.push_back(k(g, e));
    out.ladder.emplace_back(e, vals.back());
  }
  out.value = ladder.size() > 1 ? quad::richardson(ladder, vals, 1.0) : vals.back();
  return out;
}

cplx rescale(cplx value, double z, double zp, int d, RescaleDirection dir) {
  if (!(z > 0.0 && zp > 0.0)) throw DomainError("rescale requires z, z' > 0");
  const double f = std::pow(z * zp, 0.5 * (d - 1));
  return dir == RescaleDirection::toPAdS ? value * f : value / f;
}

KernelFn onH(KernelFn k, int d) {
  return [k = std::move(k), d](const PairGeometry& g, double eps) {
    return rescale(k(g, eps), g.z, g.zp, d, RescaleDirection::toH);
  };
}

}  // namespace pads
