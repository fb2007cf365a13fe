#pragma once

#include <complex>

namespace pads {

using cplx = std::complex<double>;

namespace specfun {

// Fractional powers of -1 are resolved as (-1)^w = exp(-i*pi*w*kBranchSign).
inline constexpr int kBranchSign = 1;

cplx minusOnePow(double w, int branchSign = kBranchSign);

cplx gammaFn(cplx w);
double gammaFn(double x);
// 1/Gamma, entire: zero at the poles of Gamma.
cplx rgamma(cplx w);
double rgamma(double x);

double besselJ(double nu, double x);
double besselY(double nu, double x);
double besselK(double nu, double x);
double besselJPrime(double nu, double x);
double besselYPrime(double nu, double x);

// Individual Bessel regimes, exposed so the crossover can be tested.
double besselJSeries(double nu, double x);
void besselHankelAsymptotic(double nu, double x, double& j, double& y);

struct Hyp2F1Params {
  cplx a, b, c, w;
};

// F(a,b;c;w)/Gamma(c), principal branch with the cut along [1, inf).
// For w exactly on the cut, cutSide selects the limit from above (+1) or below (-1).
cplx hyp2f1Reg(cplx a, cplx b, cplx c, cplx w, int cutSide = 1);
cplx hyp2f1Reg(const Hyp2F1Params& p, int cutSide = 1);
// Same function from the power series only, |w| < 1.
cplx hyp2f1RegSeries(cplx a, cplx b, cplx c, cplx w);

// Gamma(b) F(a,b;2b;w)/Gamma(2b): finite at b = 0 where both Gammas have poles.
cplx hyp2f1HalfC(double a, double b, cplx w, int cutSide = 1);

}  // namespace specfun
}  // namespace pads
