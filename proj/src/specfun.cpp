#include "pads/specfun.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <string>

#include "pads/errors.hpp"

namespace pads::specfun {

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kEuler = 0.57721566490153286060651209008240243;
constexpr double kTol = 1e-17;

bool isNonPositiveInteger(double x) { return x <= 0.0 && x == std::floor(x); }

// Lanczos approximation, g = 7, n = 9; valid for Re(w) >= 0.5.
cplx lanczos(cplx w) {
  static constexpr std::array<double, 9> p = {
      0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
      771.32342877765313,   -176.61502916214059,   12.507343278686905,
      -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};
  w -= 1.0;
  cplx x = p[0];
  for (int i = 1; i < 9; ++i) x += p[i] / (w + double(i));
  cplx t = w + 7.5;
  return std::sqrt(2.0 * kPi) * std::pow(t, w + 0.5) * std::exp(-t) * x;
}

struct ValDer {
  cplx f;
  cplx df;
};

bool small(cplx t, cplx scale) { return std::abs(t) <= kTol * std::abs(scale) + 1e-300; }

// Sum_n (a)_n (b)_n / n! * rgamma(c+n) * w^n and its derivative.
ValDer regSeries(cplx a, cplx b, cplx c, cplx w) {
  cplx rg = rgamma(c);
  cplx coef = 1.0;
  cplx wn = 1.0;
  ValDer out{coef * rg, 0.0};
  int quiet = 0;
  for (int n = 0; n < 5000; ++n) {
    cplx nn = double(n);
    coef *= (a + nn) * (b + nn) / double(n + 1);
    cplx cn = c + nn;
    rg = (cn == cplx(0.0) || rg == cplx(0.0)) ? rgamma(c + double(n + 1)) : rg / cn;
    cplx dterm = double(n + 1) * coef * rg * wn;
    wn *= w;
    cplx term = coef * rg * wn;
    out.f += term;
    out.df += dterm;
    if (coef == cplx(0.0)) break;
    if (n + c.real() < 1.0) continue;  // still inside the zeros of rgamma at c+n
    if (small(term, out.f) && small(dterm, out.df)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  return out;
}

// Gamma(b) F(a,b;2b;w) / Gamma(2b) and its derivative.
ValDer halfCSeries(double a, double b, cplx w) {
  double coef = std::sqrt(kPi) * std::pow(2.0, 1.0 - 2.0 * b) * rgamma(b + 0.5);
  cplx wn = 1.0;
  ValDer out{coef, 0.0};
  int quiet = 0;
  for (int n = 0; n < 5000; ++n) {
    double num = b + n;
    double den = 2.0 * b + n;
    double ratio = (num == 0.0 && den == 0.0) ? 0.5 : num / den;
    coef *= (a + n) * ratio / double(n + 1);
    cplx dterm = double(n + 1) * coef * wn;
    wn *= w;
    cplx term = coef * wn;
    out.f += term;
    out.df += dterm;
    if (coef == 0.0) break;
    if (small(term, out.f) && small(dterm, out.df)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
  }
  return out;
}

// One Taylor step of w(1-w)F'' + [c-(a+b+1)w]F' - abF = 0 from z0 to z0+h.
ValDer taylorStep(cplx a, cplx b, cplx c, cplx z0, ValDer y, cplx h) {
  const cplx p0 = z0 * (1.0 - z0);
  const cplx p1 = 1.0 - 2.0 * z0;
  const double p2 = -1.0;
  const cplx q0 = c - (a + b + 1.0) * z0;
  const cplx q1 = -(a + b + 1.0);
  const cplx r = -a * b;
  cplx g0 = y.f;
  cplx g1 = y.df * h;
  cplx f = g0 + g1;
  cplx dsum = g1;
  const cplx h2 = h * h;
  int quiet = 0;
  for (int n = 0; n < 2000; ++n) {
    double dn = n;
    cplx g2 = -((p1 * dn + q0) * (dn + 1.0) * g1 * h + (p2 * dn * (dn - 1.0) + q1 * dn + r) * g0 * h2) /
              (p0 * (dn + 2.0) * (dn + 1.0));
    f += g2;
    dsum += (dn + 2.0) * g2;
    if (small(g2, f) && small(g1, f)) {
      if (++quiet >= 2) break;
    } else {
      quiet = 0;
    }
    g0 = g1;
    g1 = g2;
  }
  return {f, dsum / h};
}

double distToSingular(cplx z) { return std::min(std::abs(z), std::abs(z - 1.0)); }

ValDer integrateSegment(cplx a, cplx b, cplx c, cplx from, cplx to, ValDer y) {
  cplx cur = from;
  for (int guard = 0; guard < 100000; ++guard) {
    cplx rem = to - cur;
    double len = std::abs(rem);
    if (len == 0.0) break;
    double step = 0.5 * distToSingular(cur);
    if (step >= len) {
      y = taylorStep(a, b, c, cur, y, rem);
      break;
    }
    cplx h = rem * (step / len);
    y = taylorStep(a, b, c, cur, y, h);
    cur += h;
  }
  return y;
}

// Analytic continuation of the solution with data y0 at w0 = 0.5 i s to w, staying in the half plane of s.
cplx continueToTarget(cplx a, cplx b, cplx c, cplx w, int side, ValDer y0) {
  const double s = side >= 0 ? 1.0 : -1.0;
  const cplx w0(0.0, 0.5 * s);
  ValDer y = y0;
  if (s * w.imag() >= 0.5) {
    y = integrateSegment(a, b, c, w0, w, y);
  } else {
    cplx corner(w.real(), 0.5 * s);
    y = integrateSegment(a, b, c, w0, corner, y);
    y = integrateSegment(a, b, c, corner, w, y);
  }
  return y.f;
}

int sideOf(cplx w, int cutSide) {
  if (w.imag() > 0.0) return 1;
  if (w.imag() < 0.0) return -1;
  return cutSide >= 0 ? 1 : -1;
}

}  // namespace

cplx minusOnePow(double w, int branchSign) { return std::exp(cplx(0.0, -kPi * w * branchSign)); }

double gammaFn(double x) {
  if (isNonPositiveInteger(x)) throw PoleError("Gamma pole at w = " + std::to_string(x));
  return std::tgamma(x);
}

cplx gammaFn(cplx w) {
  if (w.imag() == 0.0) return gammaFn(w.real());
  if (w.real() < 0.5) return kPi / (std::sin(kPi * w) * lanczos(1.0 - w));
  return lanczos(w);
}

double rgamma(double x) {
  if (isNonPositiveInteger(x)) return 0.0;
  if (x > 171.0) return 0.0;
  return 1.0 / std::tgamma(x);
}

cplx rgamma(cplx w) {
  if (w.imag() == 0.0) return rgamma(w.real());
  return 1.0 / gammaFn(w);
}

double besselJSeries(double nu, double x) {
  if (isNonPositiveInteger(nu) && nu != 0.0) {
    int n = int(-nu);
    return (n % 2 ? -1.0 : 1.0) * besselJSeries(-nu, x);
  }
  const double half = 0.5 * x;
  double term = std::pow(half, nu) * rgamma(nu + 1.0);
  double sum = term;
  const double q = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= q / (k * (k + nu));
    sum += term;
    if (k > half && std::abs(term) <= kTol * std::abs(sum)) break;
  }
  return sum;
}

void besselHankelAsymptotic(double nu, double x, double& j, double& y) {
  const double mu = 4.0 * nu * nu;
  double p = 1.0, q = 0.0, ak = 1.0, prev = 1e300;
  for (int k = 1; k < 200; ++k) {
    double odd = 2.0 * k - 1.0;
    ak *= (mu - odd * odd) / (k * 8.0 * x);
    double mag = std::abs(ak);
    if (mag > prev) break;
    prev = mag;
    int m = k % 4;
    if (m == 1) q += ak;
    else if (m == 2) p -= ak;
    else if (m == 3) q -= ak;
    else p += ak;
    if (mag < 1e-17) break;
  }
  const double chi = x - (0.5 * nu + 0.25) * kPi;
  const double pre = std::sqrt(2.0 / (kPi * x));
  const double c = std::cos(chi), s = std::sin(chi);
  j = pre * (p * c - q * s);
  y = pre * (p * s + q * c);
}

namespace {

constexpr double kCrossover = 12.0;
constexpr double kNuMax = 5.0;

void checkBesselArgs(double nu, double x, const char* who) {
  if (!(x > 0.0)) throw DomainError(std::string(who) + ": argument must be positive");
  if (!(nu >= -1.0 - 1e-12 && nu <= kNuMax + 1e-12))
    throw DomainError(std::string(who) + ": order outside [-1, 5]");
}

double jAnyOrder(double nu, double x) {
  if (x >= kCrossover) {
    double j, y;
    besselHankelAsymptotic(nu, x, j, y);
    return j;
  }
  return besselJSeries(nu, x);
}

double yIntegerSeries(int n, double x) {
  const double half = 0.5 * x;
  double finite = 0.0;
  if (n > 0) {
    double fact = std::tgamma(double(n));  // (n-1)!
    double pw = std::pow(half, -n);
    for (int k = 0; k < n; ++k) {
      finite += fact * pw;
      if (k + 1 < n) {
        fact *= 1.0 / double((n - k - 1) * (k + 1));
        pw *= half * half;
      }
    }
  }
  double psiA = -kEuler;  // psi(k+1)
  double psiB = -kEuler;  // psi(n+k+1)
  for (int m = 1; m <= n; ++m) psiB += 1.0 / m;
  double term = std::pow(half, n) / std::tgamma(double(n + 1));
  double sum = (psiA + psiB) * term;
  const double q = -half * half;
  for (int k = 1; k < 500; ++k) {
    term *= q / (double(k) * double(n + k));
    psiA += 1.0 / k;
    psiB += 1.0 / (n + k);
    double t = (psiA + psiB) * term;
    sum += t;
    if (k > half && std::abs(t) <= kTol * std::abs(sum)) break;
  }
  return -finite / kPi + (2.0 / kPi) * std::log(half) * besselJSeries(n, x) - sum / kPi;
}

}  // namespace

double besselJ(double nu, double x) {
  checkBesselArgs(nu, x, "besselJ");
  return jAnyOrder(nu, x);
}

namespace {

double yAnyOrder(double nu, double x) {
  if (x >= kCrossover) {
    double j, y;
    besselHankelAsymptotic(nu, x, j, y);
    return y;
  }
  double rn = std::round(nu);
  if (std::abs(nu - rn) < 1e-12) {
    int n = int(rn);
    if (n < 0) return (n % 2 ? -1.0 : 1.0) * yIntegerSeries(-n, x);
    return yIntegerSeries(n, x);
  }
  return (besselJSeries(nu, x) * std::cos(nu * kPi) - besselJSeries(-nu, x)) / std::sin(nu * kPi);
}

}  // namespace

double besselY(double nu, double x) {
  checkBesselArgs(nu, x, "besselY");
  return yAnyOrder(nu, x);
}

double besselJPrime(double nu, double x) {
  checkBesselArgs(nu, x, "besselJPrime");
  return (nu / x) * jAnyOrder(nu, x) - jAnyOrder(nu + 1.0, x);
}

double besselYPrime(double nu, double x) {
  checkBesselArgs(nu, x, "besselYPrime");
  return (nu / x) * yAnyOrder(nu, x) - yAnyOrder(nu + 1.0, x);
}

double besselK(double nu, double x) {
  checkBesselArgs(nu, x, "besselK");
  nu = std::abs(nu);
  // K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt by the trapezoid rule, which converges
  // geometrically for this analytic, doubly-exponentially decaying integrand.
  const double h = std::min(0.1, 0.5 / std::sqrt(x));
  double sum = 0.5 * std::exp(-x);
  for (int k = 1; k < 200000; ++k) {
    double t = k * h;
    double e = -x * std::cosh(t);
    double f = 0.5 * (std::exp(e + nu * t) + std::exp(e - nu * t));
    sum += f;
    if (f <= 1e-18 * sum && x * std::sinh(t) > nu) break;
  }
  return h * sum;
}

cplx hyp2f1RegSeries(cplx a, cplx b, cplx c, cplx w) {
  if (std::abs(w) >= 1.0) throw DomainError("hyp2f1RegSeries: |w| must be below 1");
  return regSeries(a, b, c, w).f;
}

cplx hyp2f1Reg(cplx a, cplx b, cplx c, cplx w, int cutSide) {
  if (w == cplx(0.0)) return rgamma(c);
  if (w == cplx(1.0)) {
    cplx e = c - a - b;
    if (e.real() > 0.0) return gammaFn(e) * rgamma(c - a) * rgamma(c - b);
    throw SingularPointError("hyp2f1Reg: w = 1 with Re(c-a-b) <= 0");
  }
  if (std::abs(w) <= 0.5) return regSeries(a, b, c, w).f;
  int side = sideOf(w, cutSide);
  ValDer y0 = regSeries(a, b, c, cplx(0.0, 0.5 * side));
  return continueToTarget(a, b, c, w, side, y0);
}

cplx hyp2f1Reg(const Hyp2F1Params& p, int cutSide) { return hyp2f1Reg(p.a, p.b, p.c, p.w, cutSide); }

cplx hyp2f1HalfC(double a, double b, cplx w, int cutSide) {
  if (!(b > -0.5)) throw DomainError("hyp2f1HalfC: requires b > -1/2");
  if (std::abs(w) <= 0.5) return halfCSeries(a, b, w).f;
  if (w == cplx(1.0)) throw SingularPointError("hyp2f1HalfC: w = 1");
  int side = sideOf(w, cutSide);
  ValDer y0 = halfCSeries(a, b, cplx(0.0, 0.5 * side));
  return continueToTarget(a, b, 2.0 * b, w, side, y0);
}

}  // namespace pads::specfun
