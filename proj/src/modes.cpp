#include "pads/modes.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>

#include "pads/errors.hpp"
#include "pads/specfun.hpp"

namespace pads {

namespace {
constexpr double kPi = std::numbers::pi;
const double kC = std::sqrt(kPi / 2.0);

// d/dz of sqrt(z) F(q z) given F and F'.
double sqrtZDeriv(double z, double q, double F, double Fp) { return F / (2.0 * std::sqrt(z)) + std::sqrt(z) * q * Fp; }
}  // namespace

ModelParams deriveParams(int d, double m0sq, double xi) {
  if (d < 2) throw DomainError("dimension d must be at least 2");
  const double curvature = -double(d) * (d + 1);
  const double msq = m0sq + (xi - (d - 1.0) / (4.0 * d)) * curvature;
  if (msq < -0.25) throw ImaginaryOrderError("effective mass below the bound -1/4 gives imaginary order");
  return {d, m0sq, xi, msq, 0.5 * std::sqrt(std::max(0.0, 1.0 + 4.0 * msq))};
}

ModelParams paramsFromNu(int d, double nu) {
  if (!(nu >= 0.0)) throw DomainError("order nu must be non-negative");
  ModelParams p = deriveParams(d, nu * nu - 0.25, (d - 1.0) / (4.0 * d));
  p.nu = nu;
  return p;
}

BoundaryCondition BoundaryCondition::fromAlpha(double alpha) {
  if (!(alpha > 0.0 && alpha <= kPi + 1e-14)) throw DomainError("alpha must lie in (0, pi]");
  auto near = [alpha](double target) { return std::abs(alpha - target) <= 1e-14; };
  if (near(kPi)) return {kPi, -1.0, 0.0};
  if (near(kPi / 2)) return {kPi / 2, 0.0, 1.0};
  if (near(2 * kPi / 3)) return {2 * kPi / 3, -0.5, std::sqrt(3.0) / 2};
  if (near(3 * kPi / 4)) return {3 * kPi / 4, -std::sqrt(0.5), std::sqrt(0.5)};
  if (near(kPi / 4)) return {kPi / 4, std::sqrt(0.5), std::sqrt(0.5)};
  return {alpha, std::cos(alpha), std::sin(alpha)};
}

std::optional<double> BoundaryCondition::cAlpha() const {
  if (b_ == 0.0) return std::nullopt;
  return a_ / b_;
}

bool BoundaryCondition::admissibleForGroundState(double nu) const {
  if (nu > 0.0 && nu < 1.0) return a_ <= 0.0 && b_ >= 0.0;
  if (nu >= 1.0) return isDirichlet();
  return false;
}

std::string BoundaryCondition::label() const {
  if (b_ == 0.0) return "pi";
  if (a_ == 0.0) return "pi/2";
  if (a_ == -0.5) return "2pi/3";
  std::ostringstream os;
  os.precision(17);
  os << alpha_;
  return os.str();
}

RadialProfile phi1(double nu, double q) {
  if (!(q > 0.0)) throw DomainError("phi1 requires q > 0");
  const double pre = kC * std::pow(q, -nu);
  return {[=](double z) { return pre * std::sqrt(z) * specfun::besselJ(nu, q * z); }, nu, q, ProfileKind::phi1,
          [=](double z) {
            return pre * sqrtZDeriv(z, q, specfun::besselJ(nu, q * z), specfun::besselJPrime(nu, q * z));
          }};
}

RadialProfile phi2(double nu, double q) {
  if (!(q > 0.0)) throw DomainError("phi2 requires q > 0");
  if (nu >= 1.0) throw NotSquareIntegrableError("second fundamental solution is not square integrable for nu >= 1");
  if (nu == 0.0) {
    const double lq = (2.0 / kPi) * std::log(q);
    return {[=](double z) {
              return -kC * std::sqrt(z) * (specfun::besselY(0.0, q * z) - lq * specfun::besselJ(0.0, q * z));
            },
            nu, q, ProfileKind::phi2, [=](double z) {
              const double x = q * z;
              return -kC * sqrtZDeriv(z, q, specfun::besselY(0.0, x) - lq * specfun::besselJ(0.0, x),
                                      specfun::besselYPrime(0.0, x) - lq * specfun::besselJPrime(0.0, x));
            }};
  }
  const double pre = -kC * std::pow(q, nu);
  return {[=](double z) { return pre * std::sqrt(z) * specfun::besselJ(-nu, q * z); }, nu, q, ProfileKind::phi2,
          [=](double z) {
            return pre * sqrtZDeriv(z, q, specfun::besselJ(-nu, q * z), specfun::besselJPrime(-nu, q * z));
          }};
}

double wronskianAt(const RadialProfile& f, const RadialProfile& g, double z) {
  if (f.deriv && g.deriv) return f(z) * g.deriv(z) - g(z) * f.deriv(z);
  const double h = 1e-6 * z;
  const double fp = (f(z + h) - f(z - h)) / (2.0 * h);
  const double gp = (g(z + h) - g(z - h)) / (2.0 * h);
  return f(z) * gp - g(z) * fp;
}

double robinFunctional(const RadialProfile& psiProfile, const BoundaryCondition& bc, double nu) {
  const RadialProfile p1 = phi1(nu, psiProfile.q);
  std::optional<RadialProfile> p2;
  if (bc.b() != 0.0) p2 = phi2(nu, psiProfile.q);
  const std::array<double, 3> zs = {1e-3, 1e-4, 1e-5};
  std::array<double, 3> v{};
  double noise = 0.0;
  for (int i = 0; i < 3; ++i) {
    const double z = zs[i];
    const double w1 = wronskianAt(psiProfile, p1, z);
    v[i] = bc.a() * w1;
    // rounding in f g' - g f' scales with the individual products
    double terms = std::abs(bc.a()) * (std::abs(w1) + 1.0);
    if (p2) {
      const double w2 = wronskianAt(psiProfile, *p2, z);
      v[i] += bc.b() * w2;
      const double gp = p2->deriv ? p2->deriv(z) : 0.0;
      terms += std::abs(bc.b()) * std::abs(psiProfile(z) * gp);
    }
    noise = std::max(noise, 1e-13 * terms);
  }
  const double d1 = v[1] - v[0], d2 = v[2] - v[1];
  const double scale = std::max({1.0, std::abs(v[0]), std::abs(v[2])});
  if (std::abs(d2) > std::max(1e-8 * scale, noise) && std::abs(d2) > std::abs(d1))
    throw ExtrapolationError("boundary functional ladder does not converge as z -> 0");
  // Linear extrapolation in z on the two finest points.
  return v[2] - d2 * zs[2] / (zs[1] - zs[2]);
}

double psiBare(const BoundaryCondition& bc, double nu, double q, double z) {
  const double x = q * z;
  if (nu == 0.0) {
    const double a = bc.a() + bc.b() * (2.0 / kPi) * std::log(q);
    return a * specfun::besselJ(0.0, x) - bc.b() * specfun::besselY(0.0, x);
  }
  double v = bc.a() * specfun::besselJ(nu, x);
  if (bc.b() != 0.0) v -= bc.b() * std::pow(q, 2.0 * nu) * specfun::besselJ(-nu, x);
  return v;
}

namespace {

// d/dx of psiBare at x = q z.
double psiBarePrime(const BoundaryCondition& bc, double nu, double q, double z) {
  const double x = q * z;
  if (nu == 0.0) {
    const double a = bc.a() + bc.b() * (2.0 / kPi) * std::log(q);
    return a * specfun::besselJPrime(0.0, x) - bc.b() * specfun::besselYPrime(0.0, x);
  }
  double v = bc.a() * specfun::besselJPrime(nu, x);
  if (bc.b() != 0.0) v -= bc.b() * std::pow(q, 2.0 * nu) * specfun::besselJPrime(-nu, x);
  return v;
}

}  // namespace

RadialProfile psi(const BoundaryCondition& bc, double nu, double q) {
  if (!(q > 0.0)) throw DomainError("psi requires q > 0");
  if (nu >= 1.0 && !bc.isDirichlet())
    throw NotSquareIntegrableError("only the Dirichlet profile exists for nu >= 1");
  return {[=](double z) { return std::sqrt(z) * psiBare(bc, nu, q, z); }, nu, q, ProfileKind::psi,
          [=](double z) { return sqrtZDeriv(z, q, psiBare(bc, nu, q, z), psiBarePrime(bc, nu, q, z)); }};
}

double normDenominator(const BoundaryCondition& bc, double nu, double q) {
  const double a = bc.a(), b = bc.b();
  if (nu == 0.0) {
    const double s = a + b * (2.0 / kPi) * std::log(q);
    return s * s + b * b;
  }
  const double q2 = std::pow(q, 2.0 * nu);
  return a * a - 2.0 * a * b * q2 * std::cos(nu * kPi) + b * b * q2 * q2;
}

std::optional<double> boundStateKappa(const BoundaryCondition& bc, double nu) {
  const auto c = bc.cAlpha();
  if (!c) return std::nullopt;
  if (nu == 0.0) return std::exp(-kPi * *c / 2.0);
  if (nu > 0.0 && nu < 1.0 && *c > 0.0) return std::pow(*c, 1.0 / (2.0 * nu));
  return std::nullopt;
}

std::optional<RadialProfile> boundStateProfile(const BoundaryCondition& bc, double nu) {
  const auto kappa = boundStateKappa(bc, nu);
  if (!kappa) return std::nullopt;
  const double k = *kappa;
  return RadialProfile{[=](double z) { return specfun::besselK(nu, k * z); }, nu, k, ProfileKind::boundK,
                       [=](double z) {
                         return -k * (specfun::besselK(nu - 1.0, k * z) + nu / (k * z) * specfun::besselK(nu, k * z));
                       }};
}

}  // namespace pads
