#include <cmath>

#include "doctest.h"
#include "pads/errors.hpp"
#include "pads/smearing.hpp"

using namespace pads;

TEST_CASE("bump profile") {
  const Profile1D b = Profile1D::bump(0.5, 2.0);
  CHECK(b.value(0.5) == 1.0);
  CHECK(b.value(1.5) == doctest::Approx(std::pow(0.75, 8)));
  CHECK(b.value(2.5) == 0.0);
  CHECK(b.value(-1.6) == 0.0);
  CHECK(b.lo() == -1.5);
  CHECK(b.hi() == 2.5);
  const double h = 1e-4;
  for (double x : {-0.9, 0.1, 1.7}) {
    CHECK(b.value(x, 1) == doctest::Approx((b.value(x + h) - b.value(x - h)) / (2 * h)).epsilon(1e-7));
    CHECK(b.value(x, 2) == doctest::Approx((b.value(x + h, 1) - b.value(x - h, 1)) / (2 * h)).epsilon(1e-7));
  }
  CHECK_THROWS_AS(b.value(0.0, 3), DomainError);
  CHECK_THROWS_AS(Profile1D::bump(0.0, 0.0), DomainError);
}

TEST_CASE("plateau profile") {
  const Profile1D p = Profile1D::plateau(0.4, 1.0);
  CHECK(p.value(0.1) == 1.0);
  CHECK(p.value(0.4) == 1.0);
  CHECK(p.value(1.0) == 0.0);
  CHECK(p.value(0.7) > 0.0);
  CHECK(p.value(0.7) < 1.0);
  CHECK(p.breaks() == std::vector<double>{0.4});
  const double h = 1e-4;
  for (double x : {0.5, 0.7, 0.95}) {
    CHECK(p.value(x, 1) == doctest::Approx((p.value(x + h) - p.value(x - h)) / (2 * h)).epsilon(1e-6));
    CHECK(p.value(x, 2) == doctest::Approx((p.value(x + h, 1) - p.value(x - h, 1)) / (2 * h)).epsilon(1e-5));
  }
  CHECK_THROWS_AS(Profile1D::plateau(1.0, 0.5), DomainError);
}

TEST_CASE("test-function family") {
  const ModelParams p = paramsFromNu(2, 0.3);
  const BoundaryCondition bc = BoundaryCondition::fromAlpha(2.0);
  const TestFunction f = TestFunction::member(p, bc, Profile1D::bump(0, 1), {Profile1D::bump(0, 1)},
                                              Profile1D::plateau(0.5, 1), Profile1D::plateau(0.5, 1));
  const double z = 0.2;
  CHECK(f(0.0, {0.0}, z) == doctest::Approx(std::cos(2.0) * std::pow(z, 0.8) + std::sin(2.0) * std::pow(z, 0.2)));
  CHECK(f.zLo() == 0.0);
  CHECK(f.zHi() == 1.0);
  CHECK(f.tLo() == -1.0);
  CHECK_THROWS_AS(TestFunction::member(p, bc, Profile1D::bump(0, 1), {}, Profile1D::plateau(0.5, 1),
                                       Profile1D::plateau(0.5, 1)),
                  DomainError);
}

TEST_CASE("P acts as the wave operator") {
  const ModelParams p = paramsFromNu(2, 0.3);
  const TestFunction f = TestFunction::member(p, BoundaryCondition::neumann(), Profile1D::bump(0.1, 0.8),
                                              {Profile1D::bump(-0.2, 0.9)}, Profile1D::plateau(0.3, 1.0),
                                              Profile1D::plateau(0.4, 1.1));
  const TestFunction Pf = f.applyP(p);
  const double h = 1e-3, t = 0.2, x = 0.1, z = 0.6;
  auto d2 = [&](double dt, double dx, double dz) {
    return (f(t + dt, {x + dx}, z + dz) - 2 * f(t, {x}, z) + f(t - dt, {x - dx}, z - dz)) / (h * h);
  };
  const double want = -d2(h, 0, 0) + d2(0, h, 0) + d2(0, 0, h) - p.msq / (z * z) * f(t, {x}, z);
  CHECK(Pf(t, {x}, z) == doctest::Approx(want).epsilon(1e-5));
  CHECK_THROWS_AS(Pf.applyP(p), DomainError);
}

TEST_CASE("integration and smearing") {
  const double bumpIntegral = 0.5990767402532109;  // int (1 - s^2)^8 over [-1, 1]
  const TestFunction f = TestFunction::interior(Profile1D::bump(0, 1), {Profile1D::bump(2, 1)}, Profile1D::bump(2, 1));
  CHECK(integrate(f) == doctest::Approx(std::pow(bumpIntegral, 3)).epsilon(1e-12));
  const TestFunction g = f.scaled(2.0) + f;
  CHECK(integrate(g) == doctest::Approx(3 * std::pow(bumpIntegral, 3)).epsilon(1e-12));

  const KernelFn unit = [](const PairGeometry&, double) { return cplx(1.0); };
  const TestFunction h = TestFunction::interior(Profile1D::bump(1, 0.5), {Profile1D::bump(0, 0.7)}, Profile1D::bump(1.5, 0.4));
  const SmearResult s = smear2(unit, f, h, QuadratureSpec{});
  const double exact = integrate(f) * integrate(h);
  CHECK(s.doubledValue.real() == doctest::Approx(exact).epsilon(1e-8));
  CHECK(std::abs(s.value.real() - exact) <= 1.5 * s.selfConvergence());
  CHECK(s.selfConvergence() < 1e-3 * exact);

  const ModelParams p = paramsFromNu(2, 0.25);
  const KernelFn G = PropagatorModel(p, BoundaryCondition::dirichlet()).propagatorFn();
  QuadratureSpec q;
  q.doubled = false;
  const cplx fh = smear2(G, f, h, q).value, hf = smear2(G, h, f, q).value;
  CHECK(std::abs(fh) > 0.0);
  CHECK(std::abs(fh + hf) < 1e-10 * std::abs(fh));
}

TEST_CASE("radial nodes") {
  const RadialGrid g = radialNodes(0.0, 2.0, 16);
  double s = 0.0;
  for (std::size_t i = 0; i < g.z.size(); ++i) s += g.w[i] * std::sqrt(g.z[i]);
  CHECK(s == doctest::Approx(2.0 / 3.0 * std::pow(2.0, 1.5)).epsilon(1e-12));
  const RadialGrid a = radialNodes(1.0, 3.0, 8);
  double t = 0.0;
  for (std::size_t i = 0; i < a.z.size(); ++i) t += a.w[i] * a.z[i] * a.z[i];
  CHECK(t == doctest::Approx(26.0 / 3.0).epsilon(1e-13));
}
