#include <cmath>

#include "doctest.h"
#include "pads/errors.hpp"
#include "pads/modes.hpp"
#include "pads/specfun.hpp"

using namespace pads;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("effective mass and order") {
  const ModelParams a = deriveParams(3, 0.0, 0.0);
  CHECK(a.msq == doctest::Approx(2.0));
  CHECK(a.nu == doctest::Approx(1.5));
  CHECK(deriveParams(3, 0.0, 1.0 / 6).nu == doctest::Approx(0.5));
  const ModelParams bf = paramsFromNu(4, 0.0);
  CHECK(bf.msq == doctest::Approx(-0.25));
  CHECK(bf.nu == 0.0);
  CHECK_THROWS_AS(deriveParams(3, -3.0, 0.0), ImaginaryOrderError);
  CHECK_THROWS_AS(deriveParams(1, 0.0, 0.0), DomainError);
}

TEST_CASE("boundary conditions") {
  const BoundaryCondition d = BoundaryCondition::dirichlet();
  CHECK(d.isDirichlet());
  CHECK_FALSE(d.cAlpha());
  CHECK(d.label() == "pi");
  const BoundaryCondition r = BoundaryCondition::fromAlpha(2 * kPi / 3);
  CHECK(r.a() == -0.5);
  CHECK(*r.cAlpha() == doctest::Approx(-1.0 / std::sqrt(3.0)));
  CHECK(r.admissibleForGroundState(0.3));
  CHECK_FALSE(r.admissibleForGroundState(1.2));
  CHECK_FALSE(BoundaryCondition::fromAlpha(kPi / 4).admissibleForGroundState(0.3));
  CHECK_THROWS_AS(BoundaryCondition::fromAlpha(0.0), DomainError);
  CHECK_THROWS_AS(BoundaryCondition::fromAlpha(3.5), DomainError);
}

TEST_CASE("fundamental solutions") {
  const RadialProfile s = phi1(0.5, 1.0);
  for (double z : {0.3, 1.0, 2.5}) CHECK(s(z) == doctest::Approx(std::sin(z)).epsilon(1e-13));
  // phi1 ~ z^{nu + 1/2}
  const RadialProfile p = phi1(0.3, 2.0);
  const double slope = std::log(p(2e-5) / p(1e-5)) / std::log(2.0);
  CHECK(slope == doctest::Approx(0.8).epsilon(1e-6));
  const RadialProfile c = phi2(0.5, 1.0);
  for (double z : {0.3, 1.0}) CHECK(c(z) == doctest::Approx(-std::cos(z)).epsilon(1e-13));
  const RadialProfile l = phi2(0.0, 1.0);
  CHECK(l(0.7) == doctest::Approx(-std::sqrt(kPi / 2 * 0.7) * specfun::besselY(0.0, 0.7)).epsilon(1e-13));
  CHECK_THROWS_AS(phi2(1.2, 1.0), NotSquareIntegrableError);
  CHECK_THROWS_AS(phi1(0.3, 0.0), DomainError);
}

TEST_CASE("Wronskian of the fundamental pair") {
  for (double nu : {0.1, 0.5, 0.8}) {
    for (double z : {1e-3, 0.5, 3.0}) CHECK(wronskianAt(phi1(nu, 1.3), phi2(nu, 1.3), z) == doctest::Approx(std::sin(nu * kPi)).epsilon(1e-10));
  }
  CHECK(wronskianAt(phi1(0.0, 2.0), phi2(0.0, 2.0), 0.4) == doctest::Approx(-1.0).epsilon(1e-10));
  // finite-difference path
  RadialProfile a = phi1(0.5, 1.0), b = phi2(0.5, 1.0);
  a.deriv = {};
  CHECK(wronskianAt(a, b, 0.8) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("boundary functional") {
  const BoundaryCondition robin = BoundaryCondition::fromAlpha(2 * kPi / 3);
  for (double nu : {0.25, 0.5, 0.75}) {
    CHECK(std::abs(robinFunctional(psi(robin, nu, 1.7), robin, nu)) < kRobinTol);
    CHECK(std::abs(robinFunctional(psi(BoundaryCondition::neumann(), nu, 0.6), BoundaryCondition::neumann(), nu)) <
          kRobinTol);
  }
  const BoundaryCondition dir = BoundaryCondition::dirichlet();
  CHECK(std::abs(robinFunctional(phi1(0.3, 1.0), dir, 0.3)) < kRobinTol);
  CHECK(robinFunctional(phi2(0.3, 1.0), dir, 0.3) == doctest::Approx(std::sin(0.3 * kPi)).epsilon(1e-8));
}

TEST_CASE("mode profile and normalisation") {
  const BoundaryCondition dir = BoundaryCondition::dirichlet();
  CHECK(psiBare(dir, 0.4, 1.5, 0.7) == doctest::Approx(-specfun::besselJ(0.4, 1.05)).epsilon(1e-14));
  CHECK(normDenominator(BoundaryCondition::neumann(), 0.3, 2.0) == doctest::Approx(std::pow(2.0, 1.2)));
  CHECK(normDenominator(dir, 0.3, 2.0) == doctest::Approx(1.0));
  const BoundaryCondition robin = BoundaryCondition::fromAlpha(2 * kPi / 3);
  for (double q = 0.01; q < 50.0; q *= 1.7) CHECK(normDenominator(robin, 0.6, q) > 0.0);
  CHECK_THROWS_AS(psi(robin, 1.5, 1.0), NotSquareIntegrableError);
  CHECK_NOTHROW(psi(dir, 1.5, 1.0));
}

TEST_CASE("bound state") {
  const BoundaryCondition c1 = BoundaryCondition::fromAlpha(kPi / 4);
  REQUIRE(boundStateKappa(c1, 0.5));
  CHECK(*boundStateKappa(c1, 0.5) == doctest::Approx(1.0));
  const auto prof = boundStateProfile(c1, 0.5);
  REQUIRE(prof);
  CHECK((*prof)(0.8) == doctest::Approx(std::sqrt(kPi / 1.6) * std::exp(-0.8)).epsilon(1e-12));
  const double h = 1e-5;
  CHECK(prof->deriv(0.8) == doctest::Approx(((*prof)(0.8 + h) - (*prof)(0.8 - h)) / (2 * h)).epsilon(1e-7));
  CHECK_FALSE(boundStateProfile(BoundaryCondition::fromAlpha(3 * kPi / 4), 0.5));
  CHECK_FALSE(boundStateProfile(BoundaryCondition::dirichlet(), 0.5));
  const auto k0 = boundStateKappa(BoundaryCondition::neumann(), 0.0);
  REQUIRE(k0);
  CHECK(*k0 == doctest::Approx(1.0));
}
