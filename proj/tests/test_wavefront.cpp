#include <cmath>

#include "doctest.h"
#include "pads/errors.hpp"
#include "pads/wavefront.hpp"

using namespace pads;
using namespace pads::wavefront;

namespace {
constexpr double kPi = 3.14159265358979323846;

std::vector<double> negated(std::vector<double> k) {
  for (double& v : k) v = -v;
  return k;
}
}  // namespace

TEST_CASE("covector helpers") {
  CHECK(mirrored({1, 2, 3}) == std::vector<double>{1, 2, -3});
  CHECK(futurePointing({-1, 0, 1}));
  CHECK_FALSE(futurePointing({1, 0, 1}));
  CHECK_THROWS(CovectorPoint(SpacetimePoint(0, {0}, 1), {0, 0, 0}));
}

TEST_CASE("direct null pair") {
  const SpacetimePoint x(0, {0}, 1), xp(1, {0}, 2);
  const auto c = connectNull(x, xp);
  REQUIRE(c);
  // the second covector enters with the opposite sign
  const CovectorPoint a(x, c->emissionCovector), b(xp, negated(c->arrivalCovector));
  const CommutatorRelation r = wfPredicateCommutator(a, b);
  CHECK(r.direct);
  CHECK_FALSE(r.reflected);
  CHECK(wfPredicateState(a, b) == futurePointing(c->emissionCovector));

  const CovectorPoint na(x, negated(c->emissionCovector)), nb(xp, c->arrivalCovector);
  CHECK(wfPredicateCommutator(na, nb).direct);
  CHECK(wfPredicateState(na, nb) != wfPredicateState(a, b));

  // joint rescaling keeps the relation, rescaling one side breaks it
  std::vector<double> k3 = c->emissionCovector, kp3 = negated(c->arrivalCovector);
  for (double& v : k3) v *= 3.0;
  for (double& v : kp3) v *= 3.0;
  CHECK(wfPredicateCommutator(CovectorPoint(x, k3), CovectorPoint(xp, kp3)).direct);
  CHECK_FALSE(wfPredicateCommutator(a, CovectorPoint(xp, kp3)).direct);
  CHECK_FALSE(wfPredicateCommutator(a, CovectorPoint(xp, {1, 0.5, -0.2})).direct);
  CHECK_FALSE(wfPredicateCommutator(a, CovectorPoint(xp, c->arrivalCovector)).direct);
}

TEST_CASE("reflected null pair") {
  const SpacetimePoint x(0, {0}, 1), xp(2, {0}, 1);
  const auto c = connectNull(x, xp);
  REQUIRE(c);
  REQUIRE(c->kind == NullConnection::Kind::reflected);
  const CommutatorRelation r =
      wfPredicateCommutator(CovectorPoint(x, c->emissionCovector), CovectorPoint(xp, negated(c->arrivalCovector)));
  CHECK(r.reflected);
  CHECK_FALSE(r.direct);
  // the arrival covector of the image ray is the mirror of the emission one here
  CHECK(c->arrivalCovector == mirrored(c->emissionCovector));
  CHECK_FALSE(
      wfPredicateCommutator(CovectorPoint(x, c->emissionCovector), CovectorPoint(xp, negated(c->emissionCovector))).reflected);
}

TEST_CASE("spacelike pairs are not related") {
  const CovectorPoint a(SpacetimePoint(0, {0}, 1), {-1, 1, 0}), b(SpacetimePoint(0, {3}, 1), {-1, 1, 0});
  const CommutatorRelation r = wfPredicateCommutator(a, b);
  CHECK_FALSE(r.direct);
  CHECK_FALSE(r.reflected);
  CHECK_FALSE(wfPredicateState(a, b));
}

TEST_CASE("singular scan along a path") {
  const PropagatorModel m(paramsFromNu(2, 0.3), BoundaryCondition::neumann());
  const ScanPath path{SpacetimePoint(0, {0}, 1), SpacetimePoint(0, {1.0}, 1), SpacetimePoint(2.5, {0.2}, 1)};
  const auto fits = singularScanAndFit(m.omegaFn(), path, {1e-13});
  REQUIRE(fits.size() >= 2);
  bool direct = false, reflected = false;
  for (const SingularFit& f : fits) {
    CHECK(f.exponent == doctest::Approx(-0.5).epsilon(0.04));
    CHECK(f.quality < kFitQualityMax);
    direct = direct || f.uStar == 1.0;
    reflected = reflected || f.uStar == 0.0;
  }
  CHECK(direct);
  CHECK(reflected);
  const KernelCoefficients k = coefficients(paramsFromNu(2, 0.3), BoundaryCondition::neumann());
  CHECK(coefficientRatio(fits) == doctest::Approx(std::abs(k.Balpha / k.Aalpha)).epsilon(1e-2));
  CHECK(path.at(0.5).t() == doctest::Approx(1.25));
}

TEST_CASE("Hadamard restriction away from the image locus") {
  const ModelParams p = paramsFromNu(2, 0.3);
  const ScanPath region{SpacetimePoint(0, {0}, 1), SpacetimePoint(0.2, {0.8}, 1.1), SpacetimePoint(0.4, {1.6}, 1.2)};
  const BoundaryCondition bc = BoundaryCondition::fromAlpha(2 * kPi / 3);
  const RestrictionReport same = hadamardRestrictionCheck(p, bc, bc, region, 60);
  CHECK(same.differenceMax == 0.0);
  CHECK(same.kernelMax > 0.0);
  const RestrictionReport other = hadamardRestrictionCheck(p, bc, BoundaryCondition::dirichlet(), region, 60);
  CHECK(other.differenceMax < other.kernelMax);
  const ScanPath crossing{SpacetimePoint(0, {0}, 1), SpacetimePoint(0, {0.5}, 1), SpacetimePoint(3.0, {0.0}, 1)};
  CHECK_THROWS_AS(hadamardRestrictionCheck(p, bc, bc, crossing, 60), RegionError);
}
