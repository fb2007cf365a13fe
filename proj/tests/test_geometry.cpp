#include <cmath>

#include "doctest.h"
#include "pads/errors.hpp"
#include "pads/geometry.hpp"

using namespace pads;

namespace {
constexpr double kPi = 3.14159265358979323846;
}

TEST_CASE("embedding chart lands on the quadric") {
  const EmbeddingPoint o = embed(SpacetimePoint(0, {0, 0}, 1));
  REQUIRE(o.X.size() == 5);
  CHECK(o.X[0] == doctest::Approx(0.0));
  CHECK(o.X[3] == doctest::Approx(0.0));
  CHECK(o.X[4] == doctest::Approx(1.0));
  CHECK(quadricValue(o) == doctest::Approx(-1.0));

  const EmbeddingPoint e = embed(SpacetimePoint(1, {0, 0}, 1));
  CHECK(e.X[0] == doctest::Approx(1.0));
  CHECK(e.X[3] == doctest::Approx(0.5));
  CHECK(e.X[4] == doctest::Approx(0.5));
  CHECK(quadricValue(e) == doctest::Approx(-1.0));

  for (double z : {0.1, 0.7, 3.0}) {
    const EmbeddingPoint p = embed(SpacetimePoint(0.4, {-0.3, 1.2}, z));
    CHECK(p.X[3] + p.X[4] == doctest::Approx(1.0 / z));
    CHECK(quadricValue(p) == doctest::Approx(-1.0).epsilon(1e-12));
  }
}

TEST_CASE("points reject z <= 0 and round-trip through CSV") {
  CHECK_THROWS_AS(SpacetimePoint(0, {0}, 0.0), DomainError);
  CHECK_THROWS_AS(SpacetimePoint(0, {0}, -1.0), DomainError);
  const SpacetimePoint p(0.25, {1.5, -2.0}, 0.75);
  const SpacetimePoint q = SpacetimePoint::fromCsv(p.toCsv());
  CHECK(q.t() == p.t());
  CHECK(q.x() == p.x());
  CHECK(q.z() == p.z());
  CHECK(p.dim() == 4);
  CHECK_THROWS_AS(SpacetimePoint::fromCsv("1,abc,2"), ConfigError);
}

TEST_CASE("separation classifies the worked pairs") {
  const SpacetimePoint x(0, {0}, 1);
  const SeparationReport same = separation(x, x);
  CHECK(same.sigmaM == 0.0);
  CHECK(same.u == 1.0);
  CHECK((same.classification == Classification::coincident));

  const SeparationReport refl = separation(x, SpacetimePoint(2, {0}, 1));
  CHECK(refl.sigmaM == doctest::Approx(-2.0));
  CHECK(refl.u == doctest::Approx(0.0));
  CHECK((refl.classification == Classification::reflectedNull));

  const SeparationReport dir = separation(x, SpacetimePoint(1, {0}, 2));
  CHECK(dir.sigmaM == doctest::Approx(0.0));
  CHECK(dir.u == doctest::Approx(1.0));
  CHECK((dir.classification == Classification::directNull));

  CHECK((separation(x, SpacetimePoint(0, {3}, 1)).classification == Classification::spacelike));
  CHECK((separation(x, SpacetimePoint(0.5, {0}, 1)).classification == Classification::timelike));
  CHECK((separation(x, SpacetimePoint(3, {0}, 1)).classification == Classification::reflectedTimelikeMixed));
}

TEST_CASE("reflection is an involution and swaps the two world functions") {
  const SpacetimePoint p(0.3, {0.2}, 0.8), q(1.1, {-0.4}, 1.7);
  const MirrorPoint m = reflect(p);
  CHECK(m.z() == -0.8);
  CHECK(m.t() == 0.3);
  const SpacetimePoint back = reflect(m);
  CHECK(back.z() == p.z());
  CHECK(back.t() == p.t());
  CHECK(separation(m, q).sigmaM == doctest::Approx(separation(p, q).sigmaMReflected));
}

TEST_CASE("u of a reflected point is 1 - u") {
  const SpacetimePoint p(0.3, {0.2, 0.1}, 0.8), q(1.1, {-0.4, 0.5}, 1.7);
  const double u = separation(p, q).u;
  CHECK(separation(reflect(p), q).u == doctest::Approx(1.0 - u));
  const CrossRatio cr = PairGeometry::of(p, q).u();
  CHECK(cr.u.real() + cr.oneMinusU.real() == doctest::Approx(1.0));
}

TEST_CASE("regulated cross-ratio") {
  const PairGeometry g{0.5, 0.1, 1.0, 1.2};
  const CrossRatio c0 = g.uEps(0.0), c1 = g.uEps(1e-3);
  CHECK(c0.u.imag() == 0.0);
  // sigma + 2 i eps dt + eps^2 over 2 z z'
  CHECK(c1.u.imag() == doctest::Approx(2e-3 * 0.5 / (2 * 1.2)));
  CHECK(c1.u.real() == doctest::Approx(c0.u.real() + 1e-6 / 2.4));
  CHECK(g.swapped().dt == -0.5);
}

TEST_CASE("geodesic distance branches") {
  const SpacetimePoint x(0, {0}, 1);
  CHECK(geodesicDistance(x, x).sigma == cplx(0.0));

  const GeodesicDistance tl = geodesicDistance(x, SpacetimePoint(1, {0}, 1));
  CHECK(tl.branch == GeodesicDistance::Branch::timelike);
  CHECK(tl.sigma.real() == doctest::Approx(-kPi * kPi / 18).epsilon(1e-12));

  const SpacetimePoint a(0.2, {0.1, 0.0}, 0.9), b(0.2, {1.4, -0.5}, 1.6);
  const GeodesicDistance sl = geodesicDistance(a, b);
  CHECK(sl.branch == GeodesicDistance::Branch::spacelike);
  const double se = sigmaChordal(embed(a), embed(b));
  const double s = std::acosh(1.0 + se);
  CHECK(sl.sigma.real() == doctest::Approx(0.5 * s * s).epsilon(1e-12));

  CHECK(std::isnan(geodesicDistance(x, SpacetimePoint(2, {0}, 1)).sigma.real()));
}

TEST_CASE("null connections") {
  const SpacetimePoint x(0, {0}, 1);
  const auto d = connectNull(x, SpacetimePoint(1, {0}, 2));
  REQUIRE(d);
  CHECK(d->kind == NullConnection::Kind::direct);
  CHECK(d->tangent == std::vector<double>{1, 0, 1});
  CHECK(flatNorm(d->emissionCovector) == doctest::Approx(0.0));

  const auto r = connectNull(x, SpacetimePoint(2, {0}, 1));
  REQUIRE(r);
  CHECK(r->kind == NullConnection::Kind::reflected);
  CHECK(r->emissionCovector.back() < 0.0);
  CHECK(r->arrivalCovector.back() > 0.0);

  CHECK_FALSE(connectNull(x, SpacetimePoint(0, {2}, 1)));
}

TEST_CASE("flat lowering is mostly plus") {
  CHECK(flat({2, 3, 4}) == std::vector<double>{-2, 3, 4});
  CHECK(flatNorm({1, 0, 1}) == 0.0);
  CHECK(flatNorm({2, 1, 0}) == -3.0);
}
