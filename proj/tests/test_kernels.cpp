#include <cmath>

#include "doctest.h"
#include "pads/errors.hpp"
#include "pads/kernels.hpp"

using namespace pads;

namespace {
constexpr double kPi = 3.14159265358979323846;

bool close(cplx a, cplx b, double tol) { return std::abs(a - b) <= tol * std::max(1.0, std::abs(b)); }
}  // namespace

TEST_CASE("D and N kernels against reference values") {
  CHECK(close(omega2DN(KernelKind::D, 3, 0.3, 2.5), 0.3421542781672431, 1e-12));
  CHECK(close(omega2DN(KernelKind::N, 3, 0.3, 2.5), 0.20855793970855524, 1e-12));
  CHECK(close(omega2DN(KernelKind::D, 2, 0.25, cplx(0.4, 0.3)), cplx(-1.196792685350815, -2.0636372764187138), 1e-12));
  CHECK(close(omega2DN(KernelKind::N, 3, 0.3, cplx(-0.7, 0.2)), cplx(-0.39109308805377544, 0.15097399240026599), 1e-12));
  CHECK_THROWS_AS(omega2DN(KernelKind::D, 3, 0.3, 0.0), SingularPointError);
}

TEST_CASE("large-u behaviour and the nu = 1/2 N kernel") {
  const double u = 1e6;
  CHECK(std::abs(omega2DN(KernelKind::D, 3, 0.3, u)) ==
        doctest::Approx(std::pow(u, -1.8) / std::tgamma(1.6)).epsilon(1e-4));
  CHECK(std::abs(omega2DN(KernelKind::N, 3, 0.3, u)) ==
        doctest::Approx(std::pow(u, -1.2) / std::tgamma(0.4)).epsilon(1e-4));
  const cplx half = omega2DN(KernelKind::N, 3, 0.5, 2.5);
  CHECK(std::isfinite(half.real()));
  const cplx a = omega2DN(KernelKind::N, 3, 0.5 - 1e-3, 2.5), b = omega2DN(KernelKind::N, 3, 0.5 - 1e-4, 2.5);
  // linear in the offset
  CHECK(close(half, b + (b - a) / 9.0, 1e-6));
}

TEST_CASE("Schwarz reflection across the cut") {
  for (auto kind : {KernelKind::D, KernelKind::N}) {
    const cplx up = omega2DN(kind, 3, 0.3, cplx(0.4, 1e-6)), dn = omega2DN(kind, 3, 0.3, cplx(0.4, -1e-6));
    CHECK(close(up, std::conj(dn), 1e-12));
    CHECK(std::abs(up.imag()) > 1e-3);
    CHECK(close(omegaCanonical(kind, 3, 0.3, 0.4, 1), std::conj(omegaCanonical(kind, 3, 0.3, 0.4, -1)), 1e-14));
  }
}

TEST_CASE("elementary reductions match the general evaluation") {
  for (cplx u : {cplx(2.5, 0.0), cplx(0.3, 0.2), cplx(-1.5, 0.1), cplx(0.7, -0.4)}) {
    for (auto kind : {KernelKind::D, KernelKind::N}) {
      CHECK(close(omegaCanonical(kind, 3, 0.5, u), omegaCanonicalGeneral(kind, 3, 0.5, u), 1e-10));
      CHECK(close(omegaCanonical(kind, 2, 0.3, u), omegaCanonicalGeneral(kind, 2, 0.3, u), 1e-10));
      CHECK(close(decompositionHyp(2, 0.3, u), decompositionHypGeneral(2, 0.3, u), 1e-10));
    }
  }
  const cplx u = 2.5;
  CHECK(close(omegaCanonical(KernelKind::D, 3, 0.5, u), (1.0 / (16 * kPi * kPi)) * (1.0 / (u - 1.0) - 1.0 / u), 1e-14));
}

TEST_CASE("coefficients") {
  const KernelCoefficients k = coefficients(paramsFromNu(3, 0.3), BoundaryCondition::dirichlet());
  CHECK(k.Nalpha.real() == doctest::Approx(-1.0 / (16 * kPi * kPi)).epsilon(1e-14));
  CHECK(k.Nalpha.imag() == 0.0);
  CHECK(std::abs(k.UpsA + specfun::minusOnePow(1.5 - 0.3) * k.UpsB) <= 1e-12);
  CHECK(close(cAlphaNu(BoundaryCondition::dirichlet(), 0.5), cplx(1.0, 0.0), 1e-15));
  CHECK(close(cAlphaNu(BoundaryCondition::dirichlet(), 0.3), cplx(0.0, 1.0) * std::exp(cplx(0.0, -0.3 * kPi)), 1e-15));
  const KernelCoefficients lo = coefficients(paramsFromNu(3, 0.3), BoundaryCondition::neumann(), -1);
  const KernelCoefficients hi = coefficients(paramsFromNu(3, 0.3), BoundaryCondition::neumann(), 1);
  CHECK(close(lo.Aalpha, std::conj(hi.Aalpha), 1e-14));
  CHECK_THROWS_AS(coefficients(paramsFromNu(3, 0.3), BoundaryCondition::fromAlpha(3 * kPi / 4)), NormalizationError);
}

TEST_CASE("propagator model") {
  const PropagatorModel m(paramsFromNu(3, 0.3), BoundaryCondition::neumann());
  const PairGeometry g = PairGeometry::of(SpacetimePoint(0.9, {0.1, 0.2}, 1.0), SpacetimePoint(0.0, {0.0, 0.0}, 1.3));
  const cplx G = m.propagator(g, 1e-3);
  CHECK(G.imag() == 0.0);
  CHECK(m.propagator(g.swapped(), 1e-3).real() == doctest::Approx(-G.real()).epsilon(1e-12));
  // G = (1/i)(omega(x,x') - omega(x',x))
  const cplx diff = (m.omega(g, 1e-3) - m.omega(g.swapped(), 1e-3)) / cplx(0.0, 1.0);
  CHECK(close(diff, G, 1e-10));
  CHECK(close(m.propagatorDecomposed(g, 1e-3), G, 1e-8));
  CHECK(m.boundStateTerm(g, 1e-3) == cplx(0.0));

  // spacelike pairs carry no commutator
  const PairGeometry s = PairGeometry::of(SpacetimePoint(0.0, {2.0, 0.0}, 1.0), SpacetimePoint(0.1, {0.0, 0.0}, 1.2));
  CHECK(std::abs(m.propagator(s, 0.0)) < 1e-14);

  CHECK_THROWS_AS(PropagatorModel(paramsFromNu(3, 0.3), BoundaryCondition::fromAlpha(3 * kPi / 4)), NormalizationError);
  CHECK_THROWS_AS(PropagatorModel(paramsFromNu(3, 1.5), BoundaryCondition::neumann()), NotSquareIntegrableError);
  CHECK_NOTHROW(PropagatorModel(paramsFromNu(3, 1.5), BoundaryCondition::dirichlet()).omega(g, 1e-3));
}

TEST_CASE("bound-state regime") {
  const PropagatorModel m(paramsFromNu(3, 0.5), BoundaryCondition::fromAlpha(kPi / 4));
  CHECK_FALSE(m.hasGroundState());
  const PairGeometry g = PairGeometry::of(SpacetimePoint(0.5, {0.0, 0.0}, 1.0), SpacetimePoint(0.0, {0.0, 0.0}, 1.2));
  CHECK_THROWS_AS(m.omega(g, 1e-3), GroundStateAbsentError);
  CHECK(std::abs(m.boundStateTerm(g, 1e-3)) > 0.0);
  // K_{1/2}(z) K_{1/2}(z') ~ exp(-(z + z')) / sqrt(z z') on H
  auto radial = [&](double z, double zp) {
    const PairGeometry p = PairGeometry::of(SpacetimePoint(0.5, {0.0, 0.0}, z), SpacetimePoint(0.0, {0.0, 0.0}, zp));
    return std::abs(rescale(m.boundStateTerm(p, 1e-3), z, zp, 3, RescaleDirection::toH)) * std::sqrt(z * zp);
  };
  const double slope = std::log(radial(5.0, 5.2) / radial(4.0, 4.2)) / 2.0;
  CHECK(slope == doctest::Approx(-1.0).epsilon(1e-2));
}

TEST_CASE("ladder extrapolation and rescaling") {
  const KernelFn lin = [](const PairGeometry&, double e) { return cplx(1.0 + 2.0 * e, -e); };
  const RegulatedKernelValue v = onLadder(lin, PairGeometry{1, 0, 1, 1});
  CHECK(std::abs(v.value - 1.0) < 1e-13);
  CHECK(v.ladder.size() == 3);
  CHECK(rescale(2.0, 4.0, 1.0, 3, RescaleDirection::toPAdS) == cplx(8.0));
  CHECK(rescale(8.0, 4.0, 1.0, 3, RescaleDirection::toH) == cplx(2.0));
  CHECK_THROWS_AS(rescale(1.0, 0.0, 1.0, 3, RescaleDirection::toH), DomainError);
}
