#include <cmath>

#include "doctest.h"
#include "pads/quadrature.hpp"

using namespace pads;
using cplx = std::complex<double>;

TEST_CASE("Gauss-Legendre integrates polynomials exactly") {
  const quad::Rule r = quad::gaussLegendre(6);
  double wsum = 0.0;
  for (double w : r.weights) wsum += w;
  CHECK(wsum == doctest::Approx(2.0).epsilon(1e-15));
  // degree 11 is the limit for 6 nodes
  CHECK(quad::integrate(r, [](double x) { return std::pow(x, 10); }) == doctest::Approx(2.0 / 11).epsilon(1e-14));
  const quad::Rule m = quad::gaussLegendre(8, 1.0, 3.0);
  CHECK(quad::integrate(m, [](double x) { return x * x * x; }) == doctest::Approx(20.0).epsilon(1e-14));
  CHECK(quad::integrate(m, [](double x) { return std::exp(x); }) ==
        doctest::Approx(std::exp(3.0) - std::exp(1.0)).epsilon(1e-12));
}

TEST_CASE("tanh-sinh handles endpoint singularities") {
  const auto r = quad::tanhSinh([](double x) { return cplx(1.0 / std::sqrt(x), 0.0); }, 0.0, 1.0, 1e-12);
  CHECK(r.value.real() == doctest::Approx(2.0).epsilon(1e-12));
  const auto l = quad::tanhSinh([](double x) { return cplx(std::log(x), x); }, 0.0, 1.0, 1e-12);
  CHECK(l.value.real() == doctest::Approx(-1.0).epsilon(1e-10));
  CHECK(l.value.imag() == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("composite panels") {
  const cplx v = quad::gaussPanels([](double x) { return cplx(std::abs(x), 0.0); }, {-1.0, 0.0, 2.0}, 4);
  CHECK(v.real() == doctest::Approx(2.5).epsilon(1e-14));
}

TEST_CASE("Richardson removes the leading powers") {
  std::vector<double> h = {0.1, 0.05, 0.025};
  std::vector<cplx> v;
  for (double x : h) v.emplace_back(1.0 + 3.0 * x + 7.0 * x * x);
  CHECK(std::abs(quad::richardson(h, v, 1.0) - 1.0) < 1e-12);
  std::vector<cplx> w;
  for (double x : h) w.emplace_back(2.0 - x * x + x * x * x * x);
  CHECK(std::abs(quad::richardson(h, w, 2.0, 2.0) - 2.0) < 1e-12);
}

TEST_CASE("Wynn epsilon accelerates an alternating series") {
  std::vector<cplx> partial;
  double s = 0.0;
  for (int k = 1; k <= 12; ++k) {
    s += (k % 2 ? 1.0 : -1.0) / k;
    partial.emplace_back(s);
  }
  CHECK(std::abs(partial.back().real() - std::log(2.0)) > 1e-2);
  CHECK(std::abs(quad::wynnEpsilon(partial) - std::log(2.0)) < 1e-8);
}
