#pragma once

#include <functional>
#include <vector>

#include "pads/kernels.hpp"
#include "pads/modes.hpp"

namespace pads {

// One-dimensional profile with analytic first and second derivatives.
// bump:    (1 - s^2)^8 with s = (x - center)/halfWidth, zero outside.
// plateau: 1 on [0, lo], smooth C^7 step down to 0 on [lo, hi], zero beyond.
class Profile1D {
 public:
  static Profile1D bump(double center, double halfWidth);
  static Profile1D plateau(double flatUntil, double zeroFrom);

  // k-th derivative, k = 0, 1, 2.
  double value(double x, int k = 0) const;
  double lo() const;
  double hi() const;
  // Interior points where the profile is not polynomial (plateau junctions).
  std::vector<double> breaks() const;

 private:
  enum class Shape { bump, plateau };
  Profile1D(Shape s, double p, double q) : shape_(s), p_(p), q_(q) {}
  Shape shape_;
  double p_;
  double q_;
};

// Derivative of order 0..2 of a profile along one axis.
struct AxisFactor {
  Profile1D profile;
  int deriv = 0;
  double operator()(double v) const;
  double lo() const { return profile.lo(); }
  double hi() const { return profile.hi(); }
};

// coef * z^power * (d/dz)^deriv profile(z)
struct RadialPiece {
  double coef;
  double power;
  Profile1D profile;
  int deriv = 0;
};

struct RadialFactor {
  std::vector<RadialPiece> pieces;
  double operator()(double z) const;
  double lo() const;
  double hi() const;
  // (d^2/dz^2 - m^2/z^2) applied piecewise.
  RadialFactor applyL(double msq) const;
};

struct SeparableTerm {
  double coef;
  AxisFactor t;
  std::vector<AxisFactor> x;  // one factor per transverse direction
  RadialFactor z;
};

// Finite sum of separable terms coef * g(t) * prod X_i(x_i) * h(z).
class TestFunction {
 public:
  TestFunction() = default;
  explicit TestFunction(std::vector<SeparableTerm> terms) : terms_(std::move(terms)) {}

  // Family member g(t) X(x) [cos(alpha) z^{nu+1/2} F1(z) + sin(alpha) z^{1/2-nu} F2(z)].
  static TestFunction member(const ModelParams& params, const BoundaryCondition& bc, const Profile1D& g,
                             const std::vector<Profile1D>& xs, const Profile1D& f1, const Profile1D& f2);
  // g(t) X(x) F(z) with supp F inside z > 0.
  static TestFunction interior(const Profile1D& g, const std::vector<Profile1D>& xs, const Profile1D& f);

  // P_eta f = (-dt^2 + Laplacian_x + dz^2 - m^2/z^2) f, analytically.
  TestFunction applyP(const ModelParams& params) const;

  double operator()(double t, const std::vector<double>& x, double z) const;
  const std::vector<SeparableTerm>& terms() const { return terms_; }
  TestFunction operator+(const TestFunction& o) const;
  TestFunction scaled(double s) const;
  bool empty() const { return terms_.empty(); }

  // Bounding box of the support.
  double tLo() const;
  double tHi() const;
  double xLo(std::size_t axis) const;
  double xHi(std::size_t axis) const;
  double zLo() const;
  double zHi() const;

 private:
  std::vector<SeparableTerm> terms_;
};

struct QuadratureSpec {
  int nodesZ = 20;      // per radial axis (z and z', the latter per side of z)
  int nodesR = 16;      // transverse separation, per subinterval
  int nodesT = 24;      // per subinterval of the time separation
  int nodesCorr = 24;   // correlation integrals per polynomial piece
  bool doubled = true;  // also report the value at doubled node counts
};

struct SmearResult {
  cplx value;
  cplx doubledValue;  // equals value when not requested
  double selfConvergence() const { return std::abs(doubledValue - value); }
};

// Integral f(x) K(x, x') f'(x') dx dx' for d = 2 by correlation reduction in (t, x).
// The kernel is evaluated at its boundary value (eps = 0) unless eps > 0 is given.
SmearResult smear2(const KernelFn& kernel, const TestFunction& f, const TestFunction& fp, const QuadratureSpec& quad,
                   double eps = 0.0);

// The same smearing for a list of kernels sharing one node set; returns one value per kernel.
std::vector<cplx> smear2Many(const std::vector<KernelFn>& kernels, const TestFunction& f, const TestFunction& fp,
                             const QuadratureSpec& quad, double eps = 0.0);

struct RadialGrid {
  std::vector<double> z;
  std::vector<double> w;
};

// Gauss-Legendre in z, or in s with z = hi s^4 when the range starts at the boundary (lo <= 0).
RadialGrid radialNodes(double lo, double hi, int n);

// Integral of f over the half space (unit-kernel check).
double integrate(const TestFunction& f, int nodes = 24);

}  // namespace pads
