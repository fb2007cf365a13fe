#pragma once

#include <functional>
#include <optional>
#include <string>

namespace pads {

struct ModelParams {
  int d;
  double m0sq;
  double xi;
  double msq;
  double nu;
};

ModelParams deriveParams(int d, double m0sq, double xi);
// Conformally coupled parameters with the requested order.
ModelParams paramsFromNu(int d, double nu);

// Robin condition stored as the projective pair (cos alpha, sin alpha).
class BoundaryCondition {
 public:
  // alpha in (0, pi]; pi, pi/2, 2pi/3 and 3pi/4 snap to exact pairs.
  static BoundaryCondition fromAlpha(double alpha);
  static BoundaryCondition dirichlet() { return fromAlpha(kPiValue); }
  static BoundaryCondition neumann() { return fromAlpha(kPiValue / 2); }

  double alpha() const { return alpha_; }
  double a() const { return a_; }
  double b() const { return b_; }
  bool isDirichlet() const { return b_ == 0.0; }
  // cot(alpha); empty at alpha = pi.
  std::optional<double> cAlpha() const;
  bool admissibleForGroundState(double nu) const;
  std::string label() const;

  static constexpr double kPiValue = 3.14159265358979323846;

 private:
  BoundaryCondition(double alpha, double a, double b) : alpha_(alpha), a_(a), b_(b) {}
  double alpha_;
  double a_;
  double b_;
};

enum class ProfileKind { phi1, phi2, psi, boundK };

struct RadialProfile {
  std::function<double(double)> fn;
  double nu;
  double q;
  ProfileKind kind;
  std::function<double(double)> deriv = {};  // d/dz, when known in closed form
  double operator()(double z) const { return fn(z); }
};

RadialProfile phi1(double nu, double q);
RadialProfile phi2(double nu, double q);

// f g' - g f'; closed-form derivatives when both profiles carry one, else central differences of step 1e-6 z.
double wronskianAt(const RadialProfile& f, const RadialProfile& g, double z);

inline constexpr double kRobinTol = 1e-6;

// z -> 0 limit of cos(alpha) W[Psi, Phi1] + sin(alpha) W[Psi, Phi2], Phi_i taken at the profile's q.
double robinFunctional(const RadialProfile& psi, const BoundaryCondition& bc, double nu);

// sqrt(z) * (a J_nu(qz) - b q^{2nu} J_{-nu}(qz)); nu = 0 uses the logarithmic pair.
RadialProfile psi(const BoundaryCondition& bc, double nu, double q);
// The same without the sqrt(z) factor, as it enters the mode kernel.
double psiBare(const BoundaryCondition& bc, double nu, double q, double z);
double normDenominator(const BoundaryCondition& bc, double nu, double q);

// Decay rate of the bound state, when one exists.
std::optional<double> boundStateKappa(const BoundaryCondition& bc, double nu);
std::optional<RadialProfile> boundStateProfile(const BoundaryCondition& bc, double nu);

}  // namespace pads
