#pragma once

#include <Eigen/Dense>
#include <map>
#include <vector>

#include "pads/kernels.hpp"
#include "pads/modes.hpp"
#include "pads/smearing.hpp"

namespace pads::algebra {

// Highest total degree a product may reach (two degree-2 factors times a third).
inline constexpr int kMaxDegree = 6;

struct GeneratorBasis {
  std::vector<TestFunction> functions;
  Eigen::MatrixXd Gmat;   // G(f_i, f_j), antisymmetric
  Eigen::MatrixXcd Omat;  // omega_2(f_i, f_j)
  Eigen::MatrixXcd Hmat;  // Hadamard-ordered pairing
  ModelParams params;
  BoundaryCondition bc = BoundaryCondition::dirichlet();

  std::size_t size() const { return functions.size(); }
};

struct BasisTolerances {
  double antisymmetry = 1e-8;  // relative to max |G|
  double commutator = 1e-8;    // Omat - Omat^T - i Gmat, relative to max |Omat|
  double positivity = 1e-8;    // min eigenvalue >= -positivity * trace
};

// Smears omega_2, G and the Hadamard pairing on H over all ordered pairs; throws BasisError on invariant failure.
GeneratorBasis buildBasis(const std::vector<TestFunction>& functions, const ModelParams& params,
                          const BoundaryCondition& bc, const QuadratureSpec& quad = {},
                          const BasisTolerances& tol = {});

// Multiset of basis indices, kept sorted.
using Monomial = std::vector<int>;

class PolyFunctional {
 public:
  PolyFunctional() = default;
  static PolyFunctional constant(cplx c);
  static PolyFunctional generator(int i);

  int degree() const;
  const std::map<Monomial, cplx>& terms() const { return terms_; }
  cplx coefficient(const Monomial& m) const;
  void add(Monomial m, cplx c);

  PolyFunctional operator+(const PolyFunctional& o) const;
  PolyFunctional operator-(const PolyFunctional& o) const;
  PolyFunctional operator*(cplx s) const;
  // Pointwise (classical) product.
  PolyFunctional pointwise(const PolyFunctional& o) const;
  // Largest coefficient difference.
  double distance(const PolyFunctional& o) const;

 private:
  std::map<Monomial, cplx> terms_;
};

enum class Contraction { halfCommutator, hadamard };

// Exponential contraction product with weights i G/2 or Hmat.
PolyFunctional starProduct(const PolyFunctional& F, const PolyFunctional& Fp, const GeneratorBasis& basis,
                           Contraction kernel = Contraction::halfCommutator);
// Same with an explicit weight matrix.
PolyFunctional starProduct(const PolyFunctional& F, const PolyFunctional& Fp, const Eigen::MatrixXcd& weights);

// Sum over perfect matchings (i1<j1),(i2<j2),... with i1<i2<..., product of M entries; zero for odd length.
cplx quasifreeNPoint(const Eigen::MatrixXcd& M, const std::vector<int>& indices);
// Number of matchings enumerated for 2n slots.
std::size_t matchingCount(int twoN);

// Quasifree state on pointwise monomials: pairings weighted by the symmetric part of Omat.
cplx stateEval(const PolyFunctional& F, const GeneratorBasis& basis);

struct QuotientReport {
  double maxPairing;  // max_h |G(P phi, h)|
  double scale;       // max_h |G(phi, h)| and max |Gmat|
  bool ok;
};

// G-pairings of P_eta phi against the basis vanish: adding P_eta phi does not change the class.
QuotientReport onShellQuotientCheck(const TestFunction& phi, const GeneratorBasis& basis,
                                    const QuadratureSpec& quad = {}, double tol = 1e-4);

}  // namespace pads::algebra
