#include "pads/algebra.hpp"

#include <algorithm>
#include <cmath>

#include "pads/errors.hpp"
#include "pads/parallel.hpp"

namespace pads::algebra {

namespace {

constexpr cplx kI{0.0, 1.0};

double maxAbs(const Eigen::MatrixXcd& m) { return m.size() ? m.cwiseAbs().maxCoeff() : 0.0; }

}  // namespace

GeneratorBasis buildBasis(const std::vector<TestFunction>& functions, const ModelParams& params,
                          const BoundaryCondition& bc, const QuadratureSpec& quad, const BasisTolerances& tol) {
  if (functions.empty()) throw BasisError("empty generator basis");
  const PropagatorModel model(params, bc);
  const int d = params.d;
  const std::vector<KernelFn> kernels = {
      onH(model.omegaFn(), d), onH(model.propagatorFn(), d),
      onH([model](const PairGeometry& g, double eps) { return model.hadamardPart(g, eps); }, d)};

  const auto n = static_cast<Eigen::Index>(functions.size());
  Eigen::MatrixXcd O(n, n), G(n, n), H(n, n);
  parallelFor(static_cast<std::size_t>(n * n), [&](std::size_t k) {
    const auto i = static_cast<Eigen::Index>(k) / n, j = static_cast<Eigen::Index>(k) % n;
    const auto v = smear2Many(kernels, functions[i], functions[j], quad);
    O(i, j) = v[0];
    G(i, j) = v[1];
    H(i, j) = v[2];
  });

  GeneratorBasis b;
  b.functions = functions;
  b.params = params;
  b.bc = bc;
  const Eigen::MatrixXd Gr = G.real();
  const double gScale = std::max(Gr.cwiseAbs().maxCoeff(), 1e-300);
  const double asym = (Gr + Gr.transpose()).cwiseAbs().maxCoeff();
  if (asym > tol.antisymmetry * gScale)
    throw BasisError("commutator Gram matrix is not antisymmetric: " + std::to_string(asym / gScale));
  b.Gmat = 0.5 * (Gr - Gr.transpose());
  b.Omat = O;
  b.Hmat = H;
  const double comm = maxAbs(O - O.transpose() - kI * Gr.cast<cplx>());
  if (comm > tol.commutator * std::max(maxAbs(O), 1e-300))
    throw BasisError("omega_2 - omega_2^T != i G beyond tolerance: " + std::to_string(comm / maxAbs(O)));
  const Eigen::MatrixXcd herm = 0.5 * (O + O.adjoint());
  const Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> es(herm);
  const double trace = herm.trace().real();
  if (es.eigenvalues().minCoeff() < -tol.positivity * std::abs(trace))
    throw BasisError("two-point Gram matrix is not positive: min eigenvalue " +
                     std::to_string(es.eigenvalues().minCoeff()));
  return b;
}

PolyFunctional PolyFunctional::constant(cplx c) {
  PolyFunctional f;
  f.add({}, c);
  return f;
}

PolyFunctional PolyFunctional::generator(int i) {
  if (i < 0) throw DomainError("generator index must be non-negative");
  PolyFunctional f;
  f.add({i}, 1.0);
  return f;
}

int PolyFunctional::degree() const {
  int deg = 0;
  for (const auto& [m, c] : terms_) deg = std::max(deg, static_cast<int>(m.size()));
  return deg;
}

cplx PolyFunctional::coefficient(const Monomial& m) const {
  Monomial key = m;
  std::sort(key.begin(), key.end());
  const auto it = terms_.find(key);
  return it == terms_.end() ? cplx(0.0) : it->second;
}

void PolyFunctional::add(Monomial m, cplx c) {
  if (static_cast<int>(m.size()) > kMaxDegree) throw DegreeError("functional degree above the supported maximum");
  std::sort(m.begin(), m.end());
  auto [it, fresh] = terms_.try_emplace(std::move(m), c);
  if (!fresh) it->second += c;
  if (it->second == cplx(0.0)) terms_.erase(it);
}

PolyFunctional PolyFunctional::operator+(const PolyFunctional& o) const {
  PolyFunctional r = *this;
  for (const auto& [m, c] : o.terms_) r.add(m, c);
  return r;
}

PolyFunctional PolyFunctional::operator-(const PolyFunctional& o) const { return *this + o * -1.0; }

PolyFunctional PolyFunctional::operator*(cplx s) const {
  PolyFunctional r;
  for (const auto& [m, c] : terms_) r.add(m, c * s);
  return r;
}

PolyFunctional PolyFunctional::pointwise(const PolyFunctional& o) const {
  PolyFunctional r;
  for (const auto& [m, c] : terms_)
    for (const auto& [mo, co] : o.terms_) {
      Monomial u = m;
      u.insert(u.end(), mo.begin(), mo.end());
      r.add(std::move(u), c * co);
    }
  return r;
}

double PolyFunctional::distance(const PolyFunctional& o) const {
  double d = 0.0;
  for (const auto& [m, c] : (*this - o).terms_) d = std::max(d, std::abs(c));
  return d;
}

namespace {

// Removes one copy of index i; returns its multiplicity before removal.
int take(Monomial& m, int i) {
  const auto lo = std::lower_bound(m.begin(), m.end(), i);
  const auto hi = std::upper_bound(m.begin(), m.end(), i);
  const int mult = static_cast<int>(hi - lo);
  if (mult > 0) m.erase(lo);
  return mult;
}

using BiTerms = std::map<std::pair<Monomial, Monomial>, cplx>;

// One application of sum_ij W_ij d_i (x) d_j.
BiTerms contractOnce(const BiTerms& in, const Eigen::MatrixXcd& W) {
  BiTerms out;
  for (const auto& [key, c] : in) {
    const auto& [A, B] = key;
    Monomial da = A, db = B;
    da.erase(std::unique(da.begin(), da.end()), da.end());
    db.erase(std::unique(db.begin(), db.end()), db.end());
    for (int i : da)
      for (int j : db) {
        if (i >= W.rows() || j >= W.cols()) throw DegreeError("functional refers to an index outside the basis");
        Monomial a = A, b = B;
        const int ma = take(a, i), mb = take(b, j);
        out[{std::move(a), std::move(b)}] += c * static_cast<double>(ma * mb) * W(i, j);
      }
  }
  return out;
}

}  // namespace

PolyFunctional starProduct(const PolyFunctional& F, const PolyFunctional& Fp, const Eigen::MatrixXcd& weights) {
  if (F.degree() + Fp.degree() > kMaxDegree) throw DegreeError("product degree exceeds the supported maximum");
  BiTerms level;
  for (const auto& [a, ca] : F.terms())
    for (const auto& [b, cb] : Fp.terms()) level[{a, b}] += ca * cb;
  PolyFunctional out;
  double factorial = 1.0;
  for (int n = 0; !level.empty(); ++n) {
    if (n > 0) factorial *= n;
    for (const auto& [key, c] : level) {
      if (c == cplx(0.0)) continue;
      Monomial u = key.first;
      u.insert(u.end(), key.second.begin(), key.second.end());
      out.add(std::move(u), c / factorial);
    }
    level = contractOnce(level, weights);
  }
  return out;
}

PolyFunctional starProduct(const PolyFunctional& F, const PolyFunctional& Fp, const GeneratorBasis& basis,
                           Contraction kernel) {
  if (kernel == Contraction::hadamard) return starProduct(F, Fp, basis.Hmat);
  return starProduct(F, Fp, Eigen::MatrixXcd(0.5 * kI * basis.Gmat.cast<cplx>()));
}

namespace {

template <class Visit>
void matchings(std::vector<int>& open, std::vector<std::pair<int, int>>& pairs, Visit&& visit) {
  if (open.empty()) {
    visit(pairs);
    return;
  }
  const int first = open.front();
  for (std::size_t k = 1; k < open.size(); ++k) {
    const int partner = open[k];
    std::vector<int> rest;
    for (std::size_t m = 1; m < open.size(); ++m)
      if (m != k) rest.push_back(open[m]);
    pairs.emplace_back(first, partner);
    matchings(rest, pairs, visit);
    pairs.pop_back();
  }
}

}  // namespace

cplx quasifreeNPoint(const Eigen::MatrixXcd& M, const std::vector<int>& indices) {
  if (indices.empty()) return 1.0;
  if (indices.size() % 2 != 0) return 0.0;
  for (int i : indices)
    if (i < 0 || i >= M.rows()) throw DomainError("n-point index outside the basis");
  std::vector<int> slots(indices.size());
  for (std::size_t k = 0; k < slots.size(); ++k) slots[k] = static_cast<int>(k);
  std::vector<std::pair<int, int>> pairs;
  cplx total = 0.0;
  matchings(slots, pairs, [&](const std::vector<std::pair<int, int>>& ps) {
    cplx prod = 1.0;
    for (const auto& [a, b] : ps) prod *= M(indices[a], indices[b]);
    total += prod;
  });
  return total;
}

std::size_t matchingCount(int twoN) {
  if (twoN < 0 || twoN % 2 != 0) return 0;
  std::vector<int> slots(twoN);
  for (int k = 0; k < twoN; ++k) slots[k] = k;
  std::vector<std::pair<int, int>> pairs;
  std::size_t count = 0;
  matchings(slots, pairs, [&](const std::vector<std::pair<int, int>>&) { ++count; });
  return count;
}

cplx stateEval(const PolyFunctional& F, const GeneratorBasis& basis) {
  const Eigen::MatrixXcd W = 0.5 * (basis.Omat + basis.Omat.transpose());
  cplx total = 0.0;
  for (const auto& [m, c] : F.terms()) total += c * quasifreeNPoint(W, m);
  return total;
}

QuotientReport onShellQuotientCheck(const TestFunction& phi, const GeneratorBasis& basis, const QuadratureSpec& quad,
                                    double tol) {
  QuotientReport rep{0.0, basis.Gmat.size() ? basis.Gmat.cwiseAbs().maxCoeff() : 0.0, true};
  if (phi.empty()) return rep;
  const PropagatorModel model(basis.params, basis.bc);
  const KernelFn G = onH(model.propagatorFn(), basis.params.d);
  const TestFunction pphi = phi.applyP(basis.params);
  QuadratureSpec q = quad;
  q.doubled = false;
  std::vector<double> pairing(basis.size()), plain(basis.size());
  parallelFor(basis.size(), [&](std::size_t k) {
    const auto v = smear2Many({G}, pphi, basis.functions[k], q);
    pairing[k] = std::abs(v[0]);
    plain[k] = std::abs(smear2Many({G}, phi, basis.functions[k], q)[0]);
  });
  for (std::size_t k = 0; k < basis.size(); ++k) {
    rep.maxPairing = std::max(rep.maxPairing, pairing[k]);
    rep.scale = std::max(rep.scale, plain[k]);
  }
  rep.ok = rep.maxPairing <= tol * rep.scale;
  return rep;
}

}  // namespace pads::algebra
