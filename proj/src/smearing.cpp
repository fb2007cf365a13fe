#include "pads/smearing.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "pads/errors.hpp"
#include "pads/quadrature.hpp"

namespace pads {

namespace {

constexpr int kPow = 8;

double powi(double x, int n) {
  double r = 1.0;
  for (int i = 0; i < n; ++i) r *= x;
  return r;
}

double binom(int n, int k) {
  double r = 1.0;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

Profile1D Profile1D::bump(double center, double halfWidth) {
  if (!(halfWidth > 0.0)) throw DomainError("bump half-width must be positive");
  return {Shape::bump, center, halfWidth};
}

Profile1D Profile1D::plateau(double flatUntil, double zeroFrom) {
  if (!(zeroFrom > flatUntil && flatUntil >= 0.0)) throw DomainError("plateau needs 0 <= flat end < zero start");
  return {Shape::plateau, flatUntil, zeroFrom};
}

double Profile1D::value(double x, int k) const {
  if (shape_ == Shape::bump) {
    const double s = (x - p_) / q_;
    if (std::abs(s) >= 1.0) return 0.0;
    const double w = 1.0 - s * s;
    switch (k) {
      case 0: return powi(w, kPow);
      case 1: return -2.0 * kPow * s * powi(w, kPow - 1) / q_;
      case 2: return (-2.0 * kPow * powi(w, kPow - 1) + 4.0 * kPow * (kPow - 1) * s * s * powi(w, kPow - 2)) / (q_ * q_);
      default: throw DomainError("profile derivative order above 2");
    }
  }
  // Regularized incomplete beta step I_y(8, 8) on [p, q].
  const double len = q_ - p_;
  if (x <= p_) return k == 0 ? 1.0 : 0.0;
  if (x >= q_) return 0.0;
  const double y = (x - p_) / len;
  const int m = kPow;
  const double beta = std::tgamma(m) * std::tgamma(m) / std::tgamma(2 * m);
  switch (k) {
    case 0: {
      double inc = 0.0;
      for (int j = m; j <= 2 * m - 1; ++j) inc += binom(2 * m - 1, j) * powi(y, j) * powi(1.0 - y, 2 * m - 1 - j);
      return 1.0 - inc;
    }
    case 1: return -powi(y, m - 1) * powi(1.0 - y, m - 1) / (beta * len);
    case 2:
      return -(m - 1) * (powi(y, m - 2) * powi(1.0 - y, m - 1) - powi(y, m - 1) * powi(1.0 - y, m - 2)) /
             (beta * len * len);
    default: throw DomainError("profile derivative order above 2");
  }
}

double Profile1D::lo() const { return shape_ == Shape::bump ? p_ - q_ : 0.0; }
double Profile1D::hi() const { return shape_ == Shape::bump ? p_ + q_ : q_; }
std::vector<double> Profile1D::breaks() const {
  if (shape_ == Shape::plateau) return {p_};
  return {};
}

double AxisFactor::operator()(double v) const { return profile.value(v, deriv); }

double RadialFactor::operator()(double z) const {
  double s = 0.0;
  for (const auto& p : pieces) {
    if (p.coef == 0.0) continue;
    const double v = p.profile.value(z, p.deriv);
    if (v != 0.0) s += p.coef * std::pow(z, p.power) * v;
  }
  return s;
}

double RadialFactor::lo() const {
  double v = 1e300;
  for (const auto& p : pieces) v = std::min(v, p.profile.lo());
  return std::max(0.0, v);
}

double RadialFactor::hi() const {
  double v = 0.0;
  for (const auto& p : pieces) v = std::max(v, p.profile.hi());
  return v;
}

RadialFactor RadialFactor::applyL(double msq) const {
  RadialFactor out;
  for (const auto& p : pieces) {
    if (p.deriv != 0) throw DomainError("radial operator applied twice");
    // (d^2 - m^2/z^2)(z^p F) = z^p F'' + 2p z^{p-1} F' + (p(p-1) - m^2) z^{p-2} F
    out.pieces.push_back({p.coef, p.power, p.profile, 2});
    if (p.power != 0.0) out.pieces.push_back({2.0 * p.power * p.coef, p.power - 1.0, p.profile, 1});
    const double c0 = p.power * (p.power - 1.0) - msq;
    if (std::abs(c0) > 1e-13 * std::max(1.0, std::abs(msq))) out.pieces.push_back({c0 * p.coef, p.power - 2.0, p.profile, 0});
  }
  return out;
}

TestFunction TestFunction::member(const ModelParams& params, const BoundaryCondition& bc, const Profile1D& g,
                                  const std::vector<Profile1D>& xs, const Profile1D& f1, const Profile1D& f2) {
  if (int(xs.size()) != params.d - 1) throw DomainError("need one transverse profile per direction");
  SeparableTerm term{1.0, {g, 0}, {}, {}};
  for (const auto& x : xs) term.x.push_back({x, 0});
  if (bc.a() != 0.0) term.z.pieces.push_back({bc.a(), params.nu + 0.5, f1, 0});
  if (bc.b() != 0.0) term.z.pieces.push_back({bc.b(), 0.5 - params.nu, f2, 0});
  return TestFunction({term});
}

TestFunction TestFunction::interior(const Profile1D& g, const std::vector<Profile1D>& xs, const Profile1D& f) {
  if (f.lo() <= 0.0) throw DomainError("interior radial profile must vanish near z = 0");
  SeparableTerm term{1.0, {g, 0}, {}, {}};
  for (const auto& x : xs) term.x.push_back({x, 0});
  term.z.pieces.push_back({1.0, 0.0, f, 0});
  return TestFunction({term});
}

TestFunction TestFunction::applyP(const ModelParams& params) const {
  std::vector<SeparableTerm> out;
  for (const auto& term : terms_) {
    if (term.t.deriv != 0) throw DomainError("P applied to a derived test function");
    SeparableTerm tt = term;
    tt.coef = -term.coef;
    tt.t.deriv = 2;
    out.push_back(tt);
    for (std::size_t i = 0; i < term.x.size(); ++i) {
      SeparableTerm tx = term;
      tx.x[i].deriv = 2;
      out.push_back(tx);
    }
    SeparableTerm tz = term;
    tz.z = term.z.applyL(params.msq);
    out.push_back(tz);
  }
  return TestFunction(out);
}

double TestFunction::operator()(double t, const std::vector<double>& x, double z) const {
  double s = 0.0;
  for (const auto& term : terms_) {
    double v = term.coef * term.t(t);
    if (v == 0.0) continue;
    for (std::size_t i = 0; i < term.x.size() && v != 0.0; ++i) v *= term.x[i](x.at(i));
    if (v != 0.0) v *= term.z(z);
    s += v;
  }
  return s;
}

TestFunction TestFunction::operator+(const TestFunction& o) const {
  std::vector<SeparableTerm> all = terms_;
  all.insert(all.end(), o.terms_.begin(), o.terms_.end());
  return TestFunction(all);
}

TestFunction TestFunction::scaled(double s) const {
  std::vector<SeparableTerm> all = terms_;
  for (auto& t : all) t.coef *= s;
  return TestFunction(all);
}

namespace {

template <class Get>
double extent(const std::vector<SeparableTerm>& terms, Get get, bool lower) {
  if (terms.empty()) throw DomainError("empty test function");
  double v = lower ? 1e300 : -1e300;
  for (const auto& t : terms) v = lower ? std::min(v, get(t)) : std::max(v, get(t));
  return v;
}

}  // namespace

double TestFunction::tLo() const { return extent(terms_, [](const SeparableTerm& t) { return t.t.lo(); }, true); }
double TestFunction::tHi() const { return extent(terms_, [](const SeparableTerm& t) { return t.t.hi(); }, false); }
double TestFunction::xLo(std::size_t a) const {
  return extent(terms_, [a](const SeparableTerm& t) { return t.x.at(a).lo(); }, true);
}
double TestFunction::xHi(std::size_t a) const {
  return extent(terms_, [a](const SeparableTerm& t) { return t.x.at(a).hi(); }, false);
}
double TestFunction::zLo() const { return extent(terms_, [](const SeparableTerm& t) { return t.z.lo(); }, true); }
double TestFunction::zHi() const { return extent(terms_, [](const SeparableTerm& t) { return t.z.hi(); }, false); }

namespace {

// C(delta) = int A(s) B(s - delta) ds, exact on polynomial pieces.
double correlation(const AxisFactor& a, const AxisFactor& b, double delta, const quad::Rule& rule) {
  const double lo = std::max(a.lo(), b.lo() + delta);
  const double hi = std::min(a.hi(), b.hi() + delta);
  if (!(hi > lo)) return 0.0;
  std::vector<double> cuts = {lo, hi};
  for (double c : a.profile.breaks())
    if (c > lo && c < hi) cuts.push_back(c);
  for (double c : b.profile.breaks())
    if (c + delta > lo && c + delta < hi) cuts.push_back(c + delta);
  std::sort(cuts.begin(), cuts.end());
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double mid = 0.5 * (cuts[k] + cuts[k + 1]), half = 0.5 * (cuts[k + 1] - cuts[k]);
    for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
      const double s = mid + half * rule.nodes[i];
      sum += half * rule.weights[i] * a(s) * b(s - delta);
    }
  }
  return sum;
}

RadialGrid radialGrid(const TestFunction& f, int n) { return radialNodes(f.zLo(), f.zHi(), n); }

// Gauss-Legendre in theta over each [p, q] with v = mid - half cos(theta); absorbs inverse square roots at the ends.
struct CosNodes {
  std::vector<double> v;
  std::vector<double> w;
};

CosNodes cosNodes(std::vector<double> cuts, const quad::Rule& theta) {
  std::sort(cuts.begin(), cuts.end());
  CosNodes out;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double p = cuts[k], q = cuts[k + 1];
    if (!(q > p)) continue;
    const double mid = 0.5 * (p + q), half = 0.5 * (q - p);
    for (std::size_t n = 0; n < theta.nodes.size(); ++n) {
      out.v.push_back(mid - half * std::cos(theta.nodes[n]));
      out.w.push_back(half * std::sin(theta.nodes[n]) * theta.weights[n]);
    }
  }
  return out;
}

// C(delta) = int A(s) B(s - delta) ds tabulated exactly: Chebyshev interpolation of degree 40 on each
// interval where the overlap endpoints do not switch (the correlation is a polynomial there).
class CorrelationTable {
 public:
  CorrelationTable(const AxisFactor& a, const AxisFactor& b, const quad::Rule& rule) {
    std::vector<double> pa = {a.lo(), a.hi()}, pb = {b.lo(), b.hi()};
    for (double c : a.profile.breaks()) pa.push_back(c);
    for (double c : b.profile.breaks()) pb.push_back(c);
    lo_ = a.lo() - b.hi();
    hi_ = a.hi() - b.lo();
    for (double x : pa)
      for (double y : pb) {
        const double c = x - y;
        if (c >= lo_ && c <= hi_) cuts_.push_back(c);
      }
    std::sort(cuts_.begin(), cuts_.end());
    cuts_.erase(std::unique(cuts_.begin(), cuts_.end()), cuts_.end());
    for (std::size_t k = 0; k + 1 < cuts_.size(); ++k) {
      const double p = cuts_[k], q = cuts_[k + 1];
      std::vector<double> v(kNodes);
      for (int n = 0; n < kNodes; ++n)
        v[n] = correlation(a, b, 0.5 * (p + q) + 0.5 * (q - p) * std::cos(kPiC * (n + 0.5) / kNodes), rule);
      std::vector<double> c(kNodes);
      for (int j = 0; j < kNodes; ++j) {
        double sum = 0.0;
        for (int n = 0; n < kNodes; ++n) sum += v[n] * std::cos(kPiC * j * (n + 0.5) / kNodes);
        c[j] = 2.0 * sum / kNodes;
      }
      c[0] *= 0.5;
      coef_.push_back(std::move(c));
    }
  }

  double operator()(double delta) const {
    if (!(delta > lo_ && delta < hi_) || coef_.empty()) return 0.0;
    const auto it = std::upper_bound(cuts_.begin(), cuts_.end(), delta);
    const std::size_t k = std::min<std::size_t>(static_cast<std::size_t>(it - cuts_.begin()) - 1, coef_.size() - 1);
    const double p = cuts_[k], q = cuts_[k + 1];
    const double x = (2.0 * delta - p - q) / (q - p);
    const auto& c = coef_[k];
    double b1 = 0.0, b2 = 0.0;
    for (int j = kNodes - 1; j >= 1; --j) {
      const double b0 = 2.0 * x * b1 - b2 + c[j];
      b2 = b1;
      b1 = b0;
    }
    return x * b1 - b2 + c[0];
  }

 private:
  static constexpr int kNodes = 41;
  static constexpr double kPiC = 3.14159265358979323846;
  double lo_ = 0.0, hi_ = 0.0;
  std::vector<double> cuts_;
  std::vector<std::vector<double>> coef_;
};

struct Smearer {
  const TestFunction& f;
  const TestFunction& fp;
  const QuadratureSpec& spec;
  double eps;

  // Order: (z, z') over two mirrored triangles, time separation split at the cones, transverse separation split at
  // the cones. The node set maps to itself under f <-> f', so swapped smearings reuse the same kernel arguments.
  std::vector<cplx> run(const std::vector<KernelFn>& kernels, int scale) const {
    if (f.terms().empty() || fp.terms().empty()) return std::vector<cplx>(kernels.size(), 0.0);
    if (f.terms().front().x.size() != 1 || fp.terms().front().x.size() != 1)
      throw DomainError("smear2 is implemented for d = 2");
    const quad::Rule corr = quad::gaussLegendre(spec.nodesCorr);
    const double dLo = f.tLo() - fp.tHi(), dHi = f.tHi() - fp.tLo();
    const double rMax = std::max(std::abs(f.xHi(0) - fp.xLo(0)), std::abs(f.xLo(0) - fp.xHi(0)));
    const double rMin = std::max({0.0, fp.xLo(0) - f.xHi(0), f.xLo(0) - fp.xHi(0)});
    const double zLo = std::min(f.zLo(), fp.zLo()), zHi = std::max(f.zHi(), fp.zHi());
    const int nz = spec.nodesZ * scale;
    const RadialGrid outer = radialNodes(zLo, zHi, nz);
    const quad::Rule thT = quad::gaussLegendre(spec.nodesT * scale, 0.0, std::acos(-1.0));
    const quad::Rule thR = quad::gaussLegendre(spec.nodesR * scale, 0.0, std::acos(-1.0));

    const auto& A = f.terms();
    const auto& B = fp.terms();
    const std::size_t nb = B.size(), np = A.size() * nb;
    std::vector<CorrelationTable> tt, tx;
    for (const auto& ta : A)
      for (const auto& tb : B) {
        tt.emplace_back(ta.t, tb.t, corr);
        tx.emplace_back(ta.x[0], tb.x[0], corr);
      }
    std::vector<double> wz(np), ct(np);
    std::vector<cplx> total(kernels.size(), 0.0), vals(kernels.size());

    auto pairAt = [&](double z, double zp, double cell) {
      double any = 0.0;
      for (std::size_t i = 0; i < A.size(); ++i) {
        const double hz = A[i].z(z);
        for (std::size_t j = 0; j < nb; ++j) any += std::abs(wz[i * nb + j] = A[i].coef * B[j].coef * hz * B[j].z(zp));
      }
      if (any == 0.0) return;
      const double dm = std::abs(z - zp), dp = z + zp;
      std::vector<double> tcuts = {dLo, dHi};
      for (double c : {dm, dp, -dm, -dp})
        if (c > dLo && c < dHi) tcuts.push_back(c);
      const CosNodes tn = cosNodes(tcuts, thT);
      for (std::size_t k = 0; k < tn.v.size(); ++k) {
        const double dt = tn.v[k];
        double anyT = 0.0;
        for (std::size_t q = 0; q < np; ++q) anyT += std::abs(ct[q] = wz[q] == 0.0 ? 0.0 : wz[q] * tt[q](dt));
        if (anyT == 0.0) continue;
        std::vector<double> rcuts = {rMin, rMax};
        for (double c : {dm, dp}) {
          const double s2 = dt * dt - c * c;
          if (s2 > rMin * rMin && s2 < rMax * rMax) rcuts.push_back(std::sqrt(s2));
        }
        const CosNodes rn = cosNodes(rcuts, thR);
        const double cellT = cell * tn.w[k];
        for (std::size_t m = 0; m < rn.v.size(); ++m) {
          const double r = rn.v[m];
          double c = 0.0;
          for (std::size_t q = 0; q < np; ++q)
            if (ct[q] != 0.0) c += ct[q] * (tx[q](r) + tx[q](-r));
          if (c == 0.0) continue;
          const PairGeometry g{dt, r * r, z, zp};
          try {
            for (std::size_t kk = 0; kk < kernels.size(); ++kk) vals[kk] = kernels[kk](g, eps);
          } catch (const SingularPointError&) {
            continue;  // node landed on the cone to rounding
          }
          for (std::size_t kk = 0; kk < kernels.size(); ++kk) total[kk] += cellT * rn.w[m] * c * vals[kk];
        }
      }
    };

    for (std::size_t a = 0; a < outer.z.size(); ++a) {
      const double z = outer.z[a];
      const RadialGrid inner = radialNodes(zLo, z, nz);
      for (std::size_t b = 0; b < inner.z.size(); ++b) {
        const double cell = outer.w[a] * inner.w[b];
        pairAt(z, inner.z[b], cell);
        pairAt(inner.z[b], z, cell);
      }
    }
    return total;
  }
};

}  // namespace

RadialGrid radialNodes(double lo, double hi, int n) {
  RadialGrid g;
  if (lo <= 0.0) {
    const quad::Rule r = quad::gaussLegendre(n, 0.0, 1.0);
    for (int i = 0; i < n; ++i) {
      const double s = r.nodes[i];
      g.z.push_back(hi * s * s * s * s);
      g.w.push_back(r.weights[i] * 4.0 * hi * s * s * s);
    }
  } else {
    const quad::Rule r = quad::gaussLegendre(n, lo, hi);
    g.z = r.nodes;
    g.w = r.weights;
  }
  return g;
}

SmearResult smear2(const KernelFn& kernel, const TestFunction& f, const TestFunction& fp, const QuadratureSpec& quad,
                   double eps) {
  const Smearer s{f, fp, quad, eps};
  const cplx v = s.run({kernel}, 1)[0];
  const cplx v2 = quad.doubled ? s.run({kernel}, 2)[0] : v;
  return {v, v2};
}

std::vector<cplx> smear2Many(const std::vector<KernelFn>& kernels, const TestFunction& f, const TestFunction& fp,
                             const QuadratureSpec& quad, double eps) {
  return Smearer{f, fp, quad, eps}.run(kernels, 1);
}

double integrate(const TestFunction& f, int nodes) {
  const RadialGrid gz = radialGrid(f, nodes);
  double total = 0.0;
  for (const auto& term : f.terms()) {
    double v = term.coef;
    const quad::Rule rt = quad::gaussLegendre(nodes, term.t.lo(), term.t.hi());
    v *= quad::integrate(rt, [&](double t) { return term.t(t); });
    for (const auto& x : term.x) {
      const quad::Rule rx = quad::gaussLegendre(nodes, x.lo(), x.hi());
      v *= quad::integrate(rx, [&](double s) { return x(s); });
    }
    double zi = 0.0;
    for (std::size_t a = 0; a < gz.z.size(); ++a) zi += gz.w[a] * term.z(gz.z[a]);
    total += v * zi;
  }
  return total;
}

}  // namespace pads
