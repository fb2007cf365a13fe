#include "pads/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <tuple>

#include "pads/errors.hpp"
#include "pads/parallel.hpp"
#include "pads/quadrature.hpp"
#include "pads/specfun.hpp"

namespace pads::oracle {

namespace {

constexpr double kPi = std::numbers::pi;

// Accumulates panel contributions and stops once Wynn estimates over the trailing partial sums settle.
class PanelSeries {
 public:
  PanelSeries(double relTol, int window) : relTol_(relTol), window_(window) {}

  void add(double v) {
    sum_ += v;
    sums_.push_back(sum_);
    scale_ = std::max(scale_, std::abs(sum_));
  }

  // True when the accelerated value is stable; checked every half window.
  bool converged() {
    const int n = static_cast<int>(sums_.size());
    if (n < 2 * window_ || n % (window_ / 2) != 0) return false;
    const std::vector<cplx> tail(sums_.end() - window_, sums_.end());
    const double est = quad::wynnEpsilon(tail).real();
    const bool ok = hasPrev_ && std::abs(est - prev_) <= relTol_ * std::max(std::abs(est), 1e-3 * scale_);
    prev_ = est;
    hasPrev_ = true;
    return ok;
  }

  double estimate() const { return hasPrev_ ? prev_ : sum_; }
  double sum() const { return sum_; }
  int panels() const { return static_cast<int>(sums_.size()); }

 private:
  double relTol_;
  int window_;
  double sum_ = 0.0;
  double scale_ = 0.0;
  double prev_ = 0.0;
  bool hasPrev_ = false;
  std::vector<cplx> sums_;
};

const quad::Rule& gl10() {
  static const quad::Rule r = quad::gaussLegendre(10);
  return r;
}

template <class F>
double panel(F&& f, double a, double b) {
  const auto& r = gl10();
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) s += r.weights[i] * f(mid + half * r.nodes[i]);
  return half * s;
}

// Panel with the cosine map, for an inverse square-root or square-root endpoint at a.
template <class F>
double panelCos(F&& f, double a, double b) {
  const auto& r = gl10();
  // k = a + (b - a)(1 - cos theta), theta in [0, pi/2]
  double s = 0.0;
  for (std::size_t i = 0; i < r.nodes.size(); ++i) {
    const double th = 0.25 * kPi * (1.0 + r.nodes[i]);
    s += r.weights[i] * f(a + (b - a) * (1.0 - std::cos(th))) * (b - a) * std::sin(th);
  }
  return 0.25 * kPi * s;
}

constexpr int kMaxPanels = 40000;

}  // namespace

double iEps(double q, double r, double dt, double eps, int d) {
  if (!(eps > 0.0)) throw DomainError("iEps needs eps > 0");
  if (!(r >= 0.0)) throw DomainError("iEps needs r >= 0");
  if (d < 2) throw DomainError("iEps needs d >= 2");
  if (q == 0.0 || !std::isfinite(q)) throw DomainError("iEps needs q != 0");
  if (dt == 0.0) return 0.0;
  const double mu = 0.5 * (d - 3);
  const bool bound = q < 0.0;
  const double q2 = q * q;
  const double rNorm = std::pow(2.0, -mu) / specfun::gammaFn(mu + 1.0);

  auto weight = [&](double k) {
    if (d == 2) return std::sqrt(2.0 / kPi) * std::cos(k * r);
    if (r == 0.0) return k * std::pow(k, 2.0 * mu) * rNorm;
    if (k == 0.0) return 0.0;
    return k * std::pow(k / r, mu) * specfun::besselJ(mu, k * r);
  };
  // Below threshold the frequency is imaginary; that finite range carries no damping.
  auto temporal = [&](double k) {
    if (bound && k < -q) {
      const double w = std::sqrt(q2 - k * k);
      return w == 0.0 ? dt : std::sinh(w * dt) / w;
    }
    const double w = std::sqrt(bound ? k * k - q2 : k * k + q2);
    if (w == 0.0) return dt;
    return std::sin(w * dt) * std::exp(-eps * w) / w;
  };
  auto integrand = [&](double k) { return weight(k) * temporal(k); };

  const double h = std::min(kPi / std::max(r + std::abs(dt), 1e-6), 2.0 / eps);
  const double aq = std::abs(q);
  PanelSeries series(1e-11, 40);
  double k = 0.0;
  if (bound) {
    // Split at threshold; both sides have square-root behaviour there.
    double a = 0.0;
    while (a < aq) {
      const double b = std::min(aq, a + std::min(h, 0.5 * aq));
      series.add(b == aq ? panelCos([&](double s) { return integrand(aq - s); }, 0.0, b - a) : panel(integrand, a, b));
      a = b;
    }
    const double b = aq + std::min(h, 0.5 * aq);
    series.add(panelCos([&](double s) { return integrand(aq + s); }, 0.0, b - aq));
    k = b;
  }
  while (true) {
    const double step = k < 4.0 * aq ? std::min(h, 0.5 * aq) : h;
    series.add(panel(integrand, k, k + step));
    k += step;
    if (eps * k > 40.0) return -std::pow(2.0 * kPi, -0.5 * (d - 1)) * q * series.sum();
    if (series.converged()) return -std::pow(2.0 * kPi, -0.5 * (d - 1)) * q * series.estimate();
    if (series.panels() > kMaxPanels)
      throw QuadratureError("iEps tail did not converge (q=" + std::to_string(q) + ", r=" + std::to_string(r) +
                            ", dt=" + std::to_string(dt) + ", eps=" + std::to_string(eps) + ")");
  }
}

double modeSumG(const ModelParams& params, const BoundaryCondition& bc, const PairGeometry& g, double eps) {
  if (!(eps > 0.0)) throw DomainError("modeSumG needs eps > 0");
  const double nu = params.nu;
  if (nu >= 1.0 && !bc.isDirichlet())
    throw NotSquareIntegrableError("only the Dirichlet condition is admissible for nu >= 1");
  const double r = std::sqrt(g.r2);
  auto radial = [&](double q) {
    return psiBare(bc, nu, q, g.z) * psiBare(bc, nu, q, g.zp) / normDenominator(bc, nu, q);
  };
  auto integrand = [&](double q) {
    if (q <= 0.0) return 0.0;
    return iEps(q, r, g.dt, 2.0 * eps, params.d) * radial(q);
  };
  const double h = kPi / (g.z + g.zp + std::abs(g.dt) + r);
  PanelSeries series(1e-7, 40);
  // q = h s^2 on the first panel absorbs the q^{1 - 2 nu} endpoint.
  series.add(panel([&](double s) { return integrand(h * s * s) * 2.0 * h * s; }, 0.0, 1.0));
  double q = h;
  double value = 0.0;
  while (true) {
    series.add(panel(integrand, q, q + h));
    q += h;
    if (eps * q > 40.0) {
      value = series.sum();
      break;
    }
    if (series.converged()) {
      value = series.estimate();
      break;
    }
    if (series.panels() > kMaxPanels) throw QuadratureError("mode sum over q did not converge");
  }
  value *= std::sqrt(g.z * g.zp);
  if (const auto kappa = boundStateKappa(bc, nu)) {
    const double k = *kappa;
    value += 2.0 * iEps(-k, r, g.dt, 2.0 * eps, params.d) * specfun::besselK(nu, k * g.z) *
             specfun::besselK(nu, k * g.zp);
  }
  return value;
}

cplx pdeResidual(const KernelFn& kernel, const ModelParams& params, const SpacetimePoint& x,
                 const SpacetimePoint& xp, double h, int side, double eps) {
  if (!(h > 0.0)) throw DomainError("stencil step must be positive");
  const SpacetimePoint& moving = side == 0 ? x : xp;
  if (moving.z() - h <= 0.0) throw StencilError("stencil crosses the boundary z = 0");
  auto eval = [&](double dtShift, std::size_t axis, double dxShift, double dzShift) {
    std::vector<double> xs = moving.x();
    if (!xs.empty() && dxShift != 0.0) xs[axis] += dxShift;
    const SpacetimePoint m(moving.t() + dtShift, xs, moving.z() + dzShift);
    return side == 0 ? kernel(PairGeometry::of(m, xp), eps) : kernel(PairGeometry::of(x, m), eps);
  };
  const cplx c = eval(0, 0, 0, 0);
  const double h2 = h * h;
  cplx res = -(eval(h, 0, 0, 0) - 2.0 * c + eval(-h, 0, 0, 0)) / h2;
  for (std::size_t i = 0; i < moving.x().size(); ++i) res += (eval(0, i, h, 0) - 2.0 * c + eval(0, i, -h, 0)) / h2;
  res += (eval(0, 0, 0, h) - 2.0 * c + eval(0, 0, 0, -h)) / h2;
  res -= params.msq / (moving.z() * moving.z()) * c;
  return res;
}

double symplecticForm(const TestFunction& f, const TestFunction& fp, const ModelParams& params,
                      const BoundaryCondition& bc, const QuadratureSpec& quad) {
  const PropagatorModel model(params, bc);
  const KernelFn g = onH(model.propagatorFn(), params.d);
  QuadratureSpec q = quad;
  q.doubled = false;
  return smear2(g, f, fp, q).value.real();
}

namespace {

// Gauss-Legendre in theta over [p, q] with t = mid - half cos(theta); absorbs inverse square roots at both ends.
template <class F>
double cosPanels(F&& f, std::vector<double> cuts, const quad::Rule& th) {
  std::sort(cuts.begin(), cuts.end());
  double sum = 0.0;
  for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
    const double p = cuts[k], q = cuts[k + 1];
    if (!(q > p)) continue;
    const double mid = 0.5 * (p + q), half = 0.5 * (q - p);
    for (std::size_t n = 0; n < th.nodes.size(); ++n) {
      const double theta = th.nodes[n];
      sum += half * std::sin(theta) * th.weights[n] * f(mid - half * std::cos(theta));
    }
  }
  return sum;
}

// Time cuts inside [lo, hi] where the kernel centred at tc meets the direct or reflected cone.
std::vector<double> coneCuts(double lo, double hi, double tc, double rho2Direct, double rho2Reflected) {
  std::vector<double> cuts = {lo, hi};
  for (double r2 : {rho2Direct, rho2Reflected}) {
    const double rho = std::sqrt(r2);
    for (double c : {tc - rho, tc + rho})
      if (c > lo && c < hi) cuts.push_back(c);
  }
  return cuts;
}

// Off-cone nodes can still round onto a null cone; those measure-zero points are dropped.
double realOffCone(const KernelFn& k, const PairGeometry& g) {
  try {
    return k(g, 0.0).real();
  } catch (const SingularPointError&) {
    return 0.0;
  }
}

struct PointSmearer {
  const KernelFn& kernel;  // on H, boundary values
  int nodesZ = 32;
  int nodesX = 16;
  quad::Rule theta = quad::gaussLegendre(16, 0.0, kPi);

  // G(f)(t, x, z) = int G(x, y) f(y) dy.
  double operator()(const TestFunction& f, double t, double x, double z) const {
    double total = 0.0;
    for (const auto& term : f.terms()) {
      const double dx = std::max({0.0, term.x[0].lo() - x, x - term.x[0].hi()});
      const double dz = std::max({0.0, term.z.lo() - z, z - term.z.hi()});
      if (std::hypot(dx, dz) >= std::max(std::abs(t - term.t.lo()), std::abs(t - term.t.hi()))) continue;
      const RadialGrid gz = radialNodes(term.z.lo(), term.z.hi(), nodesZ);
      const quad::Rule rx = quad::gaussLegendre(nodesX, term.x[0].lo(), term.x[0].hi());
      for (std::size_t a = 0; a < gz.z.size(); ++a) {
        const double zp = gz.z[a];
        const double hz = term.z(zp);
        if (hz == 0.0) continue;
        for (std::size_t b = 0; b < rx.nodes.size(); ++b) {
          const double xp = rx.nodes[b];
          const double hx = term.x[0](xp);
          if (hx == 0.0) continue;
          const double r2 = (x - xp) * (x - xp);
          const auto cuts = coneCuts(term.t.lo(), term.t.hi(), t, r2 + (z - zp) * (z - zp), r2 + (z + zp) * (z + zp));
          const double it = cosPanels(
              [&](double tp) { return term.t(tp) * realOffCone(kernel, PairGeometry{t - tp, r2, z, zp}); }, cuts, theta);
          total += term.coef * gz.w[a] * rx.weights[b] * hz * hx * it;
        }
      }
    }
    return total;
  }
};

// Chebyshev interpolant on [lo, hi] from values at the first-kind nodes.
class Chebyshev {
 public:
  static std::vector<double> nodes(int n, double lo, double hi) {
    std::vector<double> t(n);
    for (int k = 0; k < n; ++k) t[k] = 0.5 * (lo + hi) + 0.5 * (hi - lo) * std::cos(kPi * (k + 0.5) / n);
    return t;
  }
  Chebyshev(const std::vector<double>& values, double lo, double hi) : lo_(lo), hi_(hi), c_(values.size()) {
    const int n = static_cast<int>(values.size());
    for (int j = 0; j < n; ++j) {
      double s = 0.0;
      for (int k = 0; k < n; ++k) s += values[k] * std::cos(kPi * j * (k + 0.5) / n);
      c_[j] = 2.0 * s / n;
    }
    c_[0] *= 0.5;
  }
  // Value and t-derivative.
  std::pair<double, double> eval(double t) const {
    const double x = (2.0 * t - lo_ - hi_) / (hi_ - lo_);
    double T0 = 1.0, T1 = x, U0 = 1.0, U1 = 2.0 * x;  // T_j and U_j
    double v = c_[0], dv = 0.0;
    if (c_.size() > 1) {
      v += c_[1] * x;
      dv += c_[1];
    }
    for (std::size_t j = 2; j < c_.size(); ++j) {
      const double T2 = 2.0 * x * T1 - T0;
      v += c_[j] * T2;
      dv += c_[j] * static_cast<double>(j) * U1;  // T_j' = j U_{j-1}
      T0 = T1;
      T1 = T2;
      const double U2 = 2.0 * x * U1 - U0;
      U0 = U1;
      U1 = U2;
    }
    return {v, dv * 2.0 / (hi_ - lo_)};
  }

 private:
  double lo_, hi_;
  std::vector<double> c_;
};

// Barycentric weights for the first-kind Chebyshev nodes, evaluated at y.
std::vector<double> chebyshevBary(const std::vector<double>& nodes, double y) {
  const std::size_t n = nodes.size();
  std::vector<double> w(n, 0.0);
  for (std::size_t j = 0; j < n; ++j)
    if (y == nodes[j]) {
      w[j] = 1.0;
      return w;
    }
  double total = 0.0;
  for (std::size_t j = 0; j < n; ++j) {
    const double lam = ((j % 2) ? -1.0 : 1.0) * std::sin(kPi * (j + 0.5) / static_cast<double>(n));
    w[j] = lam / (y - nodes[j]);
    total += w[j];
  }
  for (double& v : w) v /= total;
  return w;
}

// G(f) sampled on a Chebyshev (t, x, z) grid over the slab.
class SlabTable {
 public:
  SlabTable(const PointSmearer& apply, const TestFunction& f, double tl, double th, double xlo, double xhi, double zhi,
            int nt, int nx, int nz)
      : tl_(tl), th_(th), xlo_(xlo), xhi_(xhi), zhi_(zhi), tn_(Chebyshev::nodes(nt, tl, th)),
        xn_(Chebyshev::nodes(nx, xlo, xhi)), zn_(Chebyshev::nodes(nz, 0.0, zhi)),
        v_(static_cast<std::size_t>(nt) * nx * nz) {
    parallelFor(xn_.size() * zn_.size(), [&](std::size_t col) {
      const std::size_t i = col / zn_.size(), j = col % zn_.size();
      for (std::size_t k = 0; k < tn_.size(); ++k) v_[index(k, i, j)] = apply(f, tn_[k], xn_[i], zn_[j]);
    });
    for (double v : v_) scale_ = std::max(scale_, std::abs(v));
  }

  double scale() const { return scale_; }
  bool covers(double x, double z) const { return x >= xlo_ && x <= xhi_ && z > 0.0 && z <= zhi_; }

  // G(f) along t at (x, z) as a Chebyshev series over the slab.
  Chebyshev column(double x, double z) const {
    const std::vector<double> bx = chebyshevBary(xn_, x), bz = chebyshevBary(zn_, z);
    std::vector<double> vals(tn_.size(), 0.0);
    for (std::size_t k = 0; k < tn_.size(); ++k) {
      double s = 0.0;
      for (std::size_t i = 0; i < xn_.size(); ++i) {
        if (bx[i] == 0.0) continue;
        double sz = 0.0;
        for (std::size_t j = 0; j < zn_.size(); ++j) sz += bz[j] * v_[index(k, i, j)];
        s += bx[i] * sz;
      }
      vals[k] = s;
    }
    return Chebyshev(vals, tl_, th_);
  }

 private:
  std::size_t index(std::size_t k, std::size_t i, std::size_t j) const { return (k * xn_.size() + i) * zn_.size() + j; }

  double tl_, th_, xlo_, xhi_, zhi_;
  std::vector<double> tn_, xn_, zn_, v_;
  double scale_ = 0.0;
};

}  // namespace

TimeSliceReport timeSliceSurrogate(const TestFunction& f, const TimeSliceSetup& setup, const ModelParams& params,
                                   const BoundaryCondition& bc, const std::vector<SpacetimePoint>& samples) {
  if (params.d != 2) throw DomainError("time-slice surrogate is implemented for d = 2");
  if (!(setup.halfWidth > 0.0)) throw DomainError("slab half-width must be positive");
  if (setup.gridT < 8 || setup.gridX < 8 || setup.gridZ < 8) throw ResolutionError("time-slice grids need >= 8 nodes");
  const PropagatorModel model(params, bc);
  const KernelFn G = onH(model.propagatorFn(), 2);
  const PointSmearer apply{G};

  const double tl = setup.tBar - setup.halfWidth, th = setup.tBar + setup.halfWidth;
  for (const auto& s : samples) {
    if (s.x().size() != 1) throw DomainError("time-slice samples must have d = 2");
    if (s.t() >= tl && s.t() <= th) throw DomainError("time-slice samples must lie outside the slab");
  }
  const Profile1D step = Profile1D::plateau(0.0, th - tl);
  // chi_+ = 1 - step(t - tl): zero before the slab, one after.
  auto chi1 = [&](double t) { return -step.value(t - tl, 1); };
  auto chi2 = [&](double t) { return -step.value(t - tl, 2); };

  const double travel = std::max(std::abs(th - f.tLo()), std::abs(f.tHi() - tl));
  const SlabTable table(apply, f, tl, th, f.xLo(0) - travel, f.xHi(0) + travel, f.zHi() + travel, setup.gridT,
                        setup.gridX, setup.gridZ);
  // Off-grid check at points inside the support.
  for (const auto& [ft, fx, fz] : {std::tuple{0.37, 0.41, 0.53}, std::tuple{-0.61, 0.58, 0.29}}) {
    const double x = f.xLo(0) + fx * (f.xHi(0) - f.xLo(0)), z = fz * (f.zHi() + 0.5 * travel);
    const double t = setup.tBar + ft * setup.halfWidth;
    if (std::abs(apply(f, t, x, z) - table.column(x, z).eval(t).first) > 1e-3 * std::max(table.scale(), 1e-300))
      throw ResolutionError("slab grid too coarse for G(f)");
  }

  const quad::Rule theta = quad::gaussLegendre(16, 0.0, kPi);
  TimeSliceReport rep{0.0, 0.0};
  for (const auto& s : samples) {
    const double ts = s.t(), xs = s.x()[0], zs = s.z();
    const double dmin = ts > th ? ts - th : tl - ts, dmax = ts > th ? ts - tl : th - ts;
    // Column integral over the slab at (x, z).
    auto column = [&](double x, double z) {
      if (!table.covers(x, z)) return 0.0;
      const Chebyshev col = table.column(x, z);
      const double r2 = (xs - x) * (xs - x);
      const auto cuts = coneCuts(tl, th, ts, r2 + (zs - z) * (zs - z), r2 + (zs + z) * (zs + z));
      return cosPanels(
          [&](double t) {
            const auto [v, dv] = col.eval(t);
            const double g = -chi2(t) * v - 2.0 * chi1(t) * dv;
            if (g == 0.0) return 0.0;
            return realOffCone(G, PairGeometry{ts - t, r2, zs, z}) * g;
          },
          cuts, theta);
    };
    // Polar coordinates about the sample; the slab lies at distances [dmin, dmax] along the cone.
    std::vector<double> rcuts = {0.0, dmin, 0.5 * (dmin + dmax), dmax};
    if (zs > 0.0 && zs < dmax) rcuts.push_back(zs);
    std::sort(rcuts.begin(), rcuts.end());
    double gg = 0.0;
    for (std::size_t c = 0; c + 1 < rcuts.size(); ++c) {
      if (!(rcuts[c + 1] > rcuts[c])) continue;
      const quad::Rule rr = quad::gaussLegendre(setup.gridRadial, rcuts[c], rcuts[c + 1]);
      for (std::size_t a = 0; a < rr.nodes.size(); ++a) {
        const double rho = rr.nodes[a];
        // Angles with z = zs + rho sin(theta) > 0.
        const double cut = rho > zs ? std::asin(zs / rho) : 0.5 * kPi;
        const quad::Rule ra = quad::gaussLegendre(setup.gridAngle, -cut, kPi + cut);
        double ring = 0.0;
        for (std::size_t b = 0; b < ra.nodes.size(); ++b) {
          const double x = xs + rho * std::cos(ra.nodes[b]), z = zs + rho * std::sin(ra.nodes[b]);
          ring += ra.weights[b] * column(x, z);
        }
        gg += rr.weights[a] * rho * ring;
      }
    }
    const double gf = apply(f, ts, xs, zs);
    rep.residual = std::max(rep.residual, std::abs(gf - gg));
    rep.scale = std::max(rep.scale, std::abs(gf));
  }
  return rep;
}

namespace {

// e^{-x} I_0(x), x >= 0.
double besselI0Scaled(double x) {
  if (x < 600.0) return std::cyl_bessel_i(0.0, x) * std::exp(-x);
  return 1.0 / std::sqrt(2.0 * kPi * x) * (1.0 + 1.0 / (8.0 * x));
}

struct EqualTimePairing {
  const GaussianProfile& f;
  const GaussianProfile& fp;
  KernelFn G;
  quad::Rule rz;

  EqualTimePairing(const GaussianProfile& a, const GaussianProfile& b, KernelFn k)
      : f(a), fp(b), G(std::move(k)),
        rz(quad::gaussLegendre(32, std::max(0.0, a.centre[2] - 7.0 * a.width), a.centre[2] + 7.0 * a.width)) {}

  // Angle-averaged transverse correlation of the two Gaussians at separation r.
  double transverse(double r) const {
    const double w2 = f.width * f.width, wp2 = fp.width * fp.width, S2 = w2 + wp2;
    const double m = std::hypot(f.centre[0] - fp.centre[0], f.centre[1] - fp.centre[1]);
    return 2.0 * kPi * w2 * wp2 / S2 * std::exp(-(r - m) * (r - m) / (2.0 * S2)) * besselI0Scaled(r * m / S2);
  }

  double radial(const GaussianProfile& g, double z) const {
    const double s = (z - g.centre[2]) / g.width;
    return std::exp(-0.5 * s * s);
  }

  // int f(y) G(dt; y, y') f'(y') dy dy' at regulator eps. The z' integral runs over s = z' - z,
  // graded towards the cone crossings |s| = |dt| and |z + z'| = |dt| where G concentrates.
  double at(double dt, double eps) const {
    const double S = std::sqrt(f.width * f.width + fp.width * fp.width);
    const double m = std::hypot(f.centre[0] - fp.centre[0], f.centre[1] - fp.centre[1]);
    const double rMax = m + 9.0 * S;
    const double zpLo = std::max(0.0, fp.centre[2] - 7.0 * fp.width);
    const double zpHi = fp.centre[2] + 7.0 * fp.width;
    const double adt = std::abs(dt);
    const quad::Rule unit = quad::gaussLegendre(12, -1.0, 1.0);
    double total = 0.0;
    for (std::size_t a = 0; a < rz.nodes.size(); ++a) {
      const double z = rz.nodes[a];
      const double lo = zpLo - z, hi = zpHi - z;
      std::vector<double> cuts = {lo, hi};
      for (double c : {adt, -adt, adt - 2.0 * z, -adt - 2.0 * z}) {
        cuts.push_back(c);
        for (double g = eps; g < 0.5; g *= 4.0) {
          cuts.push_back(c - g);
          cuts.push_back(c + g);
        }
      }
      std::sort(cuts.begin(), cuts.end());
      double middle = 0.0;
      for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
        const double p = std::max(cuts[k], lo), q = std::min(cuts[k + 1], hi);
        if (!(q > p)) continue;
        const double mid = 0.5 * (p + q), half = 0.5 * (q - p);
        for (std::size_t n = 0; n < unit.nodes.size(); ++n) {
          const double zp = z + mid + half * unit.nodes[n];
          middle += half * unit.weights[n] * radial(fp, zp) * inner(dt, eps, z, zp, rMax);
        }
      }
      total += rz.weights[a] * radial(f, z) * middle;
    }
    return total;
  }

  // r integral at fixed (z, z'), split at the cone radii.
  double inner(double dt, double eps, double z, double zp, double rMax) const {
    std::vector<double> cuts = {0.0, rMax};
    for (double dz : {z - zp, z + zp}) {
      const double s2 = dt * dt - dz * dz;
      if (s2 > 0.0 && std::sqrt(s2) < rMax) cuts.push_back(std::sqrt(s2));
    }
    std::sort(cuts.begin(), cuts.end());
    double sum = 0.0;
    for (std::size_t k = 0; k + 1 < cuts.size(); ++k) {
      const auto res = quad::tanhSinh(
          [&](double r) { return cplx(2.0 * kPi * r * transverse(r) * G(PairGeometry{dt, r * r, z, zp}, eps).real()); },
          cuts[k], cuts[k + 1], 1e-10, 9);
      sum += res.value.real();
    }
    return sum;
  }

  double extrapolated(double dt, const std::vector<double>& ladder) const {
    std::vector<cplx> v;
    for (double e : ladder) v.push_back(at(dt, e));
    return quad::richardson(ladder, v, 1.0).real();
  }
};

}  // namespace

EqualTimeReport equalTimeChecks(const GaussianProfile& f, const GaussianProfile& fp, const ModelParams& params,
                                const BoundaryCondition& bc) {
  if (params.d != 3 || f.centre.size() != 3 || fp.centre.size() != 3)
    throw DomainError("equal-time checks are implemented for d = 3");
  if (!(f.width > 0.0 && fp.width > 0.0)) throw DomainError("Gaussian widths must be positive");
  const PropagatorModel model(params, bc);
  const EqualTimePairing pairing(f, fp, onH(model.propagatorFn(), 3));

  const double w = std::min(f.width, fp.width);
  const std::vector<double> steps = {0.4 * w, 0.2 * w, 0.1 * w};
  std::vector<cplx> diffs;
  for (double h : steps) {
    const std::vector<double> ladder = {1e-2 * h, 5e-3 * h, 2.5e-3 * h};
    // d/dt' = -d/d(dt)
    diffs.push_back(-(pairing.extrapolated(h, ladder) - pairing.extrapolated(-h, ladder)) / (2.0 * h));
  }
  EqualTimeReport rep{};
  rep.commutatorAtEqualTime = pairing.extrapolated(0.0, kEpsLadder);
  rep.timeDerivativePairing = quad::richardson(steps, diffs, 2.0, 2.0).real();

  // Direct quadrature of int f f' over the slice z > 0.
  const quad::Rule rx = quad::gaussLegendre(64, -1.0, 1.0);
  double overlap = 1.0;
  for (int i = 0; i < 3; ++i) {
    double lo = std::min(f.centre[i] - 8.0 * f.width, fp.centre[i] - 8.0 * fp.width);
    const double hi = std::max(f.centre[i] + 8.0 * f.width, fp.centre[i] + 8.0 * fp.width);
    if (i == 2) lo = std::max(lo, 0.0);
    const double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
    double s = 0.0;
    for (std::size_t n = 0; n < rx.nodes.size(); ++n) {
      const double y = mid + half * rx.nodes[n];
      const double u = (y - f.centre[i]) / f.width, v = (y - fp.centre[i]) / fp.width;
      s += half * rx.weights[n] * std::exp(-0.5 * (u * u + v * v));
    }
    overlap *= s;
  }
  rep.overlap = overlap;
  return rep;
}

}  // namespace pads::oracle
