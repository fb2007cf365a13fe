#include "pads/wavefront.hpp"

#include <algorithm>
#include <cmath>

#include "pads/errors.hpp"

namespace pads::wavefront {

namespace {

double norm(const std::vector<double>& v) {
  double s = 0.0;
  for (double c : v) s += c * c;
  return std::sqrt(s);
}

std::vector<double> separation(const SpacetimePoint& from, const SpacetimePoint& to, bool reflected) {
  std::vector<double> d = {to.t() - from.t()};
  for (std::size_t i = 0; i < from.x().size(); ++i) d.push_back(to.x()[i] - from.x()[i]);
  d.push_back(reflected ? to.z() + from.z() : to.z() - from.z());
  return d;
}

// k null, delta parallel to the dual of k, and k' = -k.
bool transported(const std::vector<double>& delta, const std::vector<double>& k, const std::vector<double>& kp,
                 double tol) {
  const double n = norm(k);
  if (std::abs(flatNorm(k)) > tol * n * n) return false;
  const std::vector<double> v = flat(k);
  double dv = 0.0, vv = 0.0;
  for (std::size_t i = 0; i < v.size(); ++i) {
    dv += delta[i] * v[i];
    vv += v[i] * v[i];
  }
  std::vector<double> perp(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) perp[i] = delta[i] - dv / vv * v[i];
  if (norm(perp) > tol * std::max(1.0, norm(delta))) return false;
  std::vector<double> sum(k.size());
  for (std::size_t i = 0; i < k.size(); ++i) sum[i] = kp[i] + k[i];
  return norm(sum) <= tol * n;
}

}  // namespace

CovectorPoint::CovectorPoint(SpacetimePoint point, std::vector<double> covector)
    : x(std::move(point)), k(std::move(covector)) {
  if (k.size() != x.x().size() + 2) throw DomainError("covector dimension does not match the point");
  if (norm(k) == 0.0) throw DomainError("covector must be nonzero");
}

std::vector<double> mirrored(const std::vector<double>& k) {
  std::vector<double> m = k;
  if (!m.empty()) m.back() = -m.back();
  return m;
}

bool futurePointing(const std::vector<double>& k) { return !k.empty() && k.front() < 0.0; }

CommutatorRelation wfPredicateCommutator(const CovectorPoint& a, const CovectorPoint& b, double tol) {
  if (a.k.size() != b.k.size()) throw DomainError("covector dimensions differ");
  return {transported(separation(a.x, b.x, false), a.k, b.k, tol),
          transported(separation(a.x, b.x, true), mirrored(a.k), b.k, tol)};
}

bool wfPredicateState(const CovectorPoint& a, const CovectorPoint& b, double tol) {
  const CommutatorRelation r = wfPredicateCommutator(a, b, tol);
  return (r.direct || r.reflected) && futurePointing(a.k);
}

SpacetimePoint ScanPath::at(double s) const {
  std::vector<double> xs = from.x();
  for (std::size_t i = 0; i < xs.size(); ++i) xs[i] += s * (to.x()[i] - from.x()[i]);
  return {from.t() + s * (to.t() - from.t()), xs, from.z() + s * (to.z() - from.z())};
}

namespace {

// Signed distance to the locus: 1 - u for the direct crossing, u for the reflected one.
double offset(const ScanPath& path, double s, bool direct) {
  const CrossRatio cr = path.pair(s).uEps(0.0);
  return direct ? cr.oneMinusU.real() : cr.u.real();
}

double bisect(const ScanPath& path, bool direct, double a, double b, double target) {
  double fa = offset(path, a, direct) - target;
  for (int it = 0; it < 200 && b - a > 1e-16 * std::max(1.0, std::abs(a)); ++it) {
    const double m = 0.5 * (a + b);
    const double fm = offset(path, m, direct) - target;
    if ((fm < 0.0) == (fa < 0.0)) {
      a = m;
      fa = fm;
    } else {
      b = m;
    }
  }
  return 0.5 * (a + b);
}

}  // namespace

std::vector<SingularFit> singularScanAndFit(const KernelFn& kernel, const ScanPath& path,
                                            const std::vector<double>& epsLadder, const ScanOptions& opt) {
  if (epsLadder.empty()) throw DomainError("empty eps ladder");
  if (opt.coarseSamples < 4 || opt.fitSamples < 3) throw DomainError("scan needs more samples");
  const double eps = *std::min_element(epsLadder.begin(), epsLadder.end());
  std::vector<SingularFit> fits;
  for (bool direct : {true, false}) {
    double prevS = 0.0, prevF = offset(path, 0.0, direct);
    for (int i = 1; i <= opt.coarseSamples; ++i) {
      const double s = static_cast<double>(i) / opt.coarseSamples;
      const double f = offset(path, s, direct);
      if ((f < 0.0) != (prevF < 0.0) && f != 0.0 && prevF != 0.0) {
        const double sStar = bisect(path, direct, prevS, s, 0.0);
        double wMax = std::min({opt.windowMax, 0.5 * std::abs(f), 0.5 * std::abs(prevF)});
        const double wMin = std::max(10.0 * eps, 1e-3 * wMax);
        if (!(wMax > wMin)) throw FitError("fit window is empty at the crossing (eps too large)");
        std::vector<double> lx, ly;
        for (const auto& [end, fEnd] : {std::pair{prevS, prevF}, std::pair{s, f}}) {
          for (int k = 0; k < opt.fitSamples; ++k) {
            const double delta = wMin * std::pow(wMax / wMin, static_cast<double>(k) / (opt.fitSamples - 1));
            const double target = fEnd > 0.0 ? delta : -delta;
            const double sk = end < sStar ? bisect(path, direct, end, sStar, target) : bisect(path, direct, sStar, end, target);
            const double mag = std::abs(kernel(path.pair(sk), eps));
            lx.push_back(std::log(std::abs(offset(path, sk, direct))));
            ly.push_back(std::log(mag));
          }
        }
        const double n = static_cast<double>(lx.size());
        double sx = 0, sy = 0, sxx = 0, sxy = 0;
        for (std::size_t k = 0; k < lx.size(); ++k) {
          sx += lx[k];
          sy += ly[k];
          sxx += lx[k] * lx[k];
          sxy += lx[k] * ly[k];
        }
        const double p = (n * sxy - sx * sy) / (n * sxx - sx * sx);
        const double a = (sy - p * sx) / n;
        double rss = 0.0;
        for (std::size_t k = 0; k < lx.size(); ++k) rss += std::pow(ly[k] - a - p * lx[k], 2);
        SingularFit fit{direct ? 1.0 : 0.0, sStar, p, std::exp(a), wMin, wMax, std::sqrt(rss / n)};
        if (!(fit.quality <= kFitQualityMax))
          throw FitError("poor singular fit at u = " + std::to_string(fit.uStar) + ": exponent " + std::to_string(p) +
                         ", rms " + std::to_string(fit.quality));
        fits.push_back(fit);
      }
      prevS = s;
      prevF = f;
    }
  }
  std::sort(fits.begin(), fits.end(), [](const SingularFit& a, const SingularFit& b) { return a.sStar < b.sStar; });
  return fits;
}

double coefficientRatio(const std::vector<SingularFit>& fits) {
  const auto one = std::find_if(fits.begin(), fits.end(), [](const SingularFit& f) { return f.uStar == 1.0; });
  const auto zero = std::find_if(fits.begin(), fits.end(), [](const SingularFit& f) { return f.uStar == 0.0; });
  if (one == fits.end() || zero == fits.end()) throw FitError("coefficient ratio needs both crossings");
  return std::abs(zero->coefficient) / std::abs(one->coefficient);
}

RestrictionReport hadamardRestrictionCheck(const ModelParams& params, const BoundaryCondition& bc,
                                           const BoundaryCondition& reference, const ScanPath& region, int samples) {
  if (samples < 8) throw DomainError("restriction check needs at least 8 samples");
  std::vector<double> s(samples);
  for (int i = 0; i < samples; ++i) {
    s[i] = static_cast<double>(i) / (samples - 1);
    if (offset(region, s[i], false) <= 1e-3) throw RegionError("region reaches the reflected singular locus");
  }
  const PropagatorModel m(params, bc), ref(params, reference);
  std::vector<cplx> diff(samples), own(samples);
  const double h = 1.0 / (samples - 1);
  for (int i = 0; i < samples; ++i) {
    PairGeometry g = region.pair(s[i]);
    if (offset(region, s[i], true) == 0.0) g = region.pair(s[i] + 1e-9);
    own[i] = m.omega(g, 0.0);
    diff[i] = own[i] - ref.omega(g, 0.0);
  }
  auto fourth = [&](const std::vector<cplx>& v) {
    double mx = 0.0;
    for (int i = 0; i + 4 < samples; ++i)
      mx = std::max(mx, std::abs(v[i] - 4.0 * v[i + 1] + 6.0 * v[i + 2] - 4.0 * v[i + 3] + v[i + 4]) / std::pow(h, 4));
    return mx;
  };
  return {fourth(diff), fourth(own)};
}

}  // namespace pads::wavefront
