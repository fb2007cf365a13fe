#include "pads/quadrature.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <numbers>

#include "pads/errors.hpp"

namespace pads::quad {

Rule gaussLegendre(int n) {
  if (n < 1) throw DomainError("gaussLegendre: need at least one node");
  Rule r;
  if (n == 1) return Rule{{0.0}, {2.0}};
  r.nodes.resize(n);
  r.weights.resize(n);
  for (int i = 0; i < (n + 1) / 2; ++i) {
    double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
    double dp;
    for (int it = 0; it < 100; ++it) {
      double p0 = 1.0, p1 = x;
      for (int k = 2; k <= n; ++k) {
        double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
        p0 = p1;
        p1 = p2;
      }
      dp = n * (x * p1 - p0) / (x * x - 1.0);
      double dx = p1 / dp;
      x -= dx;
      if (std::abs(dx) < 1e-16) break;
    }
    // Recompute the derivative at the converged node.
    double p0 = 1.0, p1 = x;
    for (int k = 2; k <= n; ++k) {
      double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
      p0 = p1;
      p1 = p2;
    }
    dp = n * (x * p1 - p0) / (x * x - 1.0);
    double w = 2.0 / ((1.0 - x * x) * dp * dp);
    r.nodes[i] = -x;
    r.nodes[n - 1 - i] = x;
    r.weights[i] = w;
    r.weights[n - 1 - i] = w;
  }
  return r;
}

Rule gaussLegendre(int n, double a, double b) {
  Rule r = gaussLegendre(n);
  const double mid = 0.5 * (a + b), half = 0.5 * (b - a);
  for (int i = 0; i < n; ++i) {
    r.nodes[i] = mid + half * r.nodes[i];
    r.weights[i] *= half;
  }
  return r;
}

TanhSinhResult tanhSinh(const CplxFn& f, double a, double b, double relTol, int maxLevel) {
  using cplx = std::complex<double>;
  const double halfPi = 0.5 * std::numbers::pi;
  const double width = b - a;
  const double tMax = 4.0;
  // Contribution of abscissa t and its mirror -t.
  auto pair = [&](double t) {
    double s = halfPi * std::sinh(t);
    double w = halfPi * std::cosh(t) / (std::cosh(s) * std::cosh(s)) * 0.5 * width;
    double off = width / (1.0 + std::exp(2.0 * s));  // distance to b (and from a for the mirror)
    if (off <= 0.0 || w == 0.0) return cplx(0.0);
    cplx v = 0.0;
    if (b - off < b) v += f(b - off);
    if (a + off > a) v += f(a + off);
    return w * v;
  };
  double h = 0.5;
  cplx sum = halfPi * 0.5 * width * f(0.5 * (a + b));
  for (double t = h; t <= tMax; t += h) sum += pair(t);
  cplx est = h * sum;
  double err = std::abs(est);
  int level = 0;
  for (level = 1; level <= maxLevel; ++level) {
    h *= 0.5;
    for (double t = h; t <= tMax; t += 2.0 * h) sum += pair(t);
    cplx next = h * sum;
    err = std::abs(next - est);
    est = next;
    if (level >= 3 && err <= relTol * std::abs(est)) break;
  }
  return {est, err, std::min(level, maxLevel)};
}

std::complex<double> gaussPanels(const CplxFn& f, const std::vector<double>& breaks, int nodesPerPanel) {
  const Rule base = gaussLegendre(nodesPerPanel);
  std::complex<double> sum = 0.0;
  for (std::size_t k = 0; k + 1 < breaks.size(); ++k) {
    double a = breaks[k], b = breaks[k + 1];
    if (b <= a) continue;
    double mid = 0.5 * (a + b), half = 0.5 * (b - a);
    std::complex<double> s = 0.0;
    for (int i = 0; i < nodesPerPanel; ++i) s += base.weights[i] * f(mid + half * base.nodes[i]);
    sum += half * s;
  }
  return sum;
}

std::complex<double> richardson(const std::vector<double>& h, const std::vector<std::complex<double>>& v, double p,
                                double step) {
  const std::size_t n = v.size();
  if (n == 0 || h.size() != n) throw DomainError("richardson: mismatched ladder");
  // v_k = V + sum_j c_j h_k^{p + (j-1) step}, solved exactly; columns scaled to unit max.
  Eigen::MatrixXd a(n, n);
  for (std::size_t k = 0; k < n; ++k) a(k, 0) = 1.0;
  for (std::size_t j = 1; j < n; ++j) {
    double top = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      a(k, j) = std::pow(h[k], p + (j - 1) * step);
      top = std::max(top, std::abs(a(k, j)));
    }
    if (top > 0.0) a.col(j) /= top;
  }
  Eigen::VectorXcd rhs(n);
  for (std::size_t k = 0; k < n; ++k) rhs(k) = v[k];
  const Eigen::VectorXcd x = a.cast<std::complex<double>>().colPivHouseholderQr().solve(rhs);
  return x(0);
}

std::complex<double> wynnEpsilon(const std::vector<std::complex<double>>& s) {
  using cplx = std::complex<double>;
  const std::size_t n = s.size();
  if (n == 0) throw DomainError("wynnEpsilon: empty sequence");
  if (n < 3) return s.back();
  // cur holds column k of the epsilon table, prev column k-1.
  std::vector<cplx> prev(n + 1, 0.0), cur(s.begin(), s.end());
  cplx best = s.back();
  for (std::size_t k = 1; k < n; ++k) {
    std::vector<cplx> next(n - k);
    bool ok = true;
    for (std::size_t i = 0; i + k < n; ++i) {
      cplx diff = cur[i + 1] - cur[i];
      if (std::abs(diff) == 0.0) {
        ok = false;
        break;
      }
      next[i] = (k == 1 ? cplx(0.0) : prev[i + 1]) + 1.0 / diff;
    }
    if (!ok) break;
    prev = cur;
    cur = next;
    if (k % 2 == 0) best = cur.back();
  }
  return best;
}

}  // namespace pads::quad
