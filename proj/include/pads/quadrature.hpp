#pragma once

#include <complex>
#include <functional>
#include <vector>

namespace pads::quad {

struct Rule {
  std::vector<double> nodes;
  std::vector<double> weights;
};

// n-point Gauss-Legendre rule on [-1, 1].
Rule gaussLegendre(int n);
// Same rule mapped to [a, b].
Rule gaussLegendre(int n, double a, double b);

template <class F>
auto integrate(const Rule& r, F&& f) {
  using R = decltype(f(0.0));
  R sum{};
  for (std::size_t i = 0; i < r.nodes.size(); ++i) sum += r.weights[i] * f(r.nodes[i]);
  return sum;
}

using RealFn = std::function<double(double)>;
using CplxFn = std::function<std::complex<double>(double)>;

struct TanhSinhResult {
  std::complex<double> value;
  double errorEstimate;
  int levels;
};

// Double-exponential quadrature on [a, b]; tolerates integrable endpoint singularities.
TanhSinhResult tanhSinh(const CplxFn& f, double a, double b, double relTol = 1e-10, int maxLevel = 8);

// Composite Gauss-Legendre over consecutive intervals of the sorted breakpoint list.
std::complex<double> gaussPanels(const CplxFn& f, const std::vector<double>& breaks, int nodesPerPanel);

// Richardson extrapolation to h -> 0 of values v_k = v(h_k) with error ~ c h^p (+ higher powers p, p+step,...).
// Returns the fully extrapolated estimate.
std::complex<double> richardson(const std::vector<double>& h, const std::vector<std::complex<double>>& v, double p,
                                double step = 1.0);

// Wynn epsilon acceleration of a sequence of partial sums. Returns the best estimate.
std::complex<double> wynnEpsilon(const std::vector<std::complex<double>>& partialSums);

}  // namespace pads::quad
