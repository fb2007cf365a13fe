#include "commands.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <random>
#include <sstream>

#include "json.hpp"
#include "pads/algebra.hpp"
#include "pads/errors.hpp"
#include "pads/kernels.hpp"
#include "pads/oracle.hpp"
#include "pads/parallel.hpp"
#include "pads/wavefront.hpp"
#include "suite.hpp"

namespace pads::cli {

namespace {

using json = nlohmann::json;
constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();
constexpr cplx kI{0.0, 1.0};

std::string num(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

class Rng {
 public:
  explicit Rng(std::uint64_t seed) : g_(seed) {}
  double uni(double a, double b) { return std::uniform_real_distribution<double>(a, b)(g_); }
  int index(int n) { return std::uniform_int_distribution<int>(0, n - 1)(g_); }

 private:
  std::mt19937_64 g_;
};

SpacetimePoint randomPoint(Rng& rng, int d) {
  std::vector<double> x(d - 1);
  for (double& v : x) v = rng.uni(-1.0, 1.0);
  return {rng.uni(-1.5, 1.5), x, rng.uni(0.3, 2.0)};
}

std::vector<PointPair> pairsFor(const RunConfig& c) {
  if (!c.points.empty()) return readPairs(c.points, c.d);
  const int n = c.integer("pairs", 10);
  if (n < 1) throw ConfigError("pairs must be positive");
  Rng rng(c.seed);
  std::vector<PointPair> out;
  while (static_cast<int>(out.size()) < n) {
    SpacetimePoint a = randomPoint(rng, c.d), b = randomPoint(rng, c.d);
    const CrossRatio cr = PairGeometry::of(a, b).u();
    if (std::abs(cr.oneMinusU) > 1e-2 && std::abs(cr.u) > 1e-2) out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

std::vector<std::string> pointColumns(const std::string& prefix, int d) {
  std::vector<std::string> cols = {prefix.empty() ? "t" : "tp"};
  for (int i = 1; i < d; ++i) cols.push_back((prefix.empty() ? "x" : "xp") + std::to_string(i));
  cols.push_back(prefix.empty() ? "z" : "zp");
  return cols;
}

std::vector<double> coords(const SpacetimePoint& p) {
  std::vector<double> v = {p.t()};
  v.insert(v.end(), p.x().begin(), p.x().end());
  v.push_back(p.z());
  return v;
}

// Rows of numbers under a header, written as CSV or as a JSON array of objects.
void writeTable(std::ostream& out, const std::string& format, const std::vector<std::string>& header,
                const std::vector<std::vector<double>>& rows) {
  if (format == "json") {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (std::size_t k = 0; k < header.size(); ++k) o[header[k]] = std::isnan(r[k]) ? json(nullptr) : json(r[k]);
      arr.push_back(o);
    }
    out << arr.dump(2) << "\n";
    return;
  }
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << "\n";
  for (const auto& r : rows) {
    for (std::size_t k = 0; k < r.size(); ++k) out << (k ? "," : "") << num(r[k]);
    out << "\n";
  }
}

std::string branchName(GeodesicDistance::Branch b) {
  switch (b) {
    case GeodesicDistance::Branch::coincident: return "coincident";
    case GeodesicDistance::Branch::spacelike: return "spacelike";
    case GeodesicDistance::Branch::timelike: return "timelike";
    case GeodesicDistance::Branch::reflectedTimelike: return "reflected-timelike";
    case GeodesicDistance::Branch::reflectedNull: return "reflected-null";
    case GeodesicDistance::Branch::directNull: return "direct-null";
  }
  return "unknown";
}

json matrixJson(const Eigen::MatrixXcd& m, bool complex) {
  json rows = json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j)
      row.push_back(complex ? json::array({m(i, j).real(), m(i, j).imag()}) : json(m(i, j).real()));
    rows.push_back(row);
  }
  return rows;
}

algebra::PolyFunctional randomFunctional(Rng& rng, int n) {
  algebra::PolyFunctional f;
  const int terms = 1 + rng.index(4);
  for (int k = 0; k < terms; ++k) {
    algebra::Monomial m;
    const int deg = rng.index(3);
    for (int j = 0; j < deg; ++j) m.push_back(rng.index(n));
    const double re = rng.uni(-1, 1), im = rng.uni(-1, 1);
    f.add(m, cplx(re, im));
  }
  return f;
}

}  // namespace

int runEval(const RunConfig& c, std::ostream& out) {
  const ModelParams p = c.params();
  const PropagatorModel m(p, c.bc());
  const std::vector<double> ladder = c.eps.empty() ? kEpsLadder : c.eps;
  const auto pairs = pairsFor(c);

  std::vector<std::string> header = pointColumns("", c.d);
  for (const auto& s : pointColumns("p", c.d)) header.push_back(s);
  for (const char* s : {"u", "re_omega2", "im_omega2", "re_G", "im_G", "eps", "d", "nu", "alpha"}) header.emplace_back(s);

  std::vector<std::vector<double>> rows(pairs.size() * ladder.size());
  parallelFor(rows.size(), [&](std::size_t k) {
    const auto& [a, b] = pairs[k / ladder.size()];
    const double eps = ladder[k % ladder.size()];
    const PairGeometry g = PairGeometry::of(a, b);
    const cplx w = m.hasGroundState() ? m.omega(g, eps) : cplx(kNaN, kNaN);
    const cplx G = m.propagator(g, eps);
    std::vector<double> r = coords(a);
    for (double v : coords(b)) r.push_back(v);
    for (double v : {g.u().u.real(), w.real(), w.imag(), G.real(), G.imag(), eps, double(c.d), p.nu, c.alpha})
      r.push_back(v);
    rows[k] = std::move(r);
  });
  writeTable(out, c.format, header, rows);
  return 0;
}

int runCompare(const RunConfig& c, std::ostream& out) {
  const ModelParams p = c.params();
  const BoundaryCondition bc = c.bc();
  const PropagatorModel m(p, bc);
  const double eps = c.eps.empty() ? 1e-2 : c.eps.front();
  const int n = c.integer("pairs", 20);
  if (n < 1) throw ConfigError("pairs must be positive");

  // alternate direct-timelike and beyond-the-reflected-cone pairs
  Rng rng(c.seed);
  std::vector<PairGeometry> geo;
  for (int i = 0; i < n; ++i) {
    const double z = rng.uni(0.5, 1.5), zp = rng.uni(0.5, 1.5), r = rng.uni(0.0, 1.0);
    const double cone = i % 2 ? std::hypot(r, z + zp) : std::hypot(r, z - zp);
    geo.push_back({cone + rng.uni(0.2, 0.7), r * r, z, zp});
  }
  std::vector<double> mode(n), closed(n);
  parallelFor(geo.size(), [&](std::size_t k) {
    mode[k] = oracle::modeSumG(p, bc, geo[k], eps);
    closed[k] = rescale(m.propagator(geo[k], eps), geo[k].z, geo[k].zp, p.d, RescaleDirection::toH).real();
  });
  double maxAbs = 0.0, maxRel = 0.0;
  for (int k = 0; k < n; ++k) {
    const double e = std::abs(mode[k] - closed[k]);
    maxAbs = std::max(maxAbs, e);
    maxRel = std::max(maxRel, e / std::abs(closed[k]));
  }
  if (c.format == "csv") {
    std::vector<std::vector<double>> rows;
    for (int k = 0; k < n; ++k)
      rows.push_back({geo[k].dt, std::sqrt(geo[k].r2), geo[k].z, geo[k].zp, mode[k], closed[k],
                      std::abs(mode[k] - closed[k]), std::abs(mode[k] - closed[k]) / std::abs(closed[k]), eps,
                      double(c.d), p.nu, c.alpha});
    writeTable(out, "csv", {"dt", "r", "z", "zp", "mode_sum", "closed_form", "abs_err", "rel_err", "eps", "d", "nu", "alpha"},
               rows);
    return 0;
  }
  json j = {{"pairs", n},      {"max_abs_err", maxAbs}, {"max_rel_err", maxRel}, {"eps", eps},
            {"alpha", c.alpha}, {"nu", p.nu},           {"d", c.d}};
  out << j.dump(2) << "\n";
  return 0;
}

int runGeodesics(const RunConfig& c, std::ostream& out) {
  const auto pairs = pairsFor(c);
  json arr = json::array();
  std::vector<std::vector<double>> rows;
  std::vector<std::string> labels;
  for (const auto& [a, b] : pairs) {
    const SeparationReport s = separation(a, b);
    const GeodesicDistance g = geodesicDistance(a, b);
    const auto nc = connectNull(a, b);
    json o = {{"x", coords(a)},
              {"xp", coords(b)},
              {"sigmaM", s.sigmaM},
              {"sigmaMReflected", s.sigmaMReflected},
              {"u", s.u},
              {"classification", toString(s.classification)},
              {"sigma", std::isnan(g.sigma.real()) ? json(nullptr) : json::array({g.sigma.real(), g.sigma.imag()})},
              {"branch", branchName(g.branch)},
              {"d", c.d}};
    if (nc) {
      o["null"] = {{"kind", nc->kind == NullConnection::Kind::direct ? "direct" : "reflected"},
                   {"tangent", nc->tangent},
                   {"emissionCovector", nc->emissionCovector},
                   {"arrivalCovector", nc->arrivalCovector}};
    } else {
      o["null"] = nullptr;
    }
    arr.push_back(o);
    std::vector<double> r = coords(a);
    for (double v : coords(b)) r.push_back(v);
    for (double v : {s.sigmaM, s.sigmaMReflected, s.u, g.sigma.real(), g.sigma.imag(), double(c.d)}) r.push_back(v);
    rows.push_back(r);
    labels.push_back(toString(s.classification) + "," + (nc ? (nc->kind == NullConnection::Kind::direct ? "direct" : "reflected") : "none"));
  }
  if (c.format == "json") {
    out << arr.dump(2) << "\n";
    return 0;
  }
  std::vector<std::string> header = pointColumns("", c.d);
  for (const auto& s : pointColumns("p", c.d)) header.push_back(s);
  for (const char* s : {"sigmaM", "sigmaMReflected", "u", "re_sigma", "im_sigma", "d", "classification", "null"})
    header.emplace_back(s);
  for (std::size_t k = 0; k < header.size(); ++k) out << (k ? "," : "") << header[k];
  out << "\n";
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (double v : rows[i]) out << num(v) << ",";
    out << labels[i] << "\n";
  }
  return 0;
}

int runWfCheck(const RunConfig& c, std::ostream& out) {
  for (const char* key : {"x", "k", "xp", "kp"})
    if (c.text(key, "").empty()) throw ConfigError(std::string("wf-check needs --") + key);
  auto point = [&](const std::string& key) {
    const std::vector<double> v = parseList(c.text(key, ""), key);
    if (v.size() < 2) throw ConfigError(key + " needs at least t and z");
    return SpacetimePoint(v.front(), std::vector<double>(v.begin() + 1, v.end() - 1), v.back());
  };
  const wavefront::CovectorPoint a(point("x"), parseList(c.text("k", ""), "k"));
  const wavefront::CovectorPoint b(point("xp"), parseList(c.text("kp", ""), "kp"));
  const double tol = c.number("tol", wavefront::kPredicateTol);
  const auto rel = wavefront::wfPredicateCommutator(a, b, tol);
  const bool state = wavefront::wfPredicateState(a, b, tol);
  if (c.format == "csv") {
    out << "direct,reflected,state\n" << rel.direct << "," << rel.reflected << "," << state << "\n";
    return 0;
  }
  out << json{{"direct", rel.direct}, {"reflected", rel.reflected}, {"state", state}}.dump(2) << "\n";
  return 0;
}

int runAlgebra(const RunConfig& c, std::ostream& out) {
  if (c.d != 2) throw ConfigError("algebra smearing is implemented for d = 2 only");
  const ModelParams p = c.params();
  const BoundaryCondition bc = c.bc();
  const int n = c.integer("n", 4);
  if (n < 1 || n > 16) throw ConfigError("basis size n must lie in [1, 16]");
  Rng rng(c.seed);
  std::vector<TestFunction> fs;
  for (int i = 0; i < n; ++i) {
    const double tc = rng.uni(0.0, 1.5), tw = rng.uni(0.3, 0.6), xc = rng.uni(-0.5, 0.5), xw = rng.uni(0.3, 0.6);
    const double b1 = rng.uni(0.6, 1.1), b2 = rng.uni(0.5, 1.0);
    fs.push_back(TestFunction::member(p, bc, Profile1D::bump(tc, tw), {Profile1D::bump(xc, xw)},
                                      Profile1D::plateau(0.3, b1), Profile1D::plateau(0.2, b2)));
  }
  QuadratureSpec q;
  q.doubled = false;
  const algebra::GeneratorBasis b = algebra::buildBasis(fs, p, bc, q);

  const Eigen::MatrixXcd herm = 0.5 * (b.Omat + b.Omat.adjoint());
  const double minEig = Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd>(herm).eigenvalues().minCoeff();
  const double comm = (b.Omat - b.Omat.transpose() - kI * b.Gmat.cast<cplx>()).cwiseAbs().maxCoeff();
  double starComm = 0.0;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      const auto Fi = algebra::PolyFunctional::generator(i), Fj = algebra::PolyFunctional::generator(j);
      const auto lhs = algebra::starProduct(Fi, Fj, b) - algebra::starProduct(Fj, Fi, b);
      starComm = std::max(starComm, lhs.distance(algebra::PolyFunctional::constant(kI * b.Gmat(i, j))));
    }
  double assoc = 0.0;
  for (int k = 0; k < 10; ++k) {
    const auto F = randomFunctional(rng, n), G = randomFunctional(rng, n), H = randomFunctional(rng, n);
    assoc = std::max(assoc, algebra::starProduct(algebra::starProduct(F, G, b), H, b)
                                .distance(algebra::starProduct(F, algebra::starProduct(G, H, b), b)));
  }
  json j = {{"d", c.d},
            {"nu", p.nu},
            {"alpha", c.alpha},
            {"n", n},
            {"seed", c.seed},
            {"Gmat", matrixJson(b.Gmat.cast<cplx>(), false)},
            {"Omat", matrixJson(b.Omat, true)},
            {"Hmat", matrixJson(b.Hmat, true)},
            {"residuals",
             {{"commutator", comm},
              {"star_commutator", starComm},
              {"associativity", assoc},
              {"min_eigenvalue", minEig},
              {"trace", herm.trace().real()}}}};
  out << j.dump(2) << "\n";
  return 0;
}

int runBcScan(const RunConfig& c, std::ostream& out) {
  const double nu = c.params().nu;
  const double q = c.number("q", 1.0);
  if (!(q > 0.0)) throw ConfigError("q must be positive");
  std::vector<double> alphas;
  if (const std::string list = c.text("alphas", ""); !list.empty()) {
    std::stringstream ss(list);
    std::string cell;
    while (std::getline(ss, cell, ',')) alphas.push_back(parseAlpha(cell));
  } else {
    const double lo = parseAlpha(c.text("alpha-min", "pi/2")), hi = parseAlpha(c.text("alpha-max", "pi"));
    const int steps = c.integer("steps", 13);
    if (steps < 1 || hi < lo) throw ConfigError("bc-scan needs steps >= 1 and alpha-min <= alpha-max");
    for (int k = 0; k < steps; ++k) alphas.push_back(steps == 1 ? lo : lo + (hi - lo) * k / (steps - 1));
  }
  std::vector<std::vector<double>> rows;
  for (double a : alphas) {
    const BoundaryCondition bc = BoundaryCondition::fromAlpha(a);
    const double rPsi = robinFunctional(psi(bc, nu, q), bc, nu);
    const double rPhi1 = robinFunctional(phi1(nu, q), bc, nu);
    const double rPhi2 = nu < 1.0 ? robinFunctional(phi2(nu, q), bc, nu) : kNaN;
    const auto kappa = boundStateKappa(bc, nu);
    rows.push_back({bc.alpha(), bc.a(), bc.b(), q, rPsi, rPhi1, rPhi2, normDenominator(bc, nu, q),
                    kappa ? *kappa : kNaN, double(c.d), nu});
  }
  writeTable(out, c.format,
             {"alpha", "cos_alpha", "sin_alpha", "q", "robin_psi", "robin_phi1", "robin_phi2", "norm_denominator",
              "bound_kappa", "d", "nu"},
             rows);
  return 0;
}

int runAcceptance(const RunConfig& c, std::ostream& out) {
  acceptance::Options opt;
  if (c.seedGiven) opt.seed = c.seed;
  if (const std::string only = c.text("only", ""); !only.empty()) {
    std::stringstream ss(only);
    std::string id;
    const auto known = acceptance::criterionIds();
    while (std::getline(ss, id, ',')) {
      if (std::find(known.begin(), known.end(), id) == known.end()) throw ConfigError("unknown criterion '" + id + "'");
      opt.only.push_back(id);
    }
  }
  const auto results = acceptance::run(opt, out);
  const auto failed = std::count_if(results.begin(), results.end(), [](const auto& r) { return !r.pass; });
  out << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}

}  // namespace pads::cli
