#include "pads/geometry.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "pads/errors.hpp"

namespace pads {

SpacetimePoint::SpacetimePoint(double t, std::vector<double> x, double z) : t_(t), x_(std::move(x)), z_(z) {
  if (!(z > 0.0)) throw DomainError("spacetime point requires z > 0");
  if (!std::isfinite(t) || !std::isfinite(z)) throw DomainError("spacetime point has non-finite coordinates");
}

std::string SpacetimePoint::toCsv() const {
  std::ostringstream os;
  os.precision(17);
  os << t_;
  for (double xi : x_) os << ',' << xi;
  os << ',' << z_;
  return os.str();
}

SpacetimePoint SpacetimePoint::fromCsv(const std::string& row) {
  std::vector<double> vals;
  std::stringstream ss(row);
  std::string cell;
  while (std::getline(ss, cell, ',')) {
    try {
      vals.push_back(std::stod(cell));
    } catch (const std::exception&) {
      throw ConfigError("cannot parse point coordinate '" + cell + "'");
    }
  }
  if (vals.size() < 2) throw ConfigError("point row needs at least t and z");
  return SpacetimePoint(vals.front(), std::vector<double>(vals.begin() + 1, vals.end() - 1), vals.back());
}

MirrorPoint reflect(const SpacetimePoint& p) { return MirrorPoint{p}; }
SpacetimePoint reflect(const MirrorPoint& m) { return m.image; }

EmbeddingPoint embed(const SpacetimePoint& p) {
  const double z = p.z();
  double x2 = 0.0;
  for (double xi : p.x()) x2 += xi * xi;
  const double t2 = p.t() * p.t();
  EmbeddingPoint e;
  e.X.push_back(p.t() / z);
  for (double xi : p.x()) e.X.push_back(xi / z);
  e.X.push_back((1.0 - z * z + t2 - x2) / (2.0 * z));
  e.X.push_back((1.0 + z * z - t2 + x2) / (2.0 * z));
  return e;
}

namespace {

double eta(const std::vector<double>& a, const std::vector<double>& b) {
  const std::size_t n = a.size();
  double s = -a[0] * b[0] - a[n - 1] * b[n - 1];
  for (std::size_t i = 1; i + 1 < n; ++i) s += a[i] * b[i];
  return s;
}

double transverseDist2(const std::vector<double>& a, const std::vector<double>& b) {
  if (a.size() != b.size()) throw DomainError("points of different dimension");
  double s = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) s += (a[i] - b[i]) * (a[i] - b[i]);
  return s;
}

Classification classify(double u, bool same) {
  if (same) return Classification::coincident;
  const double tol = kClassTol * std::max(1.0, std::abs(u));
  if (std::abs(u - 1.0) <= tol) return Classification::directNull;
  if (std::abs(u) <= tol) return Classification::reflectedNull;
  if (u > 1.0) return Classification::spacelike;
  if (u > 0.0) return Classification::timelike;
  return Classification::reflectedTimelikeMixed;
}

}  // namespace

double quadricValue(const EmbeddingPoint& e) { return eta(e.X, e.X); }

double sigmaChordal(const EmbeddingPoint& a, const EmbeddingPoint& b) {
  if (a.X.size() != b.X.size()) throw DomainError("embedding points of different dimension");
  std::vector<double> d(a.X.size());
  for (std::size_t i = 0; i < d.size(); ++i) d[i] = a.X[i] - b.X[i];
  return 0.5 * eta(d, d);
}

std::string toString(Classification c) {
  switch (c) {
    case Classification::coincident: return "coincident";
    case Classification::directNull: return "direct-null";
    case Classification::reflectedNull: return "reflected-null";
    case Classification::timelike: return "timelike";
    case Classification::spacelike: return "spacelike";
    case Classification::reflectedTimelikeMixed: return "reflected-timelike-mixed";
  }
  return "unknown";
}

PairGeometry PairGeometry::of(const SpacetimePoint& a, const SpacetimePoint& b) {
  return {a.t() - b.t(), transverseDist2(a.x(), b.x()), a.z(), b.z()};
}

CrossRatio PairGeometry::u() const {
  const double zz2 = 2.0 * z * zp;
  return {sigmaMReflected() / zz2, -sigmaM() / zz2};
}

CrossRatio PairGeometry::uEps(double eps) const {
  const double zz2 = 2.0 * z * zp;
  const cplx shift(eps * eps, 2.0 * eps * dt);
  return {(sigmaMReflected() + shift) / zz2, -(sigmaM() + shift) / zz2};
}

SeparationReport separation(const SpacetimePoint& a, const SpacetimePoint& b) {
  const PairGeometry g = PairGeometry::of(a, b);
  const double u = g.u().u.real();
  const bool same = g.dt == 0.0 && g.r2 == 0.0 && g.z == g.zp;
  return {g.sigmaM(), g.sigmaMReflected(), u, classify(u, same)};
}

SeparationReport separation(const MirrorPoint& a, const SpacetimePoint& b) {
  const PairGeometry g = PairGeometry::of(a.image, b);
  // With z -> -z the roles of sigma_M and its reflection swap and u -> 1 - u.
  const double u = g.u().oneMinusU.real();
  return {g.sigmaMReflected(), g.sigmaM(), u, classify(u, false)};
}

GeodesicDistance geodesicDistance(const SpacetimePoint& a, const SpacetimePoint& b) {
  using B = GeodesicDistance::Branch;
  const SeparationReport s = separation(a, b);
  switch (s.classification) {
    case Classification::coincident: return {0.0, B::coincident};
    case Classification::directNull: return {0.0, B::directNull};
    case Classification::reflectedNull:
      return {cplx(std::numeric_limits<double>::quiet_NaN(), 0.0), B::reflectedNull};
    default: break;
  }
  const double u = s.u;
  if (u > 1.0) {
    double r = std::acosh(std::sqrt(u));
    return {2.0 * r * r, B::spacelike};
  }
  if (u > 0.0) {
    double r = std::acos(std::sqrt(u));
    return {-2.0 * r * r, B::timelike};
  }
  cplx r = std::acosh(std::sqrt(cplx(u, 0.0)));
  return {2.0 * r * r, B::reflectedTimelike};
}

std::vector<double> flat(const std::vector<double>& v) {
  std::vector<double> k = v;
  if (!k.empty()) k[0] = -k[0];
  return k;
}

double flatNorm(const std::vector<double>& v) {
  double s = -v[0] * v[0];
  for (std::size_t i = 1; i < v.size(); ++i) s += v[i] * v[i];
  return s;
}

std::optional<NullConnection> connectNull(const SpacetimePoint& a, const SpacetimePoint& b) {
  const SeparationReport s = separation(a, b);
  std::vector<double> v;
  v.push_back(b.t() - a.t());
  for (std::size_t i = 0; i < a.x().size(); ++i) v.push_back(b.x()[i] - a.x()[i]);
  if (s.classification == Classification::directNull) {
    v.push_back(b.z() - a.z());
    std::vector<double> k = flat(v);
    return NullConnection{NullConnection::Kind::direct, v, k, k};
  }
  if (s.classification == Classification::reflectedNull) {
    v.push_back(b.z() + a.z());
    std::vector<double> arrival = flat(v);
    std::vector<double> emission = arrival;
    emission.back() = -emission.back();
    return NullConnection{NullConnection::Kind::reflected, v, emission, arrival};
  }
  return std::nullopt;
}

}  // namespace pads
