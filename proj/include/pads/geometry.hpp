#pragma once

#include <complex>
#include <optional>
#include <string>
#include <vector>

namespace pads {

using cplx = std::complex<double>;

// Poincare coordinates (t, x_1..x_{d-1}, z) with z > 0.
class SpacetimePoint {
 public:
  SpacetimePoint(double t, std::vector<double> x, double z);

  double t() const { return t_; }
  const std::vector<double>& x() const { return x_; }
  double z() const { return z_; }
  // Spacetime dimension d+1.
  int dim() const { return int(x_.size()) + 2; }

  std::string toCsv() const;
  static SpacetimePoint fromCsv(const std::string& row);

 private:
  double t_;
  std::vector<double> x_;
  double z_;
};

// Image of a point under z -> -z. Deliberately not a SpacetimePoint.
struct MirrorPoint {
  SpacetimePoint image;  // the original point; coordinates read with z negated
  double t() const { return image.t(); }
  const std::vector<double>& x() const { return image.x(); }
  double z() const { return -image.z(); }
};

MirrorPoint reflect(const SpacetimePoint& p);
SpacetimePoint reflect(const MirrorPoint& m);

struct EmbeddingPoint {
  std::vector<double> X;  // X_0 .. X_{d+1}
};

// Chart into the quadric -X_0^2 + X_1^2 + ... + X_d^2 - X_{d+1}^2 = -1.
EmbeddingPoint embed(const SpacetimePoint& p);
double quadricValue(const EmbeddingPoint& e);
// Chordal world function 1/2 eta(X - X', X - X').
double sigmaChordal(const EmbeddingPoint& a, const EmbeddingPoint& b);

enum class Classification { coincident, directNull, reflectedNull, timelike, spacelike, reflectedTimelikeMixed };
std::string toString(Classification c);

inline constexpr double kClassTol = 1e-9;

struct SeparationReport {
  double sigmaM;
  double sigmaMReflected;
  double u;
  Classification classification;
};

SeparationReport separation(const SpacetimePoint& a, const SpacetimePoint& b);
SeparationReport separation(const MirrorPoint& a, const SpacetimePoint& b);

// Cross-ratio variable together with 1-u, each computed without cancellation.
struct CrossRatio {
  cplx u;
  cplx oneMinusU;
};

// Minimal description of a point pair as consumed by the kernels.
struct PairGeometry {
  double dt;  // t - t'
  double r2;  // |x - x'|^2
  double z;
  double zp;

  static PairGeometry of(const SpacetimePoint& a, const SpacetimePoint& b);
  PairGeometry swapped() const { return {-dt, r2, zp, z}; }

  double sigmaM() const { return 0.5 * (-dt * dt + r2 + (z - zp) * (z - zp)); }
  double sigmaMReflected() const { return 0.5 * (-dt * dt + r2 + (z + zp) * (z + zp)); }
  CrossRatio u() const;
  // u_eps = u(sigma + 2 i eps dt + eps^2).
  CrossRatio uEps(double eps) const;
};

struct GeodesicDistance {
  enum class Branch { coincident, spacelike, timelike, reflectedTimelike, reflectedNull, directNull };
  cplx sigma;  // NaN for reflectedNull
  Branch branch;
};

GeodesicDistance geodesicDistance(const SpacetimePoint& a, const SpacetimePoint& b);

struct NullConnection {
  enum class Kind { direct, reflected };
  Kind kind;
  std::vector<double> tangent;            // x' - x, or x' - iota(x) for the reflected ray
  std::vector<double> emissionCovector;   // flat dual of the tangent at x (z-flipped when reflected)
  std::vector<double> arrivalCovector;    // flat dual of the tangent at x'
};

std::optional<NullConnection> connectNull(const SpacetimePoint& a, const SpacetimePoint& b);

// Flat mostly-plus lowering of (v_t, v_x..., v_z).
std::vector<double> flat(const std::vector<double>& v);
// Flat norm eta(v, v) for a vector or covector.
double flatNorm(const std::vector<double>& v);

}  // namespace pads
