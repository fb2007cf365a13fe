#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pads/geometry.hpp"
#include "pads/modes.hpp"

namespace pads::cli {

// Raw key -> value settings after merging the config file with command-line flags.
using Settings = std::map<std::string, std::string>;

// Flat `key = value` lines; `#` starts a comment. Keys outside `allowed` are rejected.
Settings readConfigFile(const std::string& path, const std::vector<std::string>& allowed);

// pi, pi/2, 2pi/3, 3pi/4 or a plain number of radians.
double parseAlpha(const std::string& text);
std::vector<double> parseList(const std::string& text, const std::string& what);

struct RunConfig {
  int d = 3;
  std::optional<double> nu;
  std::optional<double> m0sq;
  std::optional<double> xi;
  std::string alphaText = "pi";
  double alpha = BoundaryCondition::kPiValue;
  std::vector<double> eps;
  std::string points;  // CSV path or inline rows separated by ';'
  std::uint64_t seed = 1;
  bool seedGiven = false;
  std::string output;  // empty writes to stdout
  std::string format;
  int threads = 1;
  Settings extra;  // command-specific keys

  ModelParams params() const;
  BoundaryCondition bc() const { return BoundaryCondition::fromAlpha(alpha); }
  double number(const std::string& key, double fallback) const;
  int integer(const std::string& key, int fallback) const;
  std::string text(const std::string& key, const std::string& fallback) const;
};

// allowAlpha34: 3pi/4 is only meaningful for the boundary functional scan.
RunConfig makeConfig(const Settings& s, const std::string& defaultFormat, bool allowAlpha34);

using PointPair = std::pair<SpacetimePoint, SpacetimePoint>;
// Rows `t,x..,z,tp,xp..,zp` with 2d + 2 columns.
std::vector<PointPair> readPairs(const std::string& source, int d);

}  // namespace pads::cli
