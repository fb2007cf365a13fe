#include "config.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "pads/errors.hpp"

namespace pads::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double toDouble(const std::string& text, const std::string& what) {
  const std::string t = trim(text);
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(t, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  if (t.empty() || used != t.size() || !std::isfinite(v)) throw ConfigError("invalid number for " + what + ": '" + text + "'");
  return v;
}

int toInt(const std::string& text, const std::string& what) {
  const double v = toDouble(text, what);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw ConfigError("expected an integer for " + what + ": '" + text + "'");
  return static_cast<int>(v);
}

}  // namespace

Settings readConfigFile(const std::string& path, const std::vector<std::string>& allowed) {
  std::ifstream in(path);
  if (!in) throw ConfigError("cannot open config file '" + path + "'");
  Settings s;
  std::string line;
  for (int n = 1; std::getline(in, line); ++n) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError(path + ":" + std::to_string(n) + ": expected 'key = value'");
    const std::string key = trim(line.substr(0, eq)), value = trim(line.substr(eq + 1));
    if (std::find(allowed.begin(), allowed.end(), key) == allowed.end())
      throw ConfigError(path + ":" + std::to_string(n) + ": unknown key '" + key + "'");
    s[key] = value;
  }
  return s;
}

double parseAlpha(const std::string& text) {
  const std::string t = trim(text);
  const double pi = BoundaryCondition::kPiValue;
  if (t == "pi") return pi;
  if (t == "pi/2") return pi / 2;
  if (t == "2pi/3") return 2 * pi / 3;
  if (t == "3pi/4") return 3 * pi / 4;
  const double a = toDouble(t, "alpha");
  if (!(a > 0.0 && a <= pi + 1e-14)) throw ConfigError("alpha must lie in (0, pi]: '" + text + "'");
  return a;
}

std::vector<double> parseList(const std::string& text, const std::string& what) {
  std::vector<double> out;
  std::stringstream ss(text);
  std::string cell;
  while (std::getline(ss, cell, ',')) out.push_back(toDouble(cell, what));
  if (out.empty()) throw ConfigError("empty list for " + what);
  return out;
}

ModelParams RunConfig::params() const {
  if (nu) return paramsFromNu(d, *nu);
  if (m0sq && xi) return deriveParams(d, *m0sq, *xi);
  throw ConfigError("this command needs nu or (m0sq, xi)");
}

double RunConfig::number(const std::string& key, double fallback) const {
  const auto it = extra.find(key);
  return it == extra.end() ? fallback : toDouble(it->second, key);
}

int RunConfig::integer(const std::string& key, int fallback) const {
  const auto it = extra.find(key);
  return it == extra.end() ? fallback : toInt(it->second, key);
}

std::string RunConfig::text(const std::string& key, const std::string& fallback) const {
  const auto it = extra.find(key);
  return it == extra.end() ? fallback : it->second;
}

RunConfig makeConfig(const Settings& s, const std::string& defaultFormat, bool allowAlpha34) {
  RunConfig c;
  c.format = defaultFormat;
  for (const auto& [key, value] : s) {
    if (key == "d") {
      c.d = toInt(value, "d");
    } else if (key == "nu") {
      c.nu = toDouble(value, "nu");
    } else if (key == "m0sq") {
      c.m0sq = toDouble(value, "m0sq");
    } else if (key == "xi") {
      c.xi = toDouble(value, "xi");
    } else if (key == "alpha") {
      c.alphaText = value;
      c.alpha = parseAlpha(value);
    } else if (key == "eps") {
      c.eps = parseList(value, "eps");
    } else if (key == "points") {
      c.points = value;
    } else if (key == "seed") {
      const double v = toDouble(value, "seed");
      if (v < 0 || v != std::floor(v)) throw ConfigError("seed must be a non-negative integer");
      c.seed = static_cast<std::uint64_t>(v);
      c.seedGiven = true;
    } else if (key == "output") {
      c.output = value;
    } else if (key == "format") {
      c.format = value;
    } else if (key == "threads") {
      c.threads = toInt(value, "threads");
    } else {
      c.extra[key] = value;
    }
  }
  if (c.d < 2) throw ConfigError("d must be at least 2");
  if (c.nu && (c.m0sq || c.xi)) throw ConfigError("give either nu or (m0sq, xi), not both");
  if (!c.nu && (c.m0sq.has_value() != c.xi.has_value())) throw ConfigError("m0sq and xi must be given together");
  if (c.format != "csv" && c.format != "json") throw ConfigError("format must be csv or json");
  if (c.threads < 1) throw ConfigError("threads must be at least 1");
  for (double e : c.eps)
    if (e < 0.0) throw ConfigError("eps values must be non-negative");
  if (!allowAlpha34 && std::abs(c.alpha - 3 * BoundaryCondition::kPiValue / 4) <= 1e-14)
    throw ConfigError("alpha = 3pi/4 leaves the kernel normalization undefined; only bc-scan accepts it");
  return c;
}

std::vector<PointPair> readPairs(const std::string& source, int d) {
  std::vector<std::string> rows;
  if (std::filesystem::is_regular_file(source)) {
    std::ifstream in(source);
    std::string line;
    while (std::getline(in, line)) rows.push_back(line);
  } else {
    std::stringstream ss(source);
    std::string row;
    while (std::getline(ss, row, ';')) rows.push_back(row);
  }
  std::vector<PointPair> pairs;
  const std::size_t width = static_cast<std::size_t>(2 * d + 2);
  for (std::string row : rows) {
    row = trim(row);
    if (row.empty() || row.front() == '#') continue;
    // header row
    if (std::isalpha(static_cast<unsigned char>(row.front()))) continue;
    const std::vector<double> v = parseList(row, "point pair");
    if (v.size() != width)
      throw ConfigError("point pair row needs " + std::to_string(width) + " values for d = " + std::to_string(d) +
                        ": '" + row + "'");
    const auto half = v.begin() + d + 1;
    pairs.emplace_back(SpacetimePoint(v.front(), std::vector<double>(v.begin() + 1, half - 1), *(half - 1)),
                       SpacetimePoint(*half, std::vector<double>(half + 1, v.end() - 1), v.back()));
  }
  if (pairs.empty()) throw ConfigError("no point pairs in '" + source + "'");
  return pairs;
}

}  // namespace pads::cli
