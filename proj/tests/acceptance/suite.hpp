#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

namespace pads::acceptance {

struct Outcome {
  std::string id;
  bool pass;
  std::string detail;
  double seconds;
};

struct Options {
  std::uint64_t seed = 20260101;
  // Criterion ids to run (e.g. "A3"); empty runs all.
  std::vector<std::string> only;
};

// Runs the criteria in order and prints one PASS/FAIL line per criterion to out as it finishes.
std::vector<Outcome> run(const Options& opt, std::ostream& out);

std::vector<std::string> criterionIds();

}  // namespace pads::acceptance
