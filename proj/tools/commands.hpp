#pragma once

#include <ostream>

#include "config.hpp"

namespace pads::cli {

// Each returns the process exit code; library errors propagate to the caller.
int runEval(const RunConfig& c, std::ostream& out);
int runCompare(const RunConfig& c, std::ostream& out);
int runGeodesics(const RunConfig& c, std::ostream& out);
int runWfCheck(const RunConfig& c, std::ostream& out);
int runAlgebra(const RunConfig& c, std::ostream& out);
int runBcScan(const RunConfig& c, std::ostream& out);
int runAcceptance(const RunConfig& c, std::ostream& out);

}  // namespace pads::cli
