#include <cstdlib>
#include <iostream>
#include <string>

#include "pads/parallel.hpp"
#include "suite.hpp"

// acceptance [--seed N] [--threads N] [A1 A5 ...]
int main(int argc, char** argv) {
  pads::acceptance::Options opt;
  for (int i = 1; i < argc; ++i) {
    const std::string a = argv[i];
    if (a == "--seed" && i + 1 < argc) {
      opt.seed = std::strtoull(argv[++i], nullptr, 10);
    } else if (a == "--threads" && i + 1 < argc) {
      pads::setThreads(std::atoi(argv[++i]));
    } else {
      opt.only.push_back(a);
    }
  }
  const auto results = pads::acceptance::run(opt, std::cout);
  int failed = 0;
  for (const auto& r : results) failed += !r.pass;
  std::cout << (results.size() - failed) << "/" << results.size() << " criteria passed" << std::endl;
  return failed == 0 ? 0 : 1;
}
