#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "commands.hpp"
#include "config.hpp"
#include "json.hpp"
#include "pads/errors.hpp"
#include "pads/parallel.hpp"

namespace {

using pads::cli::RunConfig;
using pads::cli::Settings;

constexpr int kExitConfig = 2;
constexpr int kExitConvergence = 3;

int fail(const std::string& kind, const std::string& message, int code) {
  std::cerr << nlohmann::json{{"error", kind}, {"message", message}, {"exit_code", code}}.dump() << std::endl;
  return code;
}

struct Command {
  std::string name;
  std::string help;
  std::vector<std::string> extraKeys;
  std::string defaultFormat;
  std::function<int(const RunConfig&, std::ostream&)> run;
  bool allowAlpha34 = false;
};

const std::vector<std::string> kCommonKeys = {"d",      "nu",   "m0sq",   "xi",     "alpha",  "eps",
                                              "points", "seed", "output", "format", "threads"};

const std::map<std::string, std::string> kHelp = {
    {"d", "boundary dimension d (spacetime d+1)"},
    {"nu", "order nu (conformal coupling); excludes m0sq/xi"},
    {"m0sq", "bare mass squared, with --xi"},
    {"xi", "curvature coupling, with --m0sq"},
    {"alpha", "boundary condition: pi, pi/2, 2pi/3 or radians"},
    {"eps", "comma-separated regulator ladder"},
    {"points", "CSV file or inline rows 't,x..,z,tp,xp..,zp' separated by ';'"},
    {"seed", "seed for randomized inputs"},
    {"output", "output file (default stdout)"},
    {"format", "csv or json"},
    {"threads", "worker cap"},
    {"pairs", "number of random pairs"},
    {"x", "first point t,x..,z"},
    {"k", "covector at x: k_t,k_x..,k_z"},
    {"xp", "second point"},
    {"kp", "covector at the second point"},
    {"tol", "predicate tolerance"},
    {"n", "basis size"},
    {"q", "radial momentum"},
    {"alphas", "explicit comma-separated alpha list"},
    {"alpha-min", "grid start"},
    {"alpha-max", "grid end"},
    {"steps", "grid size"},
    {"only", "comma-separated criterion ids"},
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Command> commands = {
      {"eval", "kernel values on point pairs", {"pairs"}, "csv", pads::cli::runEval},
      {"compare", "mode-sum oracle against the closed form", {"pairs"}, "json", pads::cli::runCompare},
      {"geodesics", "separation and null-connection report", {"pairs"}, "json", pads::cli::runGeodesics},
      {"wf-check", "wavefront predicates for (x,k;x',k')", {"x", "k", "xp", "kp", "tol"}, "json", pads::cli::runWfCheck},
      {"algebra", "Gram matrices and identity residuals", {"n"}, "json", pads::cli::runAlgebra},
      {"bc-scan", "boundary functional over an alpha grid", {"q", "alphas", "alpha-min", "alpha-max", "steps"}, "csv",
       pads::cli::runBcScan, true},
      {"acceptance", "run the acceptance suite", {"only"}, "csv", pads::cli::runAcceptance},
  };

  CLI::App app{"Propagators and two-point functions on the Poincare patch of AdS"};
  app.require_subcommand(1);
  std::map<std::string, Settings> flagValues;
  std::map<std::string, std::string> configPaths;
  std::map<std::string, std::vector<CLI::Option*>> options;
  for (const auto& cmd : commands) {
    CLI::App* sub = app.add_subcommand(cmd.name, cmd.help);
    sub->add_option("--config", configPaths[cmd.name], "flat key = value file; flags override it");
    std::vector<std::string> keys = kCommonKeys;
    keys.insert(keys.end(), cmd.extraKeys.begin(), cmd.extraKeys.end());
    for (const auto& key : keys)
      options[cmd.name].push_back(sub->add_option("--" + key, flagValues[cmd.name][key], kHelp.at(key)));
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail("config", e.what(), kExitConfig);
  }

  for (const auto& cmd : commands) {
    if (!app.got_subcommand(cmd.name)) continue;
    try {
      std::vector<std::string> keys = kCommonKeys;
      keys.insert(keys.end(), cmd.extraKeys.begin(), cmd.extraKeys.end());
      Settings merged;
      if (!configPaths[cmd.name].empty()) merged = pads::cli::readConfigFile(configPaths[cmd.name], keys);
      for (std::size_t k = 0; k < keys.size(); ++k)
        if (options[cmd.name][k]->count() > 0) merged[keys[k]] = flagValues[cmd.name][keys[k]];
      const RunConfig cfg = pads::cli::makeConfig(merged, cmd.defaultFormat, cmd.allowAlpha34);
      pads::setThreads(cfg.threads);
      if (cfg.output.empty()) return cmd.run(cfg, std::cout);
      std::ofstream file(cfg.output);
      if (!file) return fail("config", "cannot open output file '" + cfg.output + "'", kExitConfig);
      return cmd.run(cfg, file);
    } catch (const pads::Error& e) {
      const bool config = e.category() == pads::ErrorCategory::config;
      return fail(pads::kindName(e.kind()), e.what(), config ? kExitConfig : kExitConvergence);
    } catch (const std::exception& e) {
      return fail("internal", e.what(), kExitConvergence);
    }
  }
  return fail("config", "no subcommand", kExitConfig);
}
