// cavitylz: config-driven double-cavity simulation front end.
//
// Subcommands: modes, sweep, transfer, regimes, mirror, version.
// Exit codes: 0 success, 2 configuration error, 3 solver/integrator error.
#include <cstdio>
#include <exception>
#include <filesystem>
#include <functional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "cavitylz/config.hpp"
#include "cavitylz/errors.hpp"
#include "cavitylz/runners.hpp"
#include "cavitylz/version.hpp"

namespace {

namespace fs = std::filesystem;

struct CommonOptions {
  std::string config_path;
  std::string out_dir = ".";
  int jobs = 1;
  std::vector<std::string> overrides;
};

using Runner = cavitylz::runners::RunResult (*)(
    const cavitylz::config::ScenarioConfig&, const fs::path&, int);

void add_common_options(CLI::App* sub, CommonOptions& opts) {
  sub->add_option("--config", opts.config_path, "JSON scenario config")
      ->required();
  sub->add_option("--out", opts.out_dir, "output directory (default: .)");
  sub->add_option("--jobs", opts.jobs, "worker threads for grid solves")
      ->check(CLI::PositiveNumber);
  sub->add_option("--override", opts.overrides,
                  "config override as path.to.key=value (repeatable)");
}

int execute(const CommonOptions& opts, Runner runner) {
  cavitylz::config::Json doc =
      cavitylz::config::load_json_file(opts.config_path);
  for (const std::string& assignment : opts.overrides)
    cavitylz::config::apply_override(doc, assignment);
  const cavitylz::config::ScenarioConfig cfg =
      cavitylz::config::parse_config(doc);
  const cavitylz::runners::RunResult result =
      runner(cfg, opts.out_dir, opts.jobs);
  for (const fs::path& p : result.outputs)
    std::printf("wrote %s\n", p.string().c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"double-cavity mode spectra, amplitude transfer dynamics, and "
               "mirror characterization"};
  app.require_subcommand(1);

  struct Command {
    const char* name;
    const char* help;
    Runner runner;
  };
  const std::vector<Command> commands = {
      {"modes", "mode spectrum over a mirror-displacement grid",
       &cavitylz::runners::run_modes},
      {"sweep", "amplitude trajectories through the crossing",
       &cavitylz::runners::run_sweep},
      {"transfer", "side-to-side amplitude ratios along the branches",
       &cavitylz::runners::run_transfer},
      {"regimes", "validity-regime map and feasibility estimates",
       &cavitylz::runners::run_regimes},
      {"mirror", "mirror transmission curves", &cavitylz::runners::run_mirror},
  };

  std::vector<CommonOptions> option_sets(commands.size());
  std::function<int()> action;  // bound when a subcommand parses

  for (std::size_t i = 0; i < commands.size(); ++i) {
    CLI::App* sub = app.add_subcommand(commands[i].name, commands[i].help);
    add_common_options(sub, option_sets[i]);
    const Runner runner = commands[i].runner;
    CommonOptions* opts = &option_sets[i];
    sub->callback([&action, opts, runner]() {
      action = [opts, runner]() { return execute(*opts, runner); };
    });
  }

  CLI::App* version = app.add_subcommand("version", "print tool version");
  version->callback([&action]() {
    action = []() {
      std::printf("cavitylz %s\n", cavitylz::version_string);
      return 0;
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;  // bad usage is a configuration error
  }

  try {
    return action ? action() : 2;
  } catch (const cavitylz::ConfigError& e) {
    std::fprintf(stderr, "config error: %s\n", e.what());
    return 2;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return 3;
  }
}
