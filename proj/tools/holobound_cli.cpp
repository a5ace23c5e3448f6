#include <cstdio>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "holobound/config.hpp"
#include "holobound/run.hpp"

using namespace holobound;

int main(int argc, char** argv) {
  CLI::App app{"holobound: numerical checks of pointwise estimates in weighted holomorphic spaces"};
  app.require_subcommand(1);

  auto* verify = app.add_subcommand("verify", "Run the checks of a config file");
  std::string config_path;
  std::optional<std::uint64_t> seed;
  std::string out_path;
  std::string format;
  verify->add_option("--config", config_path, "Config file (JSON)")->required();
  verify->add_option("--seed", seed, "Override the config seed");
  verify->add_option("--out", out_path, "Report path; stdout when omitted");
  verify->add_option("--format", format, "Report format")->check(CLI::IsMember({"csv", "json"}));

  auto* presets = app.add_subcommand("presets", "Built-in configurations");
  presets->require_subcommand(1);
  auto* list = presets->add_subcommand("list", "List preset names");
  auto* show = presets->add_subcommand("show", "Print a preset as config JSON");
  std::string preset_name;
  show->add_option("name", preset_name)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitConfigError;
  }

  if (*list) {
    for (const auto& name : preset_names()) std::cout << name << "  " << preset_summary(name) << "\n";
    return 0;
  }
  if (*show) {
    try {
      std::cout << serialize_config(preset(preset_name));
    } catch (const std::exception& e) {
      std::cerr << "error: " << e.what() << "\n";
      return kExitConfigError;
    }
    return 0;
  }

  RunConfig config;
  try {
    config = load_config(config_path);
    if (seed) config.seed = *seed;
    if (!format.empty()) config.output.format = format;
    if (!out_path.empty()) config.output.path = out_path;
  } catch (const ConfigError& e) {
    std::cerr << "config error: " << e.what() << "\n";
    return kExitConfigError;
  }

  const RunSummary summary = run(config);
  try {
    if (config.output.path.empty()) {
      std::cout << (config.output.format == "json" ? report_json(summary) : report_csv(summary));
    } else {
      write_report(summary, config.output.path, config.output.format);
    }
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfigError;
  }
  std::fprintf(stderr, "%zu checks: %zu pass, %zu fail, %zu inconclusive (%.1f s)\n", summary.total(), summary.pass,
               summary.fail, summary.inconclusive, summary.wall_seconds);
  return exit_status(summary);
}
