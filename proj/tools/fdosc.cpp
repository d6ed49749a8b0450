#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "fdosc/cli/run_config.hpp"
#include "fdosc/cli/runner.hpp"

int main(int argc, char** argv) {
  CLI::App app{"f-deformed oscillator toolkit"};
  std::string task;
  std::string config_file;
  std::vector<std::string> params;
  std::string out_dir;

  app.add_option("task", task, "Task to run")
      ->required()
      ->check(CLI::IsMember(fdosc::cli::task_names()));
  app.add_option("--config", config_file, "JSON config file")->check(CLI::ExistingFile);
  app.add_option("--param", params, "Override key=value (repeatable, dotted keys)")->take_all();
  app.add_option("--out", out_dir, "Output directory")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return fdosc::cli::kConfigError;
  }

  std::optional<std::filesystem::path> cfg;
  if (!config_file.empty()) cfg = config_file;
  return fdosc::cli::run_command(task, cfg, params, out_dir, std::cerr);
}
