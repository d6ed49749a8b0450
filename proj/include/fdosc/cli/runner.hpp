#pragma once

#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fdosc/cli/csv.hpp"
#include "fdosc/cli/report.hpp"
#include "fdosc/cli/run_config.hpp"

namespace fdosc::cli {

/// Process exit statuses. Every failure class has its own code.
enum ExitStatus : int {
  kOk = 0,
  kCheckFailed = 1,
  kConfigError = 2,
  kTruncationError = 3,
  kQuadratureError = 4,
  kNumericError = 5,
  kIoError = 6,
};

struct RunOutcome {
  Table table;
  VerificationReport report;
};

/// Runs one task in memory. Library errors propagate.
RunOutcome execute(const RunConfig& config);

/// Runs one task and writes <out>/<task>.csv and <out>/report.json. Errors
/// are reported on `err` and mapped to ExitStatus; when the output
/// directory is usable an error report is still written.
int run(const RunConfig& config, std::ostream& err);

/// Command-line front end: loads the optional config file, applies
/// overrides, then calls run().
int run_command(std::string_view task, const std::optional<std::filesystem::path>& config_file,
                const std::vector<std::string>& overrides, const std::filesystem::path& out_dir,
                std::ostream& err);

}  // namespace fdosc::cli
