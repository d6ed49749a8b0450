#pragma once

#include <filesystem>
#include <string>
#include <vector>

#include <json.hpp>

#include "fdosc/verification.hpp"

namespace fdosc::cli {

/// Named checks of one run plus task-specific summary values. Contains no
/// timestamps or host data, so it is reproducible for a fixed config.
struct VerificationReport {
  std::string task;
  nlohmann::json config = nlohmann::json::object();
  std::vector<verify::CheckResult> checks;
  nlohmann::json summary = nlohmann::json::object();
  std::vector<std::string> outputs;
  /// Set when the run aborted; holds {"kind", "message", "exit_status"}.
  nlohmann::json error;

  bool all_passed() const;
  nlohmann::json to_json() const;
};

/// Writes report.to_json() (2-space indent, trailing newline) to `path`.
void write_report(const VerificationReport& report, const std::filesystem::path& path);

}  // namespace fdosc::cli
