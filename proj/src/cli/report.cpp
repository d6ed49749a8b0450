#include "fdosc/cli/report.hpp"

#include "fdosc/cli/csv.hpp"

#include <algorithm>
#include <fstream>

namespace fdosc::cli {

bool VerificationReport::all_passed() const {
  return error.is_null() &&
         std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.passed; });
}

nlohmann::json VerificationReport::to_json() const {
  nlohmann::json j;
  j["task"] = task;
  j["config"] = config;
  j["checks"] = checks;
  j["summary"] = summary;
  j["outputs"] = outputs;
  j["passed"] = all_passed();
  if (!error.is_null()) j["error"] = error;
  return j;
}

void write_report(const VerificationReport& report, const std::filesystem::path& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open '" + path.string() + "' for writing");
  out << report.to_json().dump(2) << '\n';
  if (!out) throw IoError("failed writing '" + path.string() + "'");
}

}  // namespace fdosc::cli
