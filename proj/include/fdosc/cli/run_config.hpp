#pragma once

#include <complex>
#include <cstddef>
#include <filesystem>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "fdosc/model_catalog.hpp"

namespace fdosc::cli {

/// Malformed or inconsistent run configuration.
class ConfigError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

enum class Task { Spectrum, Coherent, Compare, Commutators, DisplacementCheck, Wavefunction, HarmonicLimit };

std::string_view to_string(Task t);
Task task_from_string(std::string_view name);
const std::vector<std::string>& task_names();

enum class CoherentKind { Annihilation, DisplacementClosed, DisplacementDirect, DisplacementFactored };

std::string_view to_string(CoherentKind k);

struct GridSpec {
  std::size_t nodes = 256;
  /// Radial domain upper bound; chosen from the tail bound when absent.
  std::optional<double> rho_max;
};

/// One run of one task. Built from a JSON document (see README for the
/// schema); every field has a default.
struct RunConfig {
  Task task = Task::Spectrum;
  ModelParams params = ModelParams::tpt(2.0, 1.0);
  std::complex<double> alpha{0.5, 0.0};
  std::optional<std::complex<double>> zeta;
  CoherentKind method = CoherentKind::Annihilation;
  std::size_t cutoff = 64;
  double tail_tol = 1e-20;
  double check_tol = 0.0;  ///< task default when 0
  std::size_t max_cutoff = 4096;
  GridSpec grid;
  std::vector<double> lambdas{1e2, 1e3, 1e4};
  double final_bound = 1e-2;  ///< harmonic-limit final deviation bound
  double rate_tol = 0.1;      ///< harmonic-limit rate exponent tolerance
  std::filesystem::path out_dir = ".";

  /// check_tol, or the task's default tolerance.
  double tolerance() const;
};

/// Applies `key=value` overrides to a config document. Dotted keys address
/// nested objects ("grid.nodes=512"); values are parsed as JSON when
/// possible and kept as strings otherwise.
void apply_overrides(nlohmann::json& doc, const std::vector<std::string>& overrides);

/// Validates and converts a config document. Throws ConfigError.
RunConfig parse_config(Task task, const nlohmann::json& doc);

/// Reads a config file (JSON). Throws ConfigError.
nlohmann::json load_config_file(const std::filesystem::path& path);

/// Canonical JSON echo of a config, recorded in report.json.
nlohmann::json to_json(const RunConfig& c);

/// Cap on auto-doubled cutoffs from FDOSC_MAX_CUTOFF, if set.
std::optional<std::size_t> max_cutoff_from_env();

}  // namespace fdosc::cli
