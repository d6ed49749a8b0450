#pragma once

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

namespace fdosc::cli {

/// Output file could not be written.
class IoError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

using Cell = std::variant<std::int64_t, double, std::string>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

/// Shortest decimal that round-trips to the same double; "nan", "inf", "-inf"
/// for non-finite values.
std::string format_double(double v);

/// Header row plus one line per row, comma separated, "\n" terminated.
/// Fields containing commas, quotes or newlines are quoted. Throws
/// SizeError for ragged tables.
std::string to_csv(const Table& t);

/// Writes to_csv(t) to `path`. Throws IoError on failure.
void emit_csv(const Table& t, const std::filesystem::path& path);

}  // namespace fdosc::cli
