#pragma once

#include <filesystem>
#include <string>
#include <vector>

namespace ferocc::csv {

/// Splits one CSV line. Handles double-quoted fields and strips a trailing
/// '\r' (CRLF input). No embedded-newline support; none of the formats used
/// here need it.
std::vector<std::string> split_line(const std::string& line);

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
};

/// Reads a CSV file with a mandatory header row.
Table read_file(const std::filesystem::path& path);

/// Quotes a field only when it contains a comma or quote.
std::string escape(const std::string& field);

std::string join_row(const std::vector<std::string>& fields);

/// Lossless double formatting (%.17g): parsing the output recovers the
/// exact value, which keeps metrics files byte-stable across reruns.
std::string format_double(double v);

/// Fixed-precision formatting for human-facing tables.
std::string format_fixed(double v, int digits);

}  // namespace ferocc::csv
