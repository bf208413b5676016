#pragma once

#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace subvar {

/// Shortest decimal form that round-trips a double ("%.17g"), with fixed
/// spellings for non-finite values so outputs are byte-stable.
std::string format_double(double value);

/// One "# key=value" comment line per entry, written ahead of CSV payloads.
using Metadata = std::vector<std::pair<std::string, std::string>>;
void write_metadata_header(std::ostream& out, const Metadata& meta);

/// Joins already-formatted fields with commas and terminates the line.
void write_csv_row(std::ostream& out, const std::vector<std::string>& fields);

/// Splits one CSV line on commas (no quoting support; the library's formats
/// never quote).
std::vector<std::string> split_csv_line(std::string_view line);

std::string trim(std::string_view text);

}  // namespace subvar
