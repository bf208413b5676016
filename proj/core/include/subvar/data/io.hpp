#pragma once

#include <filesystem>
#include <array>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "subvar/data/panel.hpp"

namespace subvar::data {

/// Contents of a data CSV: header of identifiers, a transform-code row and
/// one row per period with an ISO date in column 0.
struct RawTable {
  std::vector<std::string> codes;
  std::vector<int> tcodes;
  std::vector<std::string> dates;
  Matrix values;  // periods x series
};

/// Lines starting with '#' are treated as metadata and skipped. Throws
/// DataError on ragged rows or unparsable fields (missing values included).
RawTable read_data_csv(std::istream& in);
RawTable read_data_csv(const std::filesystem::path& path);

void write_data_csv(std::ostream& out, const std::vector<std::string>& codes,
                    const std::vector<int>& tcodes, const std::vector<std::string>& dates,
                    const Matrix& values);

struct ManifestEntry {
  std::string code;
  std::optional<int> tcode;
  std::array<bool, 4> sizes{};
  std::optional<double> prior_mean;
};

/// Manifest JSON: an array of {code, tcode, sizes: [...], prior_mean?}.
std::vector<ManifestEntry> read_manifest(std::istream& in);
std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path);

/// Joins a data table with its manifest, in manifest order. Series missing
/// from the table, or a tcode disagreement, raise ConfigError.
std::vector<RawSeries> join_manifest(const RawTable& table,
                                     const std::vector<ManifestEntry>& manifest);

/// Every column of a table belongs to every size class (no manifest).
std::vector<RawSeries> series_from_table(const RawTable& table);

/// Quarterly ISO dates starting at first_year-01-01.
std::vector<std::string> quarterly_dates(int first_year, std::size_t count);

}  // namespace subvar::data
