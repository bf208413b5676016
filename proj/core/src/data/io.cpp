#include "subvar/data/io.hpp"

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "json.hpp"

#include "subvar/csv.hpp"
#include "subvar/errors.hpp"

namespace subvar::data {
namespace {

double parse_number(const std::string& field, std::size_t line, std::size_t column) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (field.empty() || ec != std::errc() || ptr != last) {
    throw DataError("unparsable value '" + field + "' at line " + std::to_string(line) +
                    ", column " + std::to_string(column));
  }
  return value;
}

bool skip_line(const std::string& line) {
  const auto t = trim(line);
  return t.empty() || t.front() == '#';
}

}  // namespace

RawTable read_data_csv(std::istream& in) {
  RawTable table;
  std::string line;
  std::size_t line_no = 0;
  std::vector<std::vector<double>> rows;
  int stage = 0;
  while (std::getline(in, line)) {
    ++line_no;
    if (skip_line(line)) continue;
    auto fields = split_csv_line(line);
    if (stage == 0) {
      if (fields.size() < 2) throw DataError("data CSV header needs a date column and series");
      table.codes.assign(fields.begin() + 1, fields.end());
      stage = 1;
      continue;
    }
    if (fields.size() != table.codes.size() + 1) {
      throw DataError("line " + std::to_string(line_no) + " has " +
                      std::to_string(fields.size()) + " fields, expected " +
                      std::to_string(table.codes.size() + 1));
    }
    if (stage == 1) {
      for (std::size_t j = 1; j < fields.size(); ++j) {
        table.tcodes.push_back(static_cast<int>(parse_number(fields[j], line_no, j)));
      }
      stage = 2;
      continue;
    }
    table.dates.push_back(fields[0]);
    std::vector<double> row;
    row.reserve(table.codes.size());
    for (std::size_t j = 1; j < fields.size(); ++j) {
      row.push_back(parse_number(fields[j], line_no, j));
    }
    rows.push_back(std::move(row));
  }
  if (stage < 2) throw DataError("data CSV is missing its header or transform-code row");
  table.values.resize(static_cast<Index>(rows.size()), static_cast<Index>(table.codes.size()));
  for (std::size_t t = 0; t < rows.size(); ++t) {
    for (std::size_t j = 0; j < rows[t].size(); ++j) {
      table.values(static_cast<Index>(t), static_cast<Index>(j)) = rows[t][j];
    }
  }
  return table;
}

RawTable read_data_csv(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open data file " + path.string());
  return read_data_csv(in);
}

void write_data_csv(std::ostream& out, const std::vector<std::string>& codes,
                    const std::vector<int>& tcodes, const std::vector<std::string>& dates,
                    const Matrix& values) {
  std::vector<std::string> fields{"date"};
  fields.insert(fields.end(), codes.begin(), codes.end());
  write_csv_row(out, fields);
  fields.assign({"tcode"});
  for (int c : tcodes) fields.push_back(std::to_string(c));
  write_csv_row(out, fields);
  for (Index t = 0; t < values.rows(); ++t) {
    fields.assign({dates.empty() ? std::to_string(t) : dates[static_cast<std::size_t>(t)]});
    for (Index j = 0; j < values.cols(); ++j) fields.push_back(format_double(values(t, j)));
    write_csv_row(out, fields);
  }
}

std::vector<ManifestEntry> read_manifest(std::istream& in) {
  nlohmann::json doc;
  try {
    in >> doc;
  } catch (const nlohmann::json::exception& e) {
    throw ConfigError(std::string("manifest is not valid JSON: ") + e.what());
  }
  if (!doc.is_array()) throw ConfigError("manifest must be a JSON array");
  std::vector<ManifestEntry> out;
  for (const auto& item : doc) {
    ManifestEntry entry;
    try {
      entry.code = item.at("code").get<std::string>();
      if (item.contains("tcode")) entry.tcode = item.at("tcode").get<int>();
      for (const auto& s : item.at("sizes")) {
        entry.sizes[static_cast<std::size_t>(parse_size_class(s.get<std::string>()))] = true;
      }
      if (item.contains("prior_mean")) entry.prior_mean = item.at("prior_mean").get<double>();
    } catch (const nlohmann::json::exception& e) {
      throw ConfigError(std::string("bad manifest entry: ") + e.what());
    }
    out.push_back(std::move(entry));
  }
  return out;
}

std::vector<ManifestEntry> read_manifest(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open manifest " + path.string());
  return read_manifest(in);
}

std::vector<RawSeries> join_manifest(const RawTable& table,
                                     const std::vector<ManifestEntry>& manifest) {
  std::vector<RawSeries> out;
  for (const auto& entry : manifest) {
    const auto it = std::find(table.codes.begin(), table.codes.end(), entry.code);
    if (it == table.codes.end()) {
      throw ConfigError("manifest series '" + entry.code + "' is missing from the data file");
    }
    const auto j = static_cast<std::size_t>(it - table.codes.begin());
    RawSeries s;
    s.code = entry.code;
    s.tcode = table.tcodes[j];
    if (entry.tcode && *entry.tcode != s.tcode) {
      throw ConfigError("transform code for '" + entry.code + "' differs between manifest (" +
                        std::to_string(*entry.tcode) + ") and data file (" +
                        std::to_string(s.tcode) + ")");
    }
    const Vector col = table.values.col(static_cast<Index>(j));
    s.values.assign(col.data(), col.data() + col.size());
    s.sizes = entry.sizes;
    s.prior_mean = entry.prior_mean;
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<RawSeries> series_from_table(const RawTable& table) {
  std::vector<RawSeries> out;
  for (std::size_t j = 0; j < table.codes.size(); ++j) {
    RawSeries s;
    s.code = table.codes[j];
    s.tcode = table.tcodes[j];
    const Vector col = table.values.col(static_cast<Index>(j));
    s.values.assign(col.data(), col.data() + col.size());
    s.sizes = {true, true, true, true};
    out.push_back(std::move(s));
  }
  return out;
}

std::vector<std::string> quarterly_dates(int first_year, std::size_t count) {
  std::vector<std::string> out;
  out.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    char buf[16];
    std::snprintf(buf, sizeof buf, "%04d-%02d-01", first_year + static_cast<int>(i / 4),
                  static_cast<int>(1 + 3 * (i % 4)));
    out.emplace_back(buf);
  }
  return out;
}

}  // namespace subvar::data
