#include "subvar/data/transform.hpp"

#include <cmath>
#include <sstream>

#include "subvar/errors.hpp"

namespace subvar::data {
namespace {

std::string where(std::string_view name, std::size_t index) {
  std::ostringstream out;
  out << "series '" << (name.empty() ? "<unnamed>" : name) << "' at index " << index;
  return out.str();
}

std::vector<double> logs(std::span<const double> y, std::string_view name) {
  std::vector<double> out(y.size());
  for (std::size_t i = 0; i < y.size(); ++i) {
    if (!(y[i] > 0.0)) {
      throw DomainError("log transform of non-positive value " + std::to_string(y[i]) +
                        " in " + where(name, i));
    }
    out[i] = std::log(y[i]);
  }
  return out;
}

std::vector<double> diff(const std::vector<double>& y) {
  std::vector<double> out;
  out.reserve(y.size() > 0 ? y.size() - 1 : 0);
  for (std::size_t i = 1; i < y.size(); ++i) out.push_back(y[i] - y[i - 1]);
  return out;
}

}  // namespace

TransformCode to_transform_code(int tcode) {
  if (tcode < 1 || tcode > 7) {
    throw ConfigError("unknown transformation code " + std::to_string(tcode) +
                      " (expected 1..7)");
  }
  return static_cast<TransformCode>(tcode);
}

int leading_observations_lost(TransformCode code) {
  switch (code) {
    case TransformCode::Level:
    case TransformCode::Log:
      return 0;
    case TransformCode::Diff:
    case TransformCode::LogDiff:
      return 1;
    case TransformCode::Diff2:
    case TransformCode::LogDiff2:
    case TransformCode::GrowthDiff:
      return 2;
  }
  return 0;
}

std::vector<double> apply_transform(std::span<const double> series, TransformCode code,
                                    std::string_view series_name) {
  if (series.size() < 3) {
    throw DataError("series '" + std::string(series_name) +
                    "' needs at least 3 observations to transform");
  }
  for (std::size_t i = 0; i < series.size(); ++i) {
    if (!std::isfinite(series[i])) {
      throw DataError("non-finite raw value in " + where(series_name, i));
    }
  }
  const std::vector<double> y(series.begin(), series.end());
  switch (code) {
    case TransformCode::Level:
      return y;
    case TransformCode::Diff:
      return diff(y);
    case TransformCode::Diff2:
      return diff(diff(y));
    case TransformCode::Log:
      return logs(series, series_name);
    case TransformCode::LogDiff:
      return diff(logs(series, series_name));
    case TransformCode::LogDiff2:
      return diff(diff(logs(series, series_name)));
    case TransformCode::GrowthDiff: {
      std::vector<double> growth;
      growth.reserve(y.size() - 1);
      for (std::size_t i = 1; i < y.size(); ++i) {
        if (y[i - 1] == 0.0) {
          throw DomainError("growth ratio with zero divisor in " + where(series_name, i - 1));
        }
        growth.push_back(y[i] / y[i - 1] - 1.0);
      }
      return diff(growth);
    }
  }
  return y;
}

std::vector<double> apply_transform(std::span<const double> series, int tcode,
                                    std::string_view series_name) {
  return apply_transform(series, to_transform_code(tcode), series_name);
}

}  // namespace subvar::data
