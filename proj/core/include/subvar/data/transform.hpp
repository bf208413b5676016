#pragma once

#include <span>
#include <string_view>
#include <vector>

namespace subvar::data {

/// Stationarity transformation codes used by the FRED-QD database.
///
///   1  y                4  log y
///   2  Δy               5  Δ log y
///   3  Δ²y              6  Δ² log y
///                       7  Δ(y_t / y_{t-1} - 1)
enum class TransformCode : int {
  Level = 1,
  Diff = 2,
  Diff2 = 3,
  Log = 4,
  LogDiff = 5,
  LogDiff2 = 6,
  GrowthDiff = 7,
};

/// Validates an integer code; throws ConfigError for anything outside 1..7.
TransformCode to_transform_code(int tcode);

/// Observations lost at the start of the sample by a code (0, 1 or 2).
int leading_observations_lost(TransformCode code);

/// Applies a transformation to a series of raw levels.
///
/// The output is shorter than the input by leading_observations_lost(code).
/// `series_name` only decorates error messages. Throws DomainError on a
/// non-positive value under a log code (or a zero divisor under code 7) and
/// DataError when fewer than three observations are supplied.
std::vector<double> apply_transform(std::span<const double> series, TransformCode code,
                                    std::string_view series_name = {});

std::vector<double> apply_transform(std::span<const double> series, int tcode,
                                    std::string_view series_name = {});

}  // namespace subvar::data
