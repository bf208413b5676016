#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "subvar/types.hpp"

namespace subvar::data {

enum class SizeClass { S, M, L, XL };

SizeClass parse_size_class(std::string_view text);
const char* to_string(SizeClass size);

/// One raw FRED series with its transform code and subset membership.
struct RawSeries {
  std::string code;
  std::vector<double> values;
  int tcode = 1;
  std::array<bool, 4> sizes{};  // indexed by SizeClass
  std::optional<double> prior_mean;  // own first-lag prior mean (Minnesota ā_j)

  bool in(SizeClass size) const { return sizes[static_cast<std::size_t>(size)]; }
};

/// A balanced panel of transformed, stationary series.
struct PanelData {
  std::vector<std::string> names;
  std::vector<std::string> dates;  // one label per row; may be empty
  Matrix data;                     // T x M
  std::array<std::size_t, 3> focus{0, 1, 2};
  std::vector<double> prior_means;  // per variable, defaults to 0

  Index T() const { return data.rows(); }
  Index M() const { return data.cols(); }

  /// Rows [0, rows) as a new panel; used for expanding-window estimation.
  PanelData head(Index rows) const;

  std::size_t index_of(std::string_view name) const;
};

using FocusCodes = std::array<std::string, 3>;

/// Transforms every series in the requested subset and trims them to a
/// common sample.
///
/// All series are aligned on the latest post-transform start, so the
/// deepest differencing in the subset sets the first usable row. Columns
/// follow the input order. `dates` (optional) labels the raw rows and is
/// trimmed identically. Throws ConfigError if a focus code is not in the
/// subset and DataError on ragged input lengths.
PanelData build_panel(const std::vector<RawSeries>& raw, SizeClass size,
                      const FocusCodes& focus,
                      const std::vector<std::string>& dates = {});

/// Panel from an already-stationary matrix (e.g. synthetic data).
PanelData panel_from_matrix(Matrix data, std::vector<std::string> names = {},
                            std::array<std::size_t, 3> focus = {0, 1, 2});

}  // namespace subvar::data
