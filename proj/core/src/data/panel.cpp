#include "subvar/data/panel.hpp"

#include <algorithm>

#include "subvar/data/transform.hpp"
#include "subvar/errors.hpp"

namespace subvar::data {

SizeClass parse_size_class(std::string_view text) {
  if (text == "S") return SizeClass::S;
  if (text == "M") return SizeClass::M;
  if (text == "L") return SizeClass::L;
  if (text == "XL") return SizeClass::XL;
  throw ConfigError("unknown size class '" + std::string(text) + "' (expected S, M, L, XL)");
}

const char* to_string(SizeClass size) {
  switch (size) {
    case SizeClass::S: return "S";
    case SizeClass::M: return "M";
    case SizeClass::L: return "L";
    case SizeClass::XL: return "XL";
  }
  return "?";
}

PanelData PanelData::head(Index rows) const {
  if (rows < 0 || rows > T()) throw ArgumentError("panel head beyond sample");
  PanelData out;
  out.names = names;
  if (!dates.empty()) out.dates.assign(dates.begin(), dates.begin() + rows);
  out.data = data.topRows(rows);
  out.focus = focus;
  out.prior_means = prior_means;
  return out;
}

std::size_t PanelData::index_of(std::string_view name) const {
  const auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw ConfigError("variable '" + std::string(name) + "' not in panel");
  return static_cast<std::size_t>(it - names.begin());
}

PanelData build_panel(const std::vector<RawSeries>& raw, SizeClass size,
                      const FocusCodes& focus, const std::vector<std::string>& dates) {
  std::vector<const RawSeries*> selected;
  for (const auto& s : raw) {
    if (s.in(size)) selected.push_back(&s);
  }
  if (selected.empty()) {
    throw ConfigError(std::string("no series belong to size class ") + to_string(size));
  }
  PanelData panel;
  for (const auto* s : selected) panel.names.push_back(s->code);
  for (std::size_t k = 0; k < focus.size(); ++k) {
    const auto it = std::find(panel.names.begin(), panel.names.end(), focus[k]);
    if (it == panel.names.end()) {
      throw ConfigError("focus variable '" + focus[k] + "' is not in size class " +
                        to_string(size));
    }
    panel.focus[k] = static_cast<std::size_t>(it - panel.names.begin());
  }

  const std::size_t raw_length = selected.front()->values.size();
  int max_lost = 0;
  for (const auto* s : selected) {
    if (s->values.size() != raw_length) {
      throw DataError("ragged raw lengths: '" + s->code + "' has " +
                      std::to_string(s->values.size()) + " observations, '" +
                      selected.front()->code + "' has " + std::to_string(raw_length));
    }
    max_lost = std::max(max_lost, leading_observations_lost(to_transform_code(s->tcode)));
  }
  if (!dates.empty() && dates.size() != raw_length) {
    throw DataError("date column length does not match series length");
  }

  const auto rows = static_cast<Index>(raw_length) - max_lost;
  panel.data.resize(rows, static_cast<Index>(selected.size()));
  for (std::size_t j = 0; j < selected.size(); ++j) {
    const auto* s = selected[j];
    const auto transformed = apply_transform(s->values, s->tcode, s->code);
    const auto offset = static_cast<Index>(transformed.size()) - rows;
    for (Index t = 0; t < rows; ++t) {
      panel.data(t, static_cast<Index>(j)) = transformed[static_cast<std::size_t>(t + offset)];
    }
    panel.prior_means.push_back(s->prior_mean.value_or(0.0));
  }
  if (!dates.empty()) panel.dates.assign(dates.begin() + max_lost, dates.end());
  return panel;
}

PanelData panel_from_matrix(Matrix data, std::vector<std::string> names,
                            std::array<std::size_t, 3> focus) {
  PanelData panel;
  if (names.empty()) {
    for (Index j = 0; j < data.cols(); ++j) names.push_back("y" + std::to_string(j + 1));
  }
  if (static_cast<Index>(names.size()) != data.cols()) {
    throw ArgumentError("panel names do not match column count");
  }
  for (auto f : focus) {
    if (static_cast<Index>(f) >= data.cols()) throw ConfigError("focus index beyond panel width");
  }
  panel.names = std::move(names);
  panel.data = std::move(data);
  panel.focus = focus;
  panel.prior_means.assign(static_cast<std::size_t>(panel.data.cols()), 0.0);
  return panel;
}

}  // namespace subvar::data
