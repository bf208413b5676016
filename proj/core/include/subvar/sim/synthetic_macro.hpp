#pragma once

#include <cstdint>
#include <vector>

#include "subvar/data/io.hpp"

namespace subvar::sim {

/// Raw quarterly levels whose transforms are stationary factor-driven series.
///
/// For every manifest entry in `size`, a stationary AR(1) factor panel is
/// integrated back according to the entry's transform code (cumulated for
/// differences, exponentiated for logs) so that applying the code recovers
/// the stationary series. Used for smoke backtests when no data file is
/// supplied. Dates start in 1960Q1.
data::RawTable synthetic_macro(const std::vector<data::ManifestEntry>& manifest,
                               data::SizeClass size, int T, std::uint64_t seed);

}  // namespace subvar::sim
