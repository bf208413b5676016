#include "subvar/sim/synthetic_macro.hpp"

#include <cmath>
#include <random>

#include "subvar/errors.hpp"
#include "subvar/random.hpp"

namespace subvar::sim {

data::RawTable synthetic_macro(const std::vector<data::ManifestEntry>& manifest,
                               data::SizeClass size, int T, std::uint64_t seed) {
  if (T < 20) throw ArgumentError("synthetic macro panel needs T >= 20");
  std::vector<const data::ManifestEntry*> entries;
  for (const auto& e : manifest)
    if (e.sizes[static_cast<std::size_t>(size)]) entries.push_back(&e);
  if (entries.empty()) throw ConfigError("manifest has no series in the requested size class");

  Rng rng = make_stream(seed, "synthetic-macro");
  std::normal_distribution<double> normal(0.0, 1.0);
  constexpr int kFactors = 3;
  const Index N = static_cast<Index>(entries.size());

  Matrix f = Matrix::Zero(T, kFactors);
  for (Index t = 1; t < T; ++t)
    for (int k = 0; k < kFactors; ++k) f(t, k) = 0.7 * f(t - 1, k) + normal(rng);
  Matrix loadings(N, kFactors);
  for (Index i = 0; i < N; ++i)
    for (int k = 0; k < kFactors; ++k) loadings(i, k) = 0.6 * normal(rng);
  Matrix stationary = f * loadings.transpose();
  for (Index t = 0; t < T; ++t)
    for (Index i = 0; i < N; ++i) stationary(t, i) += normal(rng);

  data::RawTable table;
  table.dates = data::quarterly_dates(1960, static_cast<std::size_t>(T));
  table.values.resize(T, N);
  for (Index i = 0; i < N; ++i) {
    const auto& e = *entries[static_cast<std::size_t>(i)];
    const int code = e.tcode.value_or(1);
    table.codes.push_back(e.code);
    table.tcodes.push_back(code);
    auto z = stationary.col(i);
    auto x = table.values.col(i);
    switch (code) {
      case 1:
        x = z;
        break;
      case 2:
      case 3: {
        // first or second differences of a level around 5
        double level = 5.0;
        double slope = 0.0;
        for (Index t = 0; t < T; ++t) {
          if (code == 2) {
            level += 0.5 * z[t];
          } else {
            slope += 0.05 * z[t];
            level += slope;
          }
          x[t] = level;
        }
        break;
      }
      case 4:
        for (Index t = 0; t < T; ++t) x[t] = std::exp(2.0 + 0.2 * z[t]);
        break;
      case 5:
      case 6: {
        double log_level = std::log(100.0);
        double growth = 0.005;
        for (Index t = 0; t < T; ++t) {
          if (code == 5) {
            log_level += 0.005 + 0.01 * z[t];
          } else {
            growth = 0.9 * growth + 0.0005 + 0.001 * z[t];
            log_level += growth;
          }
          x[t] = std::exp(log_level);
        }
        break;
      }
      case 7: {
        double level = 100.0;
        double rate = 0.005;
        for (Index t = 0; t < T; ++t) {
          rate = 0.9 * rate + 0.0005 + 0.001 * z[t];
          level *= 1.0 + rate;
          x[t] = level;
        }
        break;
      }
      default:
        throw ConfigError("unknown transform code " + std::to_string(code) + " for " + e.code);
    }
  }
  return table;
}

}  // namespace subvar::sim
