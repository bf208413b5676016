#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace subvar {

using Rng = std::mt19937_64;

/// Derives an independent seed for a named substream and task id.
///
/// All randomness in the library flows from one master seed through
/// substreams such as "dgp", "grid", "param-draws" or "backtest-origin";
/// the task id separates replications, hyper draws and origins so that the
/// result of a task never depends on scheduling order.
std::uint64_t derive_seed(std::uint64_t master, std::string_view stream,
                          std::uint64_t task = 0);

inline Rng make_stream(std::uint64_t master, std::string_view stream,
                       std::uint64_t task = 0) {
  return Rng(derive_seed(master, stream, task));
}

/// Uniform double in [0, 1) from the top 53 bits of one engine call.
inline double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

std::uint64_t fnv1a64(std::string_view bytes);

}  // namespace subvar
