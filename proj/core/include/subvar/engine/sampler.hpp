#pragma once

#include <cstdint>
#include <vector>

#include "subvar/engine/posterior.hpp"
#include "subvar/random.hpp"

namespace subvar::engine {

struct ParamDraw {
  Matrix A;      // K x M
  Matrix Sigma;  // M x M
};

/// Σ ~ IW(ν̄, S̄) by the Bartlett decomposition, then A|Σ matrix-normal with
/// row covariance V̄ and column covariance Σ. Throws ArgumentError when
/// ν̄ <= M + 1 or n < 1.
std::vector<ParamDraw> sample_posterior(const Posterior& post, int n, std::uint64_t seed);
std::vector<ParamDraw> sample_posterior(const Posterior& post, int n, Rng& rng);

}  // namespace subvar::engine
