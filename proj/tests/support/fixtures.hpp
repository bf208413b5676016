#pragma once

#include <cstdint>
#include <random>

#include "subvar/types.hpp"

namespace subvar::fixture {

/// Gaussian noise matrix with the given standard deviation.
inline Matrix noise(Index rows, Index cols, std::uint64_t seed, double sd = 1.0) {
  std::mt19937_64 rng(seed);
  std::normal_distribution<double> normal(0.0, sd);
  Matrix out(rows, cols);
  for (Index j = 0; j < cols; ++j)
    for (Index i = 0; i < rows; ++i) out(i, j) = normal(rng);
  return out;
}

/// T x M path of a stable VAR(p) with diagonal-dominant coefficients.
inline Matrix stable_var(Index M, Index T, int p, std::uint64_t seed) {
  const Matrix e = noise(T + 50, M, seed);
  const Matrix mix = 0.1 * noise(M, M, seed + 1);
  Matrix y = Matrix::Zero(T + 50, M);
  for (Index t = p; t < T + 50; ++t) {
    Vector v = e.row(t).transpose() + Vector::Constant(M, 0.2);
    for (int l = 1; l <= p; ++l) {
      const double own = 0.5 / l;
      v += own * y.row(t - l).transpose() + (mix / (l * 2.0)) * y.row(t - l).transpose();
    }
    y.row(t) = v.transpose();
  }
  return y.bottomRows(T);
}

}  // namespace subvar::fixture
