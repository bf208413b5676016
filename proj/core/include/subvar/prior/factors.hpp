#pragma once

#include <vector>

#include "subvar/data/regression.hpp"
#include "subvar/types.hpp"

namespace subvar::prior {

/// Rank-q principal-components factorization X ≈ F L'.
struct FactorBasis {
  Matrix F;                 // rows x q, orthonormal columns (left singular vectors)
  Matrix L;                 // cols x q, V_q diag(s_q)
  Vector singular_values;   // all min(rows, cols) values, non-increasing
  int q = 0;
};

/// Throws ArgumentError unless 1 <= q <= min(rows, cols).
FactorBasis principal_components(const Matrix& X, int q);

/// Orthogonal projection onto the column space of F.
struct Projection {
  Matrix P;
  int rank = 0;
};

/// Builds F (F'F)^{-1} F' from an orthonormal basis of span(F) rather than
/// an explicit inverse. Throws NumericalError when F is numerically rank
/// deficient.
Projection projection_matrix(const Matrix& F);

/// ω / (1 - ω); throws ArgumentError outside [0, 0.99].
double shrinkage_ratio(double omega);

/// ω/(1-ω) · X'(I - Φ₀)X, evaluated densely.
Matrix subspace_precision(const Matrix& X, const Projection& phi0, double omega);

/// SVD of the lag block of a regression, shared read-only by every grid
/// point of one dataset.
///
/// Factors come from the lag block only (the intercept column is excluded
/// from the decomposition), while residual grams act on the full regressor
/// matrix: X'(I - Φ₀)X = X'X - (X'F_q)(F_q'X) with F_q orthonormal, so no
/// T x T projection is ever formed.
class SubspaceCache {
 public:
  SubspaceCache(const data::RegressionData& data, int max_q);

  int max_q() const { return static_cast<int>(grams_.size()) - 1; }
  /// Largest admissible number of factors, min(T - p, Mp).
  int rank_bound() const { return static_cast<int>(singular_values_.size()); }

  const Matrix& xtx() const { return xtx_; }
  const Vector& singular_values() const { return singular_values_; }
  /// First q left singular vectors of the lag block.
  Matrix factors(int q) const { return left_.leftCols(q); }
  /// X'(I - Φ₀)X for q factors; q = 0 gives X'X.
  const Matrix& residual_gram(int q) const;

 private:
  Matrix xtx_;
  Matrix left_;
  Vector singular_values_;
  std::vector<Matrix> grams_;
};

}  // namespace subvar::prior
