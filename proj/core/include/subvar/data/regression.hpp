#pragma once

#include "subvar/data/panel.hpp"
#include "subvar/types.hpp"

namespace subvar::data {

/// Full-data VAR(p) form Y = X A + E.
///
/// Row t of X is (y'_{t-1}, ..., y'_{t-p}, 1): lag blocks of width M
/// followed by an intercept in the last column, so K = Mp + 1.
struct RegressionData {
  Matrix Y;  // (T-p) x M
  Matrix X;  // (T-p) x K
  int p = 1;

  Index effective_T() const { return Y.rows(); }
  Index M() const { return Y.cols(); }
  Index K() const { return X.cols(); }

  /// X without the intercept column.
  auto lag_block() const { return X.leftCols(X.cols() - 1); }
};

RegressionData build_lag_matrix(const Matrix& series, int p);
RegressionData build_lag_matrix(const PanelData& panel, int p);

/// Recovers the T x M series a RegressionData was built from.
Matrix reconstruct_series(const RegressionData& data);

/// Regressor row (y'_T, ..., y'_{T-p+1}, 1) used to forecast the period
/// after the last row of `series`.
Vector forecast_state(const Matrix& series, int p);

/// Residual standard deviation of an AR(p)-with-intercept OLS fit,
/// sqrt(RSS / (T_eff - p - 1)) with T_eff = length - p.
///
/// Throws DegenerateSeriesError when residuals vanish (constant or exactly
/// autoregressive input) and DataError if length <= p + 2.
double ar_residual_std(const Vector& y, int p);

/// ar_residual_std for every column of a T x M block.
Vector ar_residual_scales(const Matrix& series, int p);

}  // namespace subvar::data
