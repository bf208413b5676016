#include "subvar/data/regression.hpp"

#include <cmath>

#include "subvar/errors.hpp"

namespace subvar::data {

RegressionData build_lag_matrix(const Matrix& series, int p) {
  if (p < 1) throw ArgumentError("lag order must be at least 1");
  const Index T = series.rows();
  const Index M = series.cols();
  if (T <= p) {
    throw DataError("need more than p = " + std::to_string(p) + " observations, got " +
                    std::to_string(T));
  }
  RegressionData out;
  out.p = p;
  const Index rows = T - p;
  out.Y = series.bottomRows(rows);
  out.X.resize(rows, M * p + 1);
  for (int lag = 1; lag <= p; ++lag) {
    out.X.middleCols((lag - 1) * M, M) = series.middleRows(p - lag, rows);
  }
  out.X.col(M * p).setOnes();
  return out;
}

RegressionData build_lag_matrix(const PanelData& panel, int p) {
  return build_lag_matrix(panel.data, p);
}

Matrix reconstruct_series(const RegressionData& data) {
  const Index M = data.M();
  const int p = data.p;
  Matrix series(data.effective_T() + p, M);
  for (int lag = 1; lag <= p; ++lag) {
    series.row(p - lag) = data.X.block(0, (lag - 1) * M, 1, M);
  }
  series.bottomRows(data.effective_T()) = data.Y;
  return series;
}

Vector forecast_state(const Matrix& series, int p) {
  const Index T = series.rows();
  const Index M = series.cols();
  if (T < p) throw DataError("not enough observations for the forecast state");
  Vector x(M * p + 1);
  for (int lag = 1; lag <= p; ++lag) {
    x.segment((lag - 1) * M, M) = series.row(T - lag).transpose();
  }
  x(M * p) = 1.0;
  return x;
}

double ar_residual_std(const Vector& y, int p) {
  if (p < 1) throw ArgumentError("lag order must be at least 1");
  if (y.size() <= p + 2) {
    throw DataError("AR(" + std::to_string(p) + ") scale needs more than " +
                    std::to_string(p + 2) + " observations");
  }
  const auto reg = build_lag_matrix(Matrix(y), p);
  const Index t_eff = reg.effective_T();
  const Eigen::ColPivHouseholderQR<Matrix> qr(reg.X);
  const Vector coef = qr.solve(reg.Y);
  const Vector resid = reg.Y - reg.X * coef;
  const double rss = resid.squaredNorm();
  const double centered = (y.array() - y.mean()).square().sum();
  const double variance = rss / static_cast<double>(t_eff - p - 1);
  // Scale-relative test: exact recursions leave round-off residuals only.
  if (!(centered > 0.0) || !(rss > 1e-20 * centered)) {
    throw DegenerateSeriesError("AR(" + std::to_string(p) +
                                ") residual variance is zero; series is degenerate");
  }
  return std::sqrt(variance);
}

Vector ar_residual_scales(const Matrix& series, int p) {
  Vector out(series.cols());
  for (Index j = 0; j < series.cols(); ++j) {
    try {
      out(j) = ar_residual_std(series.col(j), p);
    } catch (const DegenerateSeriesError& e) {
      throw DegenerateSeriesError("column " + std::to_string(j) + ": " + e.what());
    }
  }
  return out;
}

}  // namespace subvar::data
