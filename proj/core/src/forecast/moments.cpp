#include "subvar/forecast/moments.hpp"

#include <string>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"

namespace subvar::forecast {

CompanionForm companion_form(const Matrix& A) {
  const Index M = A.cols();
  const Index K = A.rows();
  if (M < 1 || (K - 1) % M != 0 || K < M + 1)
    throw ArgumentError("companion_form: coefficient matrix must be (Mp+1) x M");
  const Index p = (K - 1) / M;
  const Index n = M * p;
  CompanionForm cf;
  cf.comp_matrix = Matrix::Zero(n, n);
  cf.comp_matrix.topRows(M) = A.topRows(n).transpose();
  if (p > 1) cf.comp_matrix.bottomLeftCorner(n - M, n - M).setIdentity();
  cf.comp_intercept = Vector::Zero(n);
  cf.comp_intercept.head(M) = A.row(K - 1).transpose();
  cf.noise_embed = Matrix::Zero(n, M);
  cf.noise_embed.topRows(M).setIdentity();
  return cf;
}

std::vector<ForecastMoments> forecast_moment_path(const engine::ParamDraw& draw,
                                                  const Vector& x_T, int h_max) {
  if (h_max < 1) throw ArgumentError("forecast horizon must be at least 1");
  const Index M = draw.A.cols();
  const Index K = draw.A.rows();
  if (x_T.size() != K) throw ArgumentError("state vector length must equal K");
  const CompanionForm cf = companion_form(draw.A);
  const Index n = cf.comp_matrix.rows();

  std::vector<ForecastMoments> out;
  out.reserve(static_cast<std::size_t>(h_max));
  Vector m = x_T.head(n);
  Matrix P = Matrix::Zero(n, n);
  for (int s = 0; s < h_max; ++s) {
    m = cf.comp_matrix * m + cf.comp_intercept;
    if (s == 0) {
      P.topLeftCorner(M, M) = draw.Sigma;
    } else {
      Matrix next = cf.comp_matrix * P * cf.comp_matrix.transpose();
      next.topLeftCorner(M, M) += draw.Sigma;
      P = symmetrized(next);
    }
    out.push_back({m.head(M), P.topLeftCorner(M, M)});
  }
  return out;
}

ForecastMoments iterated_forecast_moments(const engine::ParamDraw& draw, const Vector& x_T,
                                          int h) {
  return forecast_moment_path(draw, x_T, h).back();
}

}  // namespace subvar::forecast
