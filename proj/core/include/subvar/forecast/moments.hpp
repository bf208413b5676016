#pragma once

#include "subvar/engine/sampler.hpp"
#include "subvar/types.hpp"

namespace subvar::forecast {

/// VAR(p) in first-order form s_{t+1} = C s_t + c + E ε_{t+1}, s_t = (y_t', ..., y_{t-p+1}')'.
struct CompanionForm {
  Matrix comp_matrix;     // Mp x Mp
  Vector comp_intercept;  // Mp
  Matrix noise_embed;     // Mp x M, identity on the top block
};

/// Builds the companion form from a K x M coefficient matrix laid out as
/// (A_1; ...; A_p; intercept). Throws ArgumentError if K != Mp + 1.
CompanionForm companion_form(const Matrix& A);

struct ForecastMoments {
  Vector mean;  // M
  Matrix cov;   // M x M
};

/// Mean and covariance of y_{T+h} given one parameter draw and the
/// regressor row x_T = (y_T', ..., y_{T-p+1}', 1).
ForecastMoments iterated_forecast_moments(const engine::ParamDraw& draw, const Vector& x_T,
                                          int h);

/// Same recursion, returning moments for every horizon 1..h_max.
std::vector<ForecastMoments> forecast_moment_path(const engine::ParamDraw& draw,
                                                  const Vector& x_T, int h_max);

}  // namespace subvar::forecast
