#include "subvar/forecast/baselines.hpp"

#include <Eigen/QR>
#include <Eigen/SVD>
#include <cmath>
#include <numbers>
#include <string>

#include "subvar/errors.hpp"
#include "subvar/linalg.hpp"
#include "subvar/prior/conjugate_prior.hpp"
#include "subvar/prior/minnesota.hpp"

namespace subvar::forecast {

namespace {

struct LsFit {
  Matrix coef;
  Matrix chol;  // lower L with L L' = X'X
  Matrix resid_gram;
};

LsFit least_squares(const Matrix& X, const Matrix& Y) {
  const Index K = X.cols();
  if (X.rows() < K) throw NumericalError("augmented regression has fewer rows than regressors");
  Eigen::HouseholderQR<Matrix> qr(X);
  Matrix R = qr.matrixQR().topRows(K).triangularView<Eigen::Upper>();
  for (Index i = 0; i < K; ++i) {
    if (R(i, i) == 0.0) throw NumericalError("augmented regressors are rank deficient");
    if (R(i, i) < 0.0) R.row(i) *= -1.0;
  }
  LsFit fit;
  fit.coef = qr.solve(Y);
  fit.chol = R.transpose();
  const Matrix E = Y - X * fit.coef;
  fit.resid_gram = E.transpose() * E;
  return fit;
}

// log of π^{-nM/2} |X'X|^{-M/2} |S|^{-n/2} Γ_M(n/2).
double log_normalizer(double n, double logdet_xtx, double logdet_s, Index M) {
  const double m = static_cast<double>(M);
  return -0.5 * n * m * std::log(std::numbers::pi) - 0.5 * m * logdet_xtx - 0.5 * n * logdet_s +
         log_multivariate_gamma(0.5 * n, static_cast<int>(M));
}

}  // namespace

MinnesotaBvar::MinnesotaBvar(data::RegressionData data, Vector prior_mean, double kappa,
                             std::array<std::size_t, 3> focus)
    : data_(std::move(data)),
      prior_mean_(std::move(prior_mean)),
      kappa_(kappa),
      focus_(focus),
      stats_(engine::CrossProducts::from(data_)) {
  if (prior_mean_.size() == 0) prior_mean_ = Vector::Zero(data_.M());
  if (prior_mean_.size() != data_.M()) throw ArgumentError("prior mean length must equal M");
  for (std::size_t j : focus_)
    if (static_cast<Index>(j) >= data_.M()) throw ArgumentError("focus index out of range");
  sigma_ = data::ar_residual_scales(data::reconstruct_series(data_), data_.p);
}

MinnesotaBvar::Fit MinnesotaBvar::fit(const hyper::HyperPoint& point) const {
  if (!point.theta) throw ArgumentError("Minnesota BVAR grid point requires ϑ");
  const auto dummies = prior::minnesota_dummies(sigma_, prior_mean_, data_.p, *point.theta, kappa_);
  const Index d = dummies.X.rows();
  const Index T = data_.effective_T();
  const Index K = data_.K();
  const Index M = data_.M();

  Matrix Xs(d + T, K), Ys(d + T, M);
  Xs << dummies.X, data_.X;
  Ys << dummies.Y, data_.Y;

  const Vector ridge = prior::kMinnesotaScaleRidge * sigma_.array().square().matrix();
  const LsFit prior_fit = least_squares(dummies.X, dummies.Y);
  const LsFit post_fit = least_squares(Xs, Ys);
  Matrix prior_scale = prior_fit.resid_gram;
  prior_scale.diagonal() += ridge;
  Matrix post_scale = post_fit.resid_gram;
  post_scale.diagonal() += ridge;
  post_scale = symmetrized(post_scale);

  Fit out;
  out.post.mean = post_fit.coef;
  out.post.precision_chol = post_fit.chol;
  out.post.scale = post_scale;
  out.post.dof = static_cast<double>(d + T);
  out.post.logdet_prior_precision = logdet_from_cholesky(prior_fit.chol);
  out.post.logdet_posterior_precision = logdet_from_cholesky(post_fit.chol);
  out.post.logdet_scale = logdet_spd(post_scale, "BVAR posterior scale");
  const double logdet_prior_scale = logdet_spd(prior_scale, "BVAR prior scale");
  out.log_ml = log_normalizer(static_cast<double>(d + T), out.post.logdet_posterior_precision,
                              out.post.logdet_scale, M) -
               log_normalizer(static_cast<double>(d), out.post.logdet_prior_precision,
                              logdet_prior_scale, M);
  return out;
}

engine::Posterior MinnesotaBvar::posterior_at(const hyper::HyperPoint& point) const {
  return fit(point).post;
}

double MinnesotaBvar::log_evidence(const hyper::HyperPoint& point) const {
  return fit(point).log_ml;
}

std::vector<hyper::HyperPoint> bvar_grid(const std::vector<double>& thetas) {
  if (thetas.empty()) throw ArgumentError("BVAR grid needs at least one ϑ");
  std::vector<hyper::HyperPoint> grid;
  for (double t : thetas) {
    hyper::HyperPoint pt;
    pt.q = 1;
    pt.omega = 0.0;
    pt.theta = t;
    grid.push_back(pt);
  }
  return grid;
}

DfmSpec dfm_baseline_spec(const data::PanelData& panel, std::array<std::size_t, 3> focus, int p) {
  const Index M = panel.M();
  const Index T = panel.T();
  if (M <= 3) throw ArgumentError("DFM baseline needs more than the three focus series");
  if (T < 3) throw DataError("DFM baseline needs at least three observations");
  std::vector<Index> rest;
  for (Index j = 0; j < M; ++j)
    if (j != static_cast<Index>(focus[0]) && j != static_cast<Index>(focus[1]) &&
        j != static_cast<Index>(focus[2]))
      rest.push_back(j);

  const double dof = static_cast<double>(T - 1);
  Matrix Z(T, static_cast<Index>(rest.size()));
  for (Index c = 0; c < Z.cols(); ++c) {
    const auto col = panel.data.col(rest[static_cast<std::size_t>(c)]);
    const double mean = col.mean();
    const double sd = std::sqrt((col.array() - mean).square().sum() / dof);
    if (!(sd > 0.0))
      throw DegenerateSeriesError("series '" + panel.names[static_cast<std::size_t>(rest[static_cast<std::size_t>(c)])] +
                                  "' has zero variance");
    Z.col(c) = (col.array() - mean) / sd;
  }

  Eigen::BDCSVD<Matrix> svd(Z, Eigen::ComputeThinU);
  const Vector& s = svd.singularValues();
  DfmSpec spec;
  spec.p = p;
  int kept = 0;
  for (Index j = 0; j < s.size(); ++j) {
    const double sd = s[j] / std::sqrt(dof);
    spec.component_sd.push_back(sd);
    if (sd > 1.0) ++kept;
  }
  if (kept == 0) {
    kept = 1;
    spec.floored = true;
  }
  spec.n_factors = kept;

  Matrix favar(T, 3 + kept);
  std::vector<std::string> names;
  for (int k = 0; k < 3; ++k) {
    favar.col(k) = panel.data.col(static_cast<Index>(focus[static_cast<std::size_t>(k)]));
    names.push_back(panel.names.empty() ? "y" + std::to_string(k + 1)
                                        : panel.names[focus[static_cast<std::size_t>(k)]]);
  }
  favar.rightCols(kept) = svd.matrixU().leftCols(kept) * s.head(kept).asDiagonal();
  for (int k = 0; k < kept; ++k) names.push_back("PC" + std::to_string(k + 1));
  spec.panel = data::panel_from_matrix(std::move(favar), std::move(names), {0, 1, 2});
  spec.panel.dates = panel.dates;
  spec.panel.prior_means.assign(static_cast<std::size_t>(3 + kept), 0.0);
  return spec;
}

}  // namespace subvar::forecast
