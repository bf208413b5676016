#include "subvar/sim/approx_error.hpp"

#include <cmath>
#include <ostream>

#include "subvar/csv.hpp"
#include "subvar/engine/posterior.hpp"
#include "subvar/errors.hpp"
#include "subvar/parallel.hpp"

namespace subvar::sim {

namespace {

double xi_with_stats(const prior::PriorBuilder& builder, const data::RegressionData& data,
                     const engine::CrossProducts& stats, const Matrix& phi0_y, double theta,
                     double omega, int q) {
  if (builder.variant() != prior::PriorVariant::Minnesota)
    throw ArgumentError("approximation error is defined for the Minnesota variant");
  const auto fit = engine::posterior_moments(builder.build(omega, q, theta), stats);
  const auto minn = engine::posterior_moments(builder.build(0.0, q, theta), stats);
  const Matrix gap = data.X * fit.mean - omega * phi0_y - (1.0 - omega) * (data.X * minn.mean);
  return gap.squaredNorm() / static_cast<double>(data.M() * data.effective_T());
}

Matrix projected_y(const prior::PriorBuilder& builder, const data::RegressionData& data, int q) {
  const Matrix F = builder.subspace().factors(q);
  return F * (F.transpose() * data.Y);
}

}  // namespace

double approximation_error(const prior::PriorBuilder& builder, const data::RegressionData& data,
                           double theta, double omega, int q) {
  return xi_with_stats(builder, data, engine::CrossProducts::from(data),
                       projected_y(builder, data, q), theta, omega, q);
}

double approximation_error(const data::RegressionData& data, double theta, double omega, int q,
                           double kappa, const Vector& prior_mean) {
  const prior::PriorBuilder builder(data, prior::PriorVariant::Minnesota, {kappa, prior_mean}, q);
  return approximation_error(builder, data, theta, omega, q);
}

ApproxSurface approx_error_surface(const data::RegressionData& data,
                                   const std::vector<double>& thetas,
                                   const std::vector<double>& omegas, int q, double kappa,
                                   const Vector& prior_mean, unsigned threads) {
  const prior::PriorBuilder builder(data, prior::PriorVariant::Minnesota, {kappa, prior_mean}, q);
  const auto stats = engine::CrossProducts::from(data);
  const Matrix phi0_y = projected_y(builder, data, q);
  ApproxSurface s{thetas, omegas, q, Matrix(static_cast<Index>(thetas.size()),
                                            static_cast<Index>(omegas.size()))};
  const std::size_t n_omega = omegas.size();
  parallel_for(thetas.size() * n_omega, threads, [&](std::size_t i) {
    const std::size_t r = i / n_omega;
    const std::size_t c = i % n_omega;
    s.log_xi(static_cast<Index>(r), static_cast<Index>(c)) =
        std::log(xi_with_stats(builder, data, stats, phi0_y, thetas[r], omegas[c], q));
  });
  return s;
}

void write_surface_csv(std::ostream& out, const ApproxSurface& surface) {
  write_csv_row(out, {"theta", "omega", "logXi"});
  for (std::size_t r = 0; r < surface.theta.size(); ++r)
    for (std::size_t c = 0; c < surface.omega.size(); ++c)
      write_csv_row(out, {format_double(surface.theta[r]), format_double(surface.omega[c]),
                          format_double(surface.log_xi(static_cast<Index>(r),
                                                       static_cast<Index>(c)))});
}

}  // namespace subvar::sim
