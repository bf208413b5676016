#include <gtest/gtest.h>

#include <cmath>
#include <sstream>

#include "fixtures.hpp"
#include "subvar/data/io.hpp"
#include "subvar/data/panel.hpp"
#include "subvar/data/regression.hpp"
#include "subvar/data/transform.hpp"
#include "subvar/errors.hpp"
#include "subvar/sim/synthetic_macro.hpp"

using namespace subvar;
using namespace subvar::data;

namespace {

std::vector<ManifestEntry> manifest() { return read_manifest(SUBVAR_MANIFEST_PATH); }

}  // namespace

TEST(Transform, LogDifferenceOfGeometricSequence) {
  const std::vector<double> x{1.0, std::exp(1.0), std::exp(2.0)};
  const auto out = apply_transform(x, 5);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_NEAR(out[0], 1.0, 1e-14);
  EXPECT_NEAR(out[1], 1.0, 1e-14);
}

TEST(Transform, DifferencesOfConstant) {
  const std::vector<double> x{5, 5, 5};
  EXPECT_EQ(apply_transform(x, 2), (std::vector<double>{0.0, 0.0}));
}

TEST(Transform, GrowthRateDifferenceDropsTwo) {
  const std::vector<double> x{100, 110, 121};
  const auto out = apply_transform(x, 7);
  ASSERT_EQ(out.size(), 1u);
  EXPECT_NEAR(out[0], 0.0, 1e-15);
}

TEST(Transform, TrimCounts) {
  const std::vector<double> x{1, 2, 4, 8, 16};
  for (int code = 1; code <= 7; ++code) {
    const auto c = to_transform_code(code);
    EXPECT_EQ(apply_transform(x, c).size(), x.size() - leading_observations_lost(c));
  }
  EXPECT_THROW(to_transform_code(8), ConfigError);
}

TEST(Transform, LogOfNonPositiveNamesSeries) {
  const std::vector<double> x{1.0, -1.0, 2.0};
  try {
    apply_transform(x, 4, "FOO");
    FAIL() << "expected DomainError";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("FOO"), std::string::npos);
  }
  EXPECT_THROW(apply_transform(std::vector<double>{1.0, 2.0}, 1), DataError);
}

TEST(Manifest, SubsetSizes) {
  const auto m = manifest();
  ASSERT_EQ(m.size(), 166u);
  int counts[4] = {0, 0, 0, 0};
  for (const auto& e : m)
    for (int s = 0; s < 4; ++s) counts[s] += e.sizes[static_cast<std::size_t>(s)];
  EXPECT_EQ(counts[0], 12);
  EXPECT_EQ(counts[1], 22);
  EXPECT_EQ(counts[2], 78);
  EXPECT_EQ(counts[3], 166);
}

TEST(Panel, BuildsFromManifestSubsets) {
  const auto m = manifest();
  const auto table = sim::synthetic_macro(m, SizeClass::XL, 80, 3);
  const auto raw = join_manifest(table, m);
  const FocusCodes focus{"GDPC1", "CPIAUCSL", "FEDFUNDS"};
  const auto xl = build_panel(raw, SizeClass::XL, focus, table.dates);
  EXPECT_EQ(xl.M(), 166);
  const auto s = build_panel(raw, SizeClass::S, focus, table.dates);
  EXPECT_EQ(s.M(), 12);
  EXPECT_EQ(s.names[s.focus[0]], "GDPC1");
  EXPECT_EQ(s.dates.size(), static_cast<std::size_t>(s.T()));
  // second differences exist in the S subset, so two rows are lost
  EXPECT_EQ(s.T(), 78);
  EXPECT_THROW(build_panel(raw, SizeClass::S, {"GDPC1", "CPIAUCSL", "PCDGx"}, table.dates),
               ConfigError);
}

TEST(Io, DataCsvRoundTrip) {
  const auto m = manifest();
  const auto table = sim::synthetic_macro(m, SizeClass::S, 30, 9);
  std::stringstream ss;
  ss << "# source=synthetic\n";
  write_data_csv(ss, table.codes, table.tcodes, table.dates, table.values);
  const auto back = read_data_csv(ss);
  EXPECT_EQ(back.codes, table.codes);
  EXPECT_EQ(back.tcodes, table.tcodes);
  EXPECT_EQ(back.dates, table.dates);
  EXPECT_EQ(back.values, table.values);
}

TEST(Io, TcodeMismatchIsConfigError) {
  auto m = manifest();
  auto table = sim::synthetic_macro(m, SizeClass::S, 30, 9);
  table.tcodes[0] = table.tcodes[0] == 1 ? 2 : 1;
  EXPECT_THROW(join_manifest(table, m), ConfigError);
}

TEST(Regression, LagMatrixShape) {
  const Matrix y = fixture::noise(5, 2, 1);
  const auto rd = build_lag_matrix(y, 2);
  EXPECT_EQ(rd.Y.rows(), 3);
  EXPECT_EQ(rd.Y.cols(), 2);
  EXPECT_EQ(rd.X.rows(), 3);
  EXPECT_EQ(rd.X.cols(), 5);
  EXPECT_EQ(rd.X(0, 0), y(1, 0));
  EXPECT_EQ(rd.X(0, 3), y(0, 1));
  EXPECT_EQ(rd.X(0, 4), 1.0);
  EXPECT_EQ(reconstruct_series(rd), y);
  EXPECT_THROW(build_lag_matrix(fixture::noise(2, 2, 1), 2), DataError);
}

TEST(Regression, RecoversNoiselessAr1) {
  Matrix y(30, 1);
  y(0, 0) = 1.0;
  for (Index t = 1; t < 30; ++t) y(t, 0) = 0.5 * y(t - 1, 0);
  const auto rd = build_lag_matrix(y, 1);
  const Matrix b = rd.X.colPivHouseholderQr().solve(rd.Y);
  EXPECT_NEAR(b(0, 0), 0.5, 1e-10);
  EXPECT_THROW(ar_residual_std(y.col(0), 1), DegenerateSeriesError);
}

TEST(Regression, ForecastStateOrdersLags) {
  Matrix y(4, 2);
  y << 1, 2, 3, 4, 5, 6, 7, 8;
  const Vector x = forecast_state(y, 2);
  ASSERT_EQ(x.size(), 5);
  EXPECT_EQ(x[0], 7);
  EXPECT_EQ(x[1], 8);
  EXPECT_EQ(x[2], 5);
  EXPECT_EQ(x[3], 6);
  EXPECT_EQ(x[4], 1);
}

TEST(Regression, ArResidualScaleOfWhiteNoise) {
  EXPECT_NEAR(ar_residual_std(fixture::noise(10000, 1, 5).col(0), 2), 1.0, 0.05);
  EXPECT_NEAR(ar_residual_std(fixture::noise(10000, 1, 6, 2.0).col(0), 2), 2.0, 0.1);
}
