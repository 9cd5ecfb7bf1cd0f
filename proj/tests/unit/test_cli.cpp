#include <gtest/gtest.h>

#include <clocale>
#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>
#include <string>

#include "vmg/real_analysis.hpp"
#include "vmg_cli/commands.hpp"
#include "vmg_cli/config.hpp"
#include "vmg_cli/table.hpp"
#include "vmg_cli/verify.hpp"

namespace {

using namespace vmg::cli;

std::string cell_string(const Cell& c) {
  if (const auto* s = std::get_if<std::string>(&c)) return *s;
  if (const auto* i = std::get_if<std::int64_t>(&c)) return std::to_string(*i);
  return format_double(std::get<double>(c));
}

TEST(FormatDouble, RoundTripsAndSpecials) {
  EXPECT_EQ(format_double(0.1), "0.10000000000000001");
  EXPECT_EQ(format_double(1.0), "1");
  EXPECT_EQ(format_double(std::numeric_limits<double>::infinity()), "inf");
  EXPECT_EQ(format_double(-std::numeric_limits<double>::infinity()), "-inf");
  EXPECT_EQ(format_double(std::nan("")), "nan");
  const double v = 1.688423423005195278;
  EXPECT_EQ(std::stod(format_double(v)), v);
}

TEST(FormatDouble, IgnoresLocale) {
  const char* prev = std::setlocale(LC_NUMERIC, "de_DE.UTF-8");
  const std::string s = format_double(0.5);
  if (prev) std::setlocale(LC_NUMERIC, "C");
  EXPECT_EQ(s, "0.5");
}

TEST(Tables, CsvAndJson) {
  Table t{{"a", "b"}, {{1.5, std::string("x")}, {std::int64_t{3}, -0.25}}};
  std::ostringstream csv;
  write_csv(csv, t);
  EXPECT_EQ(csv.str(), "a,b\n1.5,x\n3,-0.25\n");
  std::ostringstream js;
  write_json(js, t);
  const auto parsed = nlohmann::json::parse(js.str());
  ASSERT_EQ(parsed.size(), 2u);
  EXPECT_EQ(parsed[0]["b"], "x");
  EXPECT_EQ(parsed[1]["b"], -0.25);
}

TEST(MomentsTable, Rows) {
  const Table t = moments_table(6);
  ASSERT_EQ(t.header, (std::vector<std::string>{"n", "moment"}));
  ASSERT_EQ(t.rows.size(), 7u);
  EXPECT_EQ(cell_string(t.rows[2][1]), "1/1");
  EXPECT_EQ(cell_string(t.rows[3][1]), "0/1");
  EXPECT_EQ(cell_string(t.rows[4][1]), "2/1");
  EXPECT_EQ(cell_string(t.rows[6][1]), "14/3");
  const Table zero = moments_table(0);
  ASSERT_EQ(zero.rows.size(), 1u);
  EXPECT_EQ(cell_string(zero.rows[0][1]), "1/1");
  EXPECT_THROW(moments_table(-1), UsageError);
  EXPECT_THROW(moments_table(201), UsageError);
}

TEST(DensityGrid, DefaultIsSymmetricWithZeroInMiddle) {
  Config cfg;
  const auto grid = density_grid(cfg);
  ASSERT_EQ(grid.size(), 2001u);
  for (std::size_t i = 0; i < grid.size(); ++i) EXPECT_EQ(grid[i], -grid[grid.size() - 1 - i]);
  EXPECT_EQ(grid[1000], 0.0);
  const double edge = vmg::constants().edge;
  EXPECT_GT(grid.front(), -edge);
  EXPECT_LT(grid.back(), edge);

  const Table t = density_table(cfg);
  ASSERT_EQ(t.rows.size(), 2001u);
  EXPECT_EQ(cell_string(t.rows[1000][2]), "SPECIAL");
  const double mid = std::get<double>(t.rows[1000][1]);
  EXPECT_GT(mid, std::get<double>(t.rows[999][1]));
  EXPECT_GT(mid, std::get<double>(t.rows[1001][1]));
}

TEST(DensityGrid, LogSpacingAroundSqrt2) {
  Config cfg;
  cfg.spacing = GridSpacing::Log;
  cfg.grid_count = 200;
  const auto grid = density_grid(cfg);
  ASSERT_FALSE(grid.empty());
  double closest = INFINITY;
  for (double x : grid) closest = std::min(closest, std::abs(std::abs(x) - std::numbers::sqrt2));
  EXPECT_LT(closest, 1e-8);
}

TEST(ParametricTable, InnerIsMonotoneInsideBranch) {
  Config cfg;
  cfg.grid_count = 300;
  const Table t = parametric_table(cfg, {});
  ASSERT_EQ(t.rows.size(), 300u);
  double prev = INFINITY;
  for (const auto& row : t.rows) {
    const double x = std::get<double>(row[0]);
    EXPECT_GT(x, 0.0);
    EXPECT_LT(x, std::numbers::sqrt2);
    EXPECT_LT(x, prev);
    prev = x;
  }
}

TEST(CurveTable, LiesInUpperHalfPlane) {
  Config cfg;
  cfg.grid_count = 50;
  const Table t = curve_table(cfg, {});
  ASSERT_EQ(t.rows.size(), 50u);
  for (const auto& row : t.rows) EXPECT_GE(std::get<double>(row[2]), 0.0);
}

TEST(TransformTable, Examples) {
  std::istringstream in("# comment\n0,1\n\n1.4142135623730951,0\n1.688423423005195278,0\n");
  const Table t = transform_table(in);
  ASSERT_EQ(t.rows.size(), 3u);
  EXPECT_NEAR(std::get<double>(t.rows[0][5]), -0.62821803271102771027, 1e-13);
  EXPECT_NEAR(std::get<double>(t.rows[1][4]), 0.35355339059327376220, 1e-15);
  EXPECT_NEAR(std::get<double>(t.rows[1][5]), -0.61237243569579452455, 1e-15);
  EXPECT_TRUE(std::isinf(std::get<double>(t.rows[2][4])));
}

TEST(TransformTable, MalformedLineIsReported) {
  std::istringstream in("0,1\n1,abc\n");
  try {
    transform_table(in);
    FAIL() << "expected UsageError";
  } catch (const UsageError& e) {
    EXPECT_NE(std::string(e.what()).find("line 2"), std::string::npos);
  }
}

TEST(ConfigValidate, RejectsBadValues) {
  Config ok;
  EXPECT_NO_THROW(ok.validate());
  Config c = ok;
  c.range = std::pair{1.0, 1.0};
  EXPECT_THROW(c.validate(), UsageError);
  c = ok;
  c.quad_panels = 3;
  EXPECT_THROW(c.validate(), UsageError);
  c = ok;
  c.series_n = 201;
  EXPECT_THROW(c.validate(), UsageError);
  c = ok;
  c.tolerance_override = -1.0;
  EXPECT_THROW(c.validate(), UsageError);
  EXPECT_EQ(parse_range("-1:2"), (std::pair{-1.0, 2.0}));
  EXPECT_EQ(parse_range("-1,2"), (std::pair{-1.0, 2.0}));
  EXPECT_THROW(parse_range("1"), UsageError);
  EXPECT_THROW(parse_format("xml"), UsageError);
  EXPECT_THROW(parse_spacing("cubic"), UsageError);
}

TEST(Verify, OnlyPrefixAndOverride) {
  Config cfg;
  const VerifyReport r = run_verify(cfg, "moments");
  ASSERT_FALSE(r.checks.empty());
  EXPECT_TRUE(r.all_pass());
  for (const auto& c : r.checks) EXPECT_EQ(c.name.rfind("moments.", 0), 0u) << c.name;
  EXPECT_THROW(run_verify(cfg, "nope"), UsageError);

  cfg.tolerance_override = 1e-30;
  const VerifyReport strict = run_verify(cfg, "stieltjes");
  EXPECT_FALSE(strict.all_pass());
  const auto j = to_json(strict);
  EXPECT_EQ(j["ok"], false);
  EXPECT_EQ(j["total"], strict.checks.size());
}

TEST(Verify, GroupsCoverEveryCriterion) {
  EXPECT_EQ(check_groups().size(), 12u);
}

}  // namespace
