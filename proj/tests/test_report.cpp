#include <gtest/gtest.h>

#include "dlstar/construct.hpp"
#include "dlstar/report.hpp"

using namespace dlstar;

TEST(Report, Sym4Series) {
  auto j = series_to_json("sym(4)", 4, derived_series(sym(4)));
  EXPECT_EQ(j["schema_version"], report_schema_version);
  EXPECT_EQ(j["order"], "24");
  EXPECT_EQ(j["derived_orders"], Json::parse(R"(["24","12","4","1"])"));
  EXPECT_EQ(j["dlstar"], 3);
  EXPECT_EQ(j["perfect_core_order"], "1");
  EXPECT_EQ(j["flags"]["solvable"], true);
  EXPECT_EQ(j["flags"]["perfect"], false);
}

TEST(Report, SeriesRoundTrip) {
  for (const Group& g : {sym(4), alt(5), wreath_imprimitive(sym(4), sym(4)), sym(1)}) {
    auto r = derived_series(g);
    auto j = series_to_json("g", g.degree(), r);
    EXPECT_EQ(series_from_json(Json::parse(j.dump())), r);
  }
}

TEST(Report, LargeOrdersAreDecimalStrings) {
  auto j = series_to_json("prodact", 3125, derived_series(wreath_product_action(alt(5), alt(5))));
  EXPECT_EQ(j["order"], "46656000000");
  EXPECT_TRUE(j["order"].is_string());
}

TEST(Report, Deterministic) {
  auto a = series_to_json("x", 9, derived_series(agl(2, 3))).dump();
  auto b = series_to_json("x", 9, derived_series(agl(2, 3))).dump();
  EXPECT_EQ(a, b);
}

TEST(Report, SchemaViolationsRejected) {
  auto j = series_to_json("s", 4, derived_series(sym(4)));
  auto bad = j;
  bad["schema_version"] = 99;
  EXPECT_THROW(series_from_json(bad), ParseError);
  bad = j;
  bad.erase("dlstar");
  EXPECT_THROW(series_from_json(bad), ParseError);
  bad = j;
  bad["order"] = "25";
  EXPECT_THROW(series_from_json(bad), ParseError);
  bad = j;
  bad["perfect_core_order"] = "abc";
  EXPECT_THROW(series_from_json(bad), ParseError);
}

TEST(Report, CertificateRoundTrip) {
  auto c = rootsys::parabolic_dlstar_bound({rootsys::Family::E, 8}, 2, {{4}}, 1);
  auto j = certificate_to_json(c);
  EXPECT_EQ(j["schema_version"], report_schema_version);
  EXPECT_EQ(j["value"], 3 + 4 + 1);
  EXPECT_EQ(j["parts"].size(), 2u);
  auto back = certificate_from_json(j);
  EXPECT_EQ(back.value, c.value);
  EXPECT_EQ(back.rule, c.rule);
  EXPECT_EQ(back.inputs, c.inputs);
  EXPECT_EQ(back.parts.size(), 2u);
  EXPECT_EQ(back.parts[0].rule, "unipotent_level_filtration");
}

TEST(Report, EmptySuite) {
  auto r = run_suite("no_such_scenario", 1);
  EXPECT_TRUE(r.results.empty());
  auto j = suite_to_json(r);
  EXPECT_EQ(j["schema_version"], report_schema_version);
  EXPECT_TRUE(j["scenarios"].empty());
  EXPECT_EQ(j["summary"]["fail"], 0);
}

TEST(Report, DlstarMaxBreakdown) {
  DlstarMaxReport r{"M11", 11, 7920, {{"a", 720, 1}, {"b", 48, 4}}, 4, 4, false};
  auto j = dlstar_max_to_json(r);
  EXPECT_EQ(j["dlstar_max"], 4);
  EXPECT_EQ(j["maximals"].size(), 2u);
  EXPECT_EQ(j["maximals"][1]["dlstar"], 4);
  EXPECT_EQ(j["order"], "7920");
  EXPECT_EQ(j["flags"]["lower_bound_only"], false);
}
