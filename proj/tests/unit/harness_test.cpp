#include <gtest/gtest.h>

#include "egrp/errors.hpp"
#include "egrp/harness.hpp"

using namespace egrp;

TEST(Catalog, SmallSnapshot)
{
  std::vector<std::string> const expected = {
    "C2", "C3", "C4", "C5", "C6", "C7", "C8", "C9", "C10",
    "D6", "D8", "D10", "S3", "Q8", "E2^2", "E2^3", "E3^2",
    "C2 x C4", "Hol(C2)", "Hol(C3)",
  };
  EXPECT_EQ(catalog_specs(10), expected);

  auto entries = catalog(10);
  ASSERT_EQ(entries.size(), expected.size());
  for (auto const &e : entries)
    EXPECT_LE(e.group.order(), 10u) << e.name;
}

TEST(Catalog, Filters)
{
  EXPECT_TRUE(catalog(1).empty());
  auto specs = catalog_specs(200);
  EXPECT_NE(std::find(specs.begin(), specs.end(), "sdp(5,4,2)"), specs.end());
  EXPECT_EQ(std::find(specs.begin(), specs.end(), "S6"), specs.end());
  EXPECT_NE(std::find(catalog_specs(1000).begin(), catalog_specs(1000).end(),
                      "S6"),
            catalog_specs(1000).end());
}

TEST(Catalog, OrdersMatchTable)
{
  for (auto const &[name, G] : catalog(200)) {
    auto specs = catalog_specs(G.order());
    EXPECT_NE(std::find(specs.begin(), specs.end(), name), specs.end())
      << name;
    if (G.order() > 1) {
      auto below = catalog_specs(G.order() - 1);
      EXPECT_EQ(std::find(below.begin(), below.end(), name), below.end())
        << name;
    }
  }
}

TEST(RunSuite, UnknownSuite)
{
  EXPECT_THROW(run_suite("nope"), UnknownSuite);
}

TEST(RunSuite, EmptyCatalog)
{
  SuiteOptions options;
  options.max_order = 1;
  auto report = run_suite("kk", options);
  EXPECT_TRUE(report.cases.empty());
  EXPECT_EQ(report.summary.pass + report.summary.fail + report.summary.skipped,
            0u);
}

TEST(RunSuite, SymContainsS4Case)
{
  auto report = run_suite("sym");
  auto it = std::find_if(report.cases.begin(), report.cases.end(),
                         [](auto const &c) { return c.case_id == "S4"; });
  ASSERT_NE(it, report.cases.end());
  EXPECT_EQ(it->status, CaseStatus::pass);
  EXPECT_EQ(report.cases.size(), 3u);
}

TEST(RunSuite, PmPasses)
{
  auto report = run_suite("pm");
  EXPECT_TRUE(report.ok());
  EXPECT_GT(report.summary.pass, 0u);
}

TEST(RunSuite, DeterministicJson)
{
  SuiteOptions options;
  options.max_order = 30;
  auto a = to_json(run_suite("nbk", options));
  auto b = to_json(run_suite("nbk", options));
  EXPECT_EQ(a["cases"], b["cases"]);
  EXPECT_EQ(a["suite"], "nbk");
  EXPECT_TRUE(a["summary"].contains("wall_time"));
}

TEST(RunSuite, SkippedCasesCarryReason)
{
  SuiteOptions options;
  options.limits.aut_cap = 10;
  options.max_order = 24;
  auto report = run_suite("ma", options);
  EXPECT_GT(report.summary.skipped, 0u);
  for (auto const &c : report.cases) {
    if (c.status == CaseStatus::skipped) {
      EXPECT_FALSE(c.skip_reason.empty()) << c.case_id;
    }
  }
  auto json = to_json(report);
  for (auto const &c : json["cases"]) {
    if (c["status"] == "skipped") {
      EXPECT_TRUE(c.contains("reason"));
    }
  }
}

TEST(RunSuite, AllPrefixesCaseIds)
{
  SuiteOptions options;
  options.max_order = 6;
  auto report = run_suite("all", options);
  EXPECT_TRUE(report.ok());
  for (auto const &c : report.cases)
    EXPECT_NE(c.case_id.find('/'), std::string::npos);
}

TEST(Report, TextTable)
{
  SuiteOptions options;
  options.max_order = 4;
  auto text = to_text(run_suite("kk", options));
  EXPECT_NE(text.find("CASE"), std::string::npos);
  EXPECT_NE(text.find("C4"), std::string::npos);
  EXPECT_NE(text.find("suite kk: 5 pass, 0 fail, 0 skipped"),
            std::string::npos);
}
