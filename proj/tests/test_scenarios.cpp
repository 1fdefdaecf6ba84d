#include <gtest/gtest.h>

#include <algorithm>

#include "critdg/io.hpp"
#include "critdg/scenarios.hpp"
#include "support.hpp"

namespace critdg {
namespace {

using testing::expect_error;

TEST(Scenarios, Contract) {
  const auto& names = scenario_names();
  EXPECT_EQ(names.size(), 32u);
  EXPECT_NE(std::find(names.begin(), names.end(), "thm5"), names.end());
  expect_error(ErrorCode::kUnknownScenario, [] { run_scenario("nosuch", 3); });
  expect_error(ErrorCode::kTooLarge, [] { run_scenario("thm5", 6); });
  expect_error(ErrorCode::kOutOfRange, [] { run_scenario("thm5", 1); });
}

TEST(Scenarios, AllMatchUpToFourVertices) {
  for (const std::string& name : scenario_names()) {
    const VerificationReport r = run_scenario(name, 4, {1});
    EXPECT_EQ(r.scenario, name);
    EXPECT_EQ(r.max_n, 4u);
    EXPECT_FALSE(r.has_mismatch()) << report_summary(r);
    if (name != "lemma11") {
      EXPECT_FALSE(r.cells.empty()) << name;
    }
  }
}

TEST(Scenarios, ErrataCellsOnlyForTheDerivationLine) {
  for (const std::string& name : scenario_names()) {
    const VerificationReport r = run_scenario(name, 3, {1});
    if (name == "cor51") {
      EXPECT_EQ(r.count(CellStatus::kErrataSuspected), 10u);
    } else {
      EXPECT_EQ(r.count(CellStatus::kErrataSuspected), 0u) << name;
    }
  }
}

TEST(Scenarios, RadiusExtremeGrid) {
  const VerificationReport r = run_scenario("thm5", 4, {1});
  ASSERT_EQ(r.cells.size(), 6u);  // (n,k) with 1 <= k < n <= 4
  EXPECT_EQ(r.cells.back().oracle, "6");
}

TEST(Scenarios, ReportsIgnoreWorkerCount) {
  for (const char* name : {"thm4", "cor43", "cor61", "lemma10", "thm8"}) {
    const std::string one = report_to_json(run_scenario(name, 4, {1}));
    EXPECT_EQ(report_to_json(run_scenario(name, 4, {2})), one) << name;
    EXPECT_EQ(report_to_json(run_scenario(name, 4, {8})), one) << name;
  }
}

}  // namespace
}  // namespace critdg
