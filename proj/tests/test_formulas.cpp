#include <gtest/gtest.h>

#include <span>

#include "critdg/formulas.hpp"
#include "support.hpp"

namespace critdg {
namespace {

using testing::expect_error;

BigInt count(CountFormula f, std::int64_t n, std::int64_t k) { return count_closed_form(f, n, k); }
BigInt bound(BoundFormula f, std::int64_t n, std::int64_t k) { return bound_closed_form(f, n, k); }

TEST(Combinatorics, BinomialConventions) {
  EXPECT_EQ(binomial_ext(-1, -1), 1);
  EXPECT_EQ(binomial_ext(0, 0), 1);
  EXPECT_EQ(binomial_ext(0, 3), 0);
  EXPECT_EQ(binomial_ext(5, 2), 10);
  EXPECT_EQ(binomial_ext(2, 5), 0);
  EXPECT_EQ(binomial_ext(-2, 1), 0);
  EXPECT_EQ(binomial_ext(60, 30), BigInt("118264581564861424"));
}

TEST(Combinatorics, StirlingAndFactorial) {
  EXPECT_EQ(stirling2(4, 2), 7);
  EXPECT_EQ(stirling2(3, 3), 1);
  EXPECT_EQ(stirling2(0, 0), 1);
  EXPECT_EQ(stirling2(5, 0), 0);
  for (std::uint32_t n = 1; n < 12; ++n) EXPECT_EQ(stirling2(n, 1), 1);
  EXPECT_EQ(stirling2(10, 4), 34105);
  EXPECT_EQ(factorial(0), 1);
  EXPECT_EQ(factorial(25), BigInt("15511210043330985984000000"));
}

TEST(Combinatorics, Compositions) {
  int seen = 0;
  for_each_composition(5, 2, 2, [&](std::span<const std::int64_t> parts) {
    ASSERT_EQ(parts.size(), 2u);
    EXPECT_EQ(parts[0] + parts[1], 5);
    ++seen;
  });
  EXPECT_EQ(seen, 2);
  seen = 0;
  for_each_composition(0, 0, 2, [&](const auto&) { ++seen; });
  EXPECT_EQ(seen, 1);
}

TEST(CountFormulas, ReferenceValues) {
  EXPECT_EQ(count(CountFormula::kBeta, 4, 2), 3);
  EXPECT_EQ(count(CountFormula::kLabeledDCritical, 3, 2), 6);
  EXPECT_EQ(count(CountFormula::kQ, 5, 3), 8);
  EXPECT_EQ(count(CountFormula::kPiRm, 4, 2), 2);
  EXPECT_EQ(count(CountFormula::kChi, 3, 2), 8);
  EXPECT_EQ(count(CountFormula::kNuR, 5, 2), 2);
}

// Values established by exhaustive enumeration; the oracle tests recompute them.
TEST(CountFormulas, FrozenOracleValues) {
  EXPECT_EQ(count(CountFormula::kChi, 4, 2), 81);
  EXPECT_EQ(count(CountFormula::kChi, 5, 2), 1024);
  EXPECT_EQ(count(CountFormula::kChi, 5, 3), 120);
  EXPECT_EQ(count(CountFormula::kMuDm, 4, 3), 72);
  EXPECT_EQ(count(CountFormula::kMuDm, 5, 3), 600);
  EXPECT_EQ(count(CountFormula::kNuDm, 4, 3), 4);
  EXPECT_EQ(count(CountFormula::kNuDm, 5, 3), 10);
  EXPECT_EQ(count(CountFormula::kLabeledDCritical, 5, 3), 150);
}

TEST(CountFormulas, LabeledDCriticalIsOrderedSetPartitions) {
  for (std::int64_t n = 2; n <= 10; ++n) {
    for (std::int64_t k = 2; k <= n; ++k) {
      EXPECT_EQ(count(CountFormula::kLabeledDCritical, n, k),
                factorial(static_cast<std::uint32_t>(k)) *
                    stirling2(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k)));
    }
  }
}

TEST(CountFormulas, QuasiDiameterThreeCaseSum) {
  for (std::int64_t n = 4; n <= 14; ++n) {
    EXPECT_EQ(mu_dm3_by_cases(n), count(CountFormula::kMuDm, n, 3)) << n;
  }
}

TEST(CountFormulas, MaxRadiusIsoAndDerivationLine) {
  EXPECT_EQ(count(CountFormula::kMaxRadiusIso, 5, 3), 2);
  EXPECT_EQ(count(CountFormula::kMaxRadiusIso, 8, 4), 7);
  EXPECT_EQ(max_radius_iso_derivation_line(5, 3), 4);
  EXPECT_EQ(max_radius_iso_derivation_line(4, 3), count(CountFormula::kMaxRadiusIso, 4, 3));
}

TEST(BoundFormulas, ReferenceValues) {
  EXPECT_EQ(bound(BoundFormula::kG, 5, 3), 12);
  EXPECT_EQ(bound(BoundFormula::kF, 5, 2), 18);
  EXPECT_EQ(bound(BoundFormula::kInfDiameterArcs, 4, 2), 9);
  EXPECT_EQ(bound(BoundFormula::kF, 6, 3), 20);
  EXPECT_EQ(bound(BoundFormula::kG, 4, 3), 6);
  EXPECT_EQ(bound(BoundFormula::kG, 6, 3), 20);
  EXPECT_EQ(bound(BoundFormula::kShortQuasiDiameterArcs, 4, 3), 6);
}

TEST(BoundFormulas, DiameterBoundPeaksAtSquare) {
  for (std::int64_t n = 2; n <= 40; ++n) {
    BigInt best = 0;
    for (std::int64_t k = 2; k <= n; ++k) best = std::max(best, bound(BoundFormula::kInfDiameterArcs, n, k));
    EXPECT_EQ(best, BigInt((n - 1) * (n - 1))) << n;
  }
}

TEST(BoundFormulas, CompleteDigraphAtOne) {
  for (std::int64_t n = 2; n <= 20; ++n) {
    EXPECT_EQ(bound(BoundFormula::kG, n, 1), n * (n - 1));
    EXPECT_EQ(bound(BoundFormula::kF, n, 1), n * (n - 1));
  }
}

TEST(Formulas, DomainErrors) {
  expect_error(ErrorCode::kDomainError, [] { bound(BoundFormula::kShortQuasiDiameterArcs, 3, 2); });
  expect_error(ErrorCode::kDomainError, [] { bound(BoundFormula::kShortQuasiDiameterArcs, 6, 3); });
  expect_error(ErrorCode::kDomainError, [] { bound(BoundFormula::kG, 3, 3); });
  expect_error(ErrorCode::kDomainError, [] { count(CountFormula::kBeta, 3, 4); });
  expect_error(ErrorCode::kDomainError, [] { center_path_arc_bound(5, 3, 0, 4); });
}

TEST(Formulas, NamesRoundTrip) {
  for (CountFormula f : kAllCountFormulas) EXPECT_EQ(parse_count_formula(formula_name(f)), f);
  for (BoundFormula f : kAllBoundFormulas) EXPECT_EQ(parse_bound_formula(formula_name(f)), f);
  EXPECT_FALSE(parse_count_formula("g").has_value());
  EXPECT_FALSE(parse_bound_formula("nope").has_value());
}

TEST(CenterPathBound, PeakOnlyAtSingleVertexStart) {
  EXPECT_EQ(center_path_arc_bound(10, 4, 0, 1), 65);
  EXPECT_LT(center_path_arc_bound(10, 4, 1, 2), 65);
  for (std::int64_t k = 3; k <= 12; ++k) {
    for (std::int64_t n = k + 1; n <= 20; ++n) {
      const std::int64_t peak = center_path_arc_bound(n, k, 0, 1);
      EXPECT_EQ(BigInt(peak), bound(BoundFormula::kG, n, k));
      for (std::int64_t t = 1; t <= k - 1; ++t) {
        for (std::int64_t s = 0; s <= n - k - 1; ++s) {
          if (t == 1 && s == 0) continue;
          EXPECT_LT(center_path_arc_bound(n, k, s, t), peak);
        }
      }
    }
  }
}

}  // namespace
}  // namespace critdg
