#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace critdg {

using BigInt = boost::multiprecision::cpp_int;

/// Closed-form counts of critical and maximal digraphs.
///
///   kBeta              nonisomorphic d-critical, d = INF, k bicomponents
///   kLabeledDCritical  the same on n numbered vertices, k! S(n,k)
///   kQ, kQStar         d_m-critical with d_m = INF (unlabeled / labeled)
///   kNuR, kNuRStar     r-critical with r = INF (unlabeled / labeled)
///   kPiRm, kXiRm       r_m-critical with r_m = INF (unlabeled / labeled)
///   kMaxRadiusIso      nonisomorphic maximal digraphs of radius k >= 3
///   kChi               labeled maximal digraphs of radius k
///   kNuDm, kMuDm       maximal digraphs of quasi-diameter k (unlabeled / labeled)
enum class CountFormula {
  kBeta,
  kLabeledDCritical,
  kQ,
  kQStar,
  kNuR,
  kNuRStar,
  kPiRm,
  kXiRm,
  kMaxRadiusIso,
  kChi,
  kNuDm,
  kMuDm,
};

/// Upper bounds on arc counts.
///
///   kInfDiameterArcs           infinite diameter, k bicomponents: n(n-k) + (k^2-k)/2
///   kInfQuasiDiameterArcs      infinite quasi-diameter, k >= 3 bicomponents: kInfDiameterArcs - 1
///   kInfQuasiDiameterArcsAnyK  infinite quasi-diameter, any k: n^2 - 3n + 2
///   kLambda                    infinite radius, k bicomponents
///   kInfRadiusArcsAnyK         infinite radius, any k: (n-1)(n-2)
///   kInfQuasiRadiusArcs        infinite quasi-radius, k bicomponents: n(n-k-1) + floor(k^2/2)
///   kG                         radius k (attained)
///   kF                         quasi-diameter k (attained)
///   kShortQuasiDiameterArcs    (k+1)-vertex digraphs of quasi-diameter k: (k^2+k)/2; needs n = k+1
enum class BoundFormula {
  kInfDiameterArcs,
  kInfQuasiDiameterArcs,
  kInfQuasiDiameterArcsAnyK,
  kLambda,
  kInfRadiusArcsAnyK,
  kInfQuasiRadiusArcs,
  kG,
  kF,
  kShortQuasiDiameterArcs,
};

inline constexpr CountFormula kAllCountFormulas[] = {
    CountFormula::kBeta,  CountFormula::kLabeledDCritical, CountFormula::kQ,
    CountFormula::kQStar, CountFormula::kNuR,              CountFormula::kNuRStar,
    CountFormula::kPiRm,  CountFormula::kXiRm,             CountFormula::kMaxRadiusIso,
    CountFormula::kChi,   CountFormula::kNuDm,             CountFormula::kMuDm,
};

inline constexpr BoundFormula kAllBoundFormulas[] = {
    BoundFormula::kInfDiameterArcs, BoundFormula::kInfQuasiDiameterArcs, BoundFormula::kInfQuasiDiameterArcsAnyK,
    BoundFormula::kLambda, BoundFormula::kInfRadiusArcsAnyK, BoundFormula::kInfQuasiRadiusArcs,
    BoundFormula::kG,     BoundFormula::kF,     BoundFormula::kShortQuasiDiameterArcs,
};

std::string_view formula_name(CountFormula f);
std::string_view formula_name(BoundFormula f);
std::optional<CountFormula> parse_count_formula(std::string_view name);
std::optional<BoundFormula> parse_bound_formula(std::string_view name);

/// Binomial coefficient extended to the conventions used by the r_m counts:
/// C(0,0) = 1, C(0,j) = 0 for j != 0, C(-1,-1) = 1, any other negative
/// argument gives 0, and C(m,j) = 0 for j > m >= 0.
BigInt binomial_ext(std::int64_t m, std::int64_t j);

/// Stirling numbers of the second kind, S(0,0) = 1.
BigInt stirling2(std::uint32_t u, std::uint32_t v);

BigInt factorial(std::uint32_t m);

/// Throws DomainError naming the violated constraint.
BigInt count_closed_form(CountFormula f, std::int64_t n, std::int64_t k);
BigInt bound_closed_form(BoundFormula f, std::int64_t n, std::int64_t k);

/// Arc bound for a radius-k digraph whose center-path starts with t vertices
/// inside the center's bicomponent and s further vertices of that bicomponent
/// lie off the path. Domain: k >= 3, 1 <= t <= k, 0 <= s <= n-k-1.
std::int64_t center_path_arc_bound(std::int64_t n, std::int64_t k, std::int64_t s,
                                   std::int64_t t);

/// The expression printed on the last line of the iso-count derivation for
/// maximal radius digraphs, (n-k-1)(n-2)+1, kept for errata reporting.
BigInt max_radius_iso_derivation_line(std::int64_t n, std::int64_t k);

/// Labeled maximal quasi-diameter-3 count assembled from its four structural
/// cases; should agree with count_closed_form(kMuDm, n, 3).
BigInt mu_dm3_by_cases(std::int64_t n);

/// Ordered compositions of total into parts, each part >= min_part. Calls
/// visit with the parts; zero parts compose only total = 0.
template <typename Visit>
void for_each_composition(std::int64_t total, std::int64_t parts, std::int64_t min_part,
                          Visit&& visit);

namespace detail {

template <typename Visit>
void compose(std::vector<std::int64_t>& acc, std::int64_t remaining, std::int64_t parts,
             std::int64_t min_part, Visit& visit) {
  if (parts == 0) {
    if (remaining == 0) visit(std::span<const std::int64_t>(acc));
    return;
  }
  for (std::int64_t p = min_part; p <= remaining - min_part * (parts - 1); ++p) {
    acc.push_back(p);
    compose(acc, remaining - p, parts - 1, min_part, visit);
    acc.pop_back();
  }
}

}  // namespace detail

template <typename Visit>
void for_each_composition(std::int64_t total, std::int64_t parts, std::int64_t min_part,
                          Visit&& visit) {
  std::vector<std::int64_t> acc;
  detail::compose(acc, total, parts, min_part, visit);
}

}  // namespace critdg
