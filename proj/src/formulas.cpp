#include "critdg/formulas.hpp"

#include <string>
#include <utility>

#include "critdg/error.hpp"

namespace critdg {
namespace {

using I64 = std::int64_t;

[[noreturn]] void domain_error(std::string_view formula, std::string_view constraint, I64 n,
                               I64 k) {
  throw Error(ErrorCode::kDomainError, std::string(formula) + "(" + std::to_string(n) + "," +
                                           std::to_string(k) + ") requires " +
                                           std::string(constraint));
}

BigInt pow2(I64 e) { return BigInt(1) << static_cast<unsigned>(e); }

BigInt big(I64 v) { return BigInt(v); }

I64 half_floor(I64 v) { return v / 2; }  // only called with v >= 0

// Sum over t of C(n-t-1, k-3) * floor(t/2), shared by the d_m- and
// r-critical iso counts for k > 2.
BigInt two_source_iso_sum(I64 n, I64 k) {
  BigInt total = 0;
  for (I64 t = 2; t <= n - k + 2; ++t) total += binomial_ext(n - t - 1, k - 3) * half_floor(t);
  return total;
}

// Labeled analogue: sum over t of C(n,t) (k-2)! S(n-t,k-2) (2^(t-1)-1).
BigInt two_source_labeled_sum(I64 n, I64 k) {
  BigInt total = 0;
  for (I64 t = 2; t <= n - k + 2; ++t) {
    total += binomial_ext(n, t) * factorial(static_cast<std::uint32_t>(k - 2)) *
             stirling2(static_cast<std::uint32_t>(n - t), static_cast<std::uint32_t>(k - 2)) *
             (pow2(t - 1) - 1);
  }
  return total;
}

// Outer structure shared by the r_m-critical counts: l blocks in the Hertz
// graph, s of which have two vertices, t digraph vertices inside those.
template <typename Term>
BigInt rm_block_sum(I64 n, I64 k, Term&& term) {
  BigInt total = 0;
  for (I64 l = 1; l <= k / 2; ++l) {
    for (I64 s = std::max<I64>(3 * l - k, 0); s <= l; ++s) {
      const BigInt blocks = binomial_ext(l, s) * binomial_ext(k - 2 * l - 1, l - s - 1);
      if (blocks == 0) continue;
      for (I64 t = 2 * s; t <= n - k + 2 * s; ++t) total += blocks * term(s, t);
    }
  }
  return total;
}

BigInt pi_rm(I64 n, I64 k) {
  return rm_block_sum(n, k, [&](I64 s, I64 t) {
    BigInt inner = 0;
    for_each_composition(t, s, 2, [&](std::span<const I64> parts) {
      BigInt prod = 1;
      for (I64 p : parts) prod *= half_floor(p);
      inner += prod;
    });
    return binomial_ext(n - t - 1, k - 2 * s - 1) * inner;
  });
}

BigInt xi_rm(I64 n, I64 k) {
  return rm_block_sum(n, k, [&](I64 s, I64 t) {
    BigInt inner = 0;
    for_each_composition(t, s, 2, [&](std::span<const I64> parts) {
      BigInt term = factorial(static_cast<std::uint32_t>(t));
      for (I64 p : parts) {
        term /= factorial(static_cast<std::uint32_t>(p));
      }
      for (I64 p : parts) term *= pow2(p - 1) - 1;
      inner += term;
    });
    return binomial_ext(n, n - t) * factorial(static_cast<std::uint32_t>(k - 2 * s)) *
           stirling2(static_cast<std::uint32_t>(n - t), static_cast<std::uint32_t>(k - 2 * s)) *
           inner;
  });
}

BigInt chi(I64 n, I64 k) {
  if (k == 1) return 1;
  if (k == 2) return boost::multiprecision::pow(big(n - 1), static_cast<unsigned>(n));
  const BigInt first = big(k - 1) * factorial(static_cast<std::uint32_t>(k)) * binomial_ext(n, k);
  const BigInt second = big(k - 2) * factorial(static_cast<std::uint32_t>(k - 1)) *
                        binomial_ext(n, k - 1) * (pow2(n - k + 1) - 2 * n + 2 * k - 4);
  return first + second;
}

BigInt nu_dm(I64 n, I64 k) {
  if (k <= 2) return 1;
  if (k >= 4) return big(2 * (n - k - 1) * (k - 2) + 2);
  BigInt total = big((n - 3) * (n + 4) / 2);
  for (I64 t = 1; t <= n - 4; ++t) total += half_floor(t) * (n - t - 1);
  total += half_floor(n - 3);
  return total;
}

BigInt mu_dm(I64 n, I64 k) {
  if (k == 1) return 1;
  if (k == 2) return big(n * (n - 1) / 2);
  if (k == 3) return big(n * (n - 1)) * (pow2(2 * n - 5) - 2);
  return 2 * chi(n, k);
}

void require_k_range(std::string_view name, I64 n, I64 k, I64 k_min) {
  if (k < k_min) domain_error(name, "k >= " + std::to_string(k_min), n, k);
  if (n < k) domain_error(name, "n >= k", n, k);
}

void require_n_above_k(std::string_view name, I64 n, I64 k, I64 k_min) {
  if (k < k_min) domain_error(name, "k >= " + std::to_string(k_min), n, k);
  if (n <= k) domain_error(name, "n > k", n, k);
}

}  // namespace

std::string_view formula_name(CountFormula f) {
  switch (f) {
    case CountFormula::kBeta: return "beta";
    case CountFormula::kLabeledDCritical: return "labeled_d_critical";
    case CountFormula::kQ: return "q";
    case CountFormula::kQStar: return "q_star";
    case CountFormula::kNuR: return "nu_r";
    case CountFormula::kNuRStar: return "nu_r_star";
    case CountFormula::kPiRm: return "pi_rm";
    case CountFormula::kXiRm: return "xi_rm";
    case CountFormula::kMaxRadiusIso: return "max_radius_iso";
    case CountFormula::kChi: return "chi";
    case CountFormula::kNuDm: return "nu_dm";
    case CountFormula::kMuDm: return "mu_dm";
  }
  return "";
}

std::string_view formula_name(BoundFormula f) {
  switch (f) {
    case BoundFormula::kInfDiameterArcs: return "cor12";
    case BoundFormula::kInfQuasiDiameterArcs: return "cor21";
    case BoundFormula::kInfQuasiDiameterArcsAnyK: return "cor22";
    case BoundFormula::kLambda: return "lambda";
    case BoundFormula::kInfRadiusArcsAnyK: return "cor33";
    case BoundFormula::kInfQuasiRadiusArcs: return "cor41";
    case BoundFormula::kG: return "g";
    case BoundFormula::kF: return "f";
    case BoundFormula::kShortQuasiDiameterArcs: return "lemma11";
  }
  return "";
}

std::optional<CountFormula> parse_count_formula(std::string_view name) {
  for (CountFormula f : kAllCountFormulas) {
    if (formula_name(f) == name) return f;
  }
  return std::nullopt;
}

std::optional<BoundFormula> parse_bound_formula(std::string_view name) {
  for (BoundFormula f : kAllBoundFormulas) {
    if (formula_name(f) == name) return f;
  }
  return std::nullopt;
}

BigInt binomial_ext(I64 m, I64 j) {
  if (m == -1 && j == -1) return 1;
  if (m < 0 || j < 0 || j > m) return 0;
  j = std::min(j, m - j);
  BigInt result = 1;
  for (I64 i = 1; i <= j; ++i) {
    result *= m - j + i;
    result /= i;
  }
  return result;
}

BigInt stirling2(std::uint32_t u, std::uint32_t v) {
  if (v > u) return 0;
  // Row-by-row recurrence S(i,j) = j S(i-1,j) + S(i-1,j-1).
  std::vector<BigInt> row(v + 1, 0);
  row[0] = 1;
  for (std::uint32_t i = 1; i <= u; ++i) {
    for (std::uint32_t j = std::min(i, v); j >= 1; --j) row[j] = j * row[j] + row[j - 1];
    row[0] = 0;
  }
  return row[v];
}

BigInt factorial(std::uint32_t m) {
  BigInt result = 1;
  for (std::uint32_t i = 2; i <= m; ++i) result *= i;
  return result;
}

BigInt count_closed_form(CountFormula f, I64 n, I64 k) {
  const std::string_view name = formula_name(f);
  switch (f) {
    case CountFormula::kBeta:
      require_k_range(name, n, k, 2);
      return binomial_ext(n - 1, k - 1);
    case CountFormula::kLabeledDCritical:
      require_k_range(name, n, k, 2);
      return factorial(static_cast<std::uint32_t>(k)) *
             stirling2(static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(k));
    case CountFormula::kQ:
      require_k_range(name, n, k, 2);
      if (k == 2) return half_floor(n);
      return big(k - 1) * two_source_iso_sum(n, k);
    case CountFormula::kQStar:
      require_k_range(name, n, k, 2);
      if (k == 2) return pow2(n - 1) - 1;
      return big(k - 1) * two_source_labeled_sum(n, k);
    case CountFormula::kNuR:
      require_k_range(name, n, k, 2);
      if (k == 2) return half_floor(n);
      return two_source_iso_sum(n, k);
    case CountFormula::kNuRStar:
      require_k_range(name, n, k, 2);
      if (k == 2) return pow2(n - 1) - 1;
      return two_source_labeled_sum(n, k);
    case CountFormula::kPiRm:
      require_k_range(name, n, k, 2);
      return pi_rm(n, k);
    case CountFormula::kXiRm:
      require_k_range(name, n, k, 2);
      return xi_rm(n, k);
    case CountFormula::kMaxRadiusIso:
      require_n_above_k(name, n, k, 3);
      return big((n - k - 1) * (k - 2) + 1);
    case CountFormula::kChi:
      require_n_above_k(name, n, k, 1);
      return chi(n, k);
    case CountFormula::kNuDm:
      require_n_above_k(name, n, k, 1);
      return nu_dm(n, k);
    case CountFormula::kMuDm:
      require_n_above_k(name, n, k, 1);
      return mu_dm(n, k);
  }
  throw Error(ErrorCode::kDomainError, "unknown count formula");
}

BigInt bound_closed_form(BoundFormula f, I64 n, I64 k) {
  const std::string_view name = formula_name(f);
  switch (f) {
    case BoundFormula::kInfDiameterArcs:
      require_k_range(name, n, k, 2);
      return big(n * (n - k) + (k * k - k) / 2);
    case BoundFormula::kInfQuasiDiameterArcs:
      require_k_range(name, n, k, 3);
      return big(n * (n - k) + (k * k - k) / 2 - 1);
    case BoundFormula::kInfQuasiDiameterArcsAnyK:
      if (n < 2) domain_error(name, "n >= 2", n, k);
      return big(n * n - 3 * n + 2);
    case BoundFormula::kLambda:
      require_k_range(name, n, k, 2);
      if (k == 2) return big((n - 1) * (n - 2));
      return big(n * (n - k) + (k * k - k - 2) / 2);
    case BoundFormula::kInfRadiusArcsAnyK:
      if (n < 2) domain_error(name, "n >= 2", n, k);
      return big((n - 1) * (n - 2));
    case BoundFormula::kInfQuasiRadiusArcs:
      require_k_range(name, n, k, 2);
      return big(n * (n - k - 1) + k * k / 2);
    case BoundFormula::kG:
      require_n_above_k(name, n, k, 1);
      if (k == 1) return big(n * (n - 1));
      if (k == 2) return big(n * (n - 2));
      return big(n * (n - k) + (k * k - k - 2) / 2);
    case BoundFormula::kF:
      require_n_above_k(name, n, k, 1);
      if (k == 1) return big(n * (n - 1));
      if (k == 2) return big(n * (n - 1) - 2);
      return big(n * (n - k) + (k * k - k - 2) / 2);
    case BoundFormula::kShortQuasiDiameterArcs:
      if (k < 3) domain_error(name, "k >= 3", n, k);
      if (n != k + 1) domain_error(name, "n = k + 1", n, k);
      return big((k * k + k) / 2);
  }
  throw Error(ErrorCode::kDomainError, "unknown bound formula");
}

I64 center_path_arc_bound(I64 n, I64 k, I64 s, I64 t) {
  if (k < 3) domain_error("center_path_arc_bound", "k >= 3", n, k);
  if (t < 1 || t > k) domain_error("center_path_arc_bound", "1 <= t <= k", n, k);
  if (s < 0 || s > n - k - 1) domain_error("center_path_arc_bound", "0 <= s <= n-k-1", n, k);
  const I64 base = n * (n - k) + (k * k - k - 2) / 2;
  const I64 correction = -n * (s + t + 2) + s * s + t * s + t * t + 3 * k + 2 +
                         (n - k - s - 1) * std::max<I64>(t, 3) + s * std::max<I64>(k, t + 2);
  return base + correction;
}

BigInt max_radius_iso_derivation_line(I64 n, I64 k) {
  require_n_above_k("max_radius_iso_derivation_line", n, k, 3);
  return big((n - k - 1) * (n - 2) + 1);
}

BigInt mu_dm3_by_cases(I64 n) {
  require_n_above_k("mu_dm3_by_cases", n, 3, 3);
  const BigInt pairs = big(n * (n - 1));
  BigInt total = pairs * (pow2(n - 1) - 4);  // not biconnected
  total += 2 * pairs * (pow2(n - 3) - 1);    // (|X1|+|X2|)(|X3|+|X4|) = 0
  for (I64 t = 2; t <= n - 3; ++t) total += 2 * pairs * binomial_ext(n - 2, t) * (pow2(t) - 2);
  for (I64 t = 2; t <= n - 4; ++t) {
    total += pairs * binomial_ext(n - 2, t) * (pow2(t - 1) - 1) * (pow2(n - t - 2) - 2);
  }
  return total;
}

}  // namespace critdg
