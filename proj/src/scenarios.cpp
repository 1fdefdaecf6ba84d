#include "critdg/scenarios.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <set>

#include "critdg/condensation.hpp"
#include "critdg/error.hpp"
#include "critdg/families.hpp"
#include "critdg/formulas.hpp"
#include "critdg/metrics.hpp"

namespace critdg {

namespace {

using Params = std::vector<std::pair<std::string, std::int64_t>>;

constexpr std::size_t kConstructionMaxN = 8;
constexpr std::int64_t kCaseSumMaxN = 12;

struct Context {
  std::size_t max_n = 0;
  ScanOptions opts;
  VerificationReport* report = nullptr;

  // Errata candidates are printed formulas already suspected of a typo; a
  // disagreement there is recorded as such rather than as a mismatch.
  void cell(Params params, const std::string& oracle, const std::string& formula,
            bool equal, bool errata_candidate = false, std::string note = {}) const {
    ReportCell c;
    c.params = std::move(params);
    c.oracle = oracle;
    c.formula = formula;
    c.status = equal ? CellStatus::kMatch
                     : (errata_candidate ? CellStatus::kErrataSuspected : CellStatus::kMismatch);
    c.note = std::move(note);
    report->cells.push_back(std::move(c));
  }

  void compare(Params params, const BigInt& oracle, const BigInt& formula,
               bool errata_candidate = false, std::string note = {}) const {
    cell(std::move(params), oracle.str(), formula.str(), oracle == formula, errata_candidate,
         std::move(note));
  }

  void exceptions(Params params, std::uint64_t count, std::string note) const {
    cell(std::move(params), std::to_string(count), "0", count == 0, false, std::move(note));
  }
};

std::string atom_k(const char* name, std::size_t k) {
  return std::string(name) + "=" + std::to_string(k);
}

std::vector<std::vector<std::size_t>> compositions(std::size_t total, std::size_t parts,
                                                   std::size_t min_part) {
  std::vector<std::vector<std::size_t>> out;
  for_each_composition(static_cast<std::int64_t>(total), static_cast<std::int64_t>(parts),
                       static_cast<std::int64_t>(min_part), [&](std::span<const std::int64_t> p) {
                         out.emplace_back(p.begin(), p.end());
                       });
  return out;
}

// Every composition of k into parts >= 2, any number of parts.
std::vector<std::vector<std::size_t>> block_layouts(std::size_t k) {
  std::vector<std::vector<std::size_t>> out;
  for (std::size_t s = 1; 2 * s <= k; ++s) {
    for (auto& c : compositions(k, s, 2)) out.push_back(std::move(c));
  }
  return out;
}

Digraph complete_symmetric(std::size_t n) {
  std::vector<Arc> arcs;
  for (Vertex u = 1; u <= n; ++u) {
    for (Vertex v = 1; v <= n; ++v) {
      if (u != v) arcs.push_back({u, v});
    }
  }
  return Digraph::from_arc_list(n, arcs);
}

std::set<std::string> canonical_set(std::size_t n, const std::vector<std::uint64_t>& masks) {
  std::set<std::string> out;
  for (std::uint64_t m : masks) out.insert(canonical_form(Digraph::from_arc_mask(n, m)));
  return out;
}

// Critical digraphs with an infinite invariant: hypothesis side from the
// enumeration, converse side from blow-ups of the named Hertz graphs.
void characterize_critical(
    const Context& ctx, Invariant inv, const char* metric_atom, std::size_t min_k,
    const std::function<bool(const HertzClassification&, std::size_t k)>& accept,
    const std::function<std::vector<Digraph>(std::size_t k)>& family) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    for (std::size_t k = min_k; k <= n; ++k) {
      Predicate pred = parse_predicate(std::string(metric_atom) + "=INF");
      pred.with(Atom::critical(inv)).with(Atom::bicomponents(k));
      const auto masks = satisfying_masks(n, pred, ctx.opts);
      std::uint64_t bad = 0;
      for (std::uint64_t m : masks) {
        const Digraph hertz = condensation(Digraph::from_arc_mask(n, m)).hertz;
        if (!accept(recognize_hertz_family(hertz), k)) ++bad;
      }
      std::uint64_t blowups = 0;
      for (const Digraph& h : family(k)) {
        for (const auto& sizes : compositions(n, k, 1)) {
          const Digraph g = blow_up(h, sizes);
          ++blowups;
          const bool ok = invariant_value(metric_invariants(g), inv).is_infinite() &&
                          bicomponent_count(g) == k && is_critical(g, inv);
          if (!ok) ++bad;
        }
      }
      ctx.exceptions({{"n", n}, {"k", k}}, bad,
                     std::to_string(masks.size()) + " enumerated, " + std::to_string(blowups) +
                         " blow-ups checked");
    }
  }
}

std::vector<Digraph> gamma_ki_family(std::size_t k, std::size_t only_i = 0) {
  std::vector<Digraph> out;
  for (std::size_t i = 1; i + 1 <= k; ++i) {
    if (only_i == 0 || i == only_i) out.push_back(build_family(GammaKI{k, i}));
  }
  return out;
}

// Single-arc completion property: g violates `bad` and every one-arc
// extension satisfies `good` (both read from the feature table).
using FeatureTest = std::function<bool(const MaskFeatures&)>;

bool completion_property(std::size_t n, std::uint64_t mask, const std::vector<MaskFeatures>& t,
                         const FeatureTest& holds) {
  if (holds(t[mask])) return false;
  const std::size_t pairs = n * (n - 1);
  for (std::size_t b = 0; b < pairs; ++b) {
    const std::uint64_t bit = std::uint64_t{1} << b;
    if (!(mask & bit) && !holds(t[mask | bit])) return false;
  }
  return true;
}

bool completion_property(const Digraph& g, const std::function<bool(const Digraph&)>& holds) {
  if (holds(g)) return false;
  for (const Arc& a : missing_arcs(g)) {
    if (!holds(g.with_arc(a))) return false;
  }
  return true;
}

void characterize_completion(
    const Context& ctx, const FeatureTest& table_holds,
    const std::function<bool(const Digraph&)>& graph_holds,
    const std::function<bool(const HertzClassification&)>& accept,
    const std::function<std::vector<Digraph>(std::size_t n)>& family) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    const auto masks = filter_masks(
        n,
        [&](std::uint64_t m, const std::vector<MaskFeatures>& t) {
          return completion_property(n, m, t, table_holds);
        },
        ctx.opts);
    std::uint64_t bad = 0;
    for (std::uint64_t m : masks) {
      if (!accept(recognize_hertz_family(condensation(Digraph::from_arc_mask(n, m)).hertz))) ++bad;
    }
    const auto witnesses = family(n);
    for (const Digraph& g : witnesses) {
      if (!completion_property(g, graph_holds)) ++bad;
    }
    ctx.exceptions({{"n", n}}, bad,
                   std::to_string(masks.size()) + " enumerated, " +
                       std::to_string(witnesses.size()) + " blow-ups checked");
  }
}

// Blow-ups of h over every composition of n.
std::vector<Digraph> all_blow_ups(const Digraph& h, std::size_t n) {
  std::vector<Digraph> out;
  if (h.n() > n) return out;
  for (const auto& sizes : compositions(n, h.n(), 1)) out.push_back(blow_up(h, sizes));
  return out;
}

void count_scenario(const Context& ctx, CountFormula f, const char* metric_atom, Invariant inv,
                    bool labeled) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    for (std::size_t k = 2; k <= n; ++k) {
      Predicate pred = parse_predicate(std::string(metric_atom) + "=INF");
      pred.with(Atom::critical(inv)).with(Atom::bicomponents(k));
      const BigInt oracle = labeled ? BigInt(count_labeled(n, pred, ctx.opts))
                                    : BigInt(iso_class_count(n, pred, ctx.opts));
      ctx.compare({{"n", n}, {"k", k}}, oracle,
                  count_closed_form(f, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
    }
  }
}

// Max arcs among n-vertex digraphs with `atom` = k, against a bound.
void extremal_scenario(const Context& ctx, BoundFormula f, const char* atom, std::size_t min_k,
                       bool infinite_with_bicomponents) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    for (std::size_t k = min_k; k <= n; ++k) {
      const std::string text = infinite_with_bicomponents
                                   ? std::string(atom) + "=INF," + atom_k("bicomponents", k)
                                   : atom_k(atom, k);
      if (!infinite_with_bicomponents && k >= n) continue;
      const auto n64 = static_cast<std::int64_t>(n);
      const auto k64 = static_cast<std::int64_t>(k);
      const ExtremalResult best = max_arcs_where(n, parse_predicate(text), ctx.opts);
      ctx.compare({{"n", n}, {"k", k}}, BigInt(best.arcs), bound_closed_form(f, n64, k64), false,
                  "witness " + canonical_form(best.witness));
    }
  }
}

void extremal_any_k(const Context& ctx, BoundFormula f, const char* atom) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    const ExtremalResult best = max_arcs_where(n, parse_predicate(std::string(atom) + "=INF"), ctx.opts);
    ctx.compare({{"n", n}}, BigInt(best.arcs), bound_closed_form(f, static_cast<std::int64_t>(n), 0),
                false, "witness " + canonical_form(best.witness));
  }
}

std::uint64_t max_arcs_value(std::size_t n, Invariant inv, std::size_t k) {
  const BoundFormula f = inv == Invariant::kR ? BoundFormula::kG : BoundFormula::kF;
  return static_cast<std::uint64_t>(
      bound_closed_form(f, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)));
}

Predicate maximal_predicate(std::size_t n, Invariant inv, std::size_t k) {
  Predicate pred;
  pred.with(Atom::metric(inv, Distance(static_cast<std::uint32_t>(k))))
      .with(Atom::arcs(max_arcs_value(n, inv, k)));
  return pred;
}

std::vector<Digraph> maximal_radius_construction(std::size_t n, std::size_t k) {
  std::vector<Digraph> out;
  if (k == 1) {
    out.push_back(complete_symmetric(n));
  } else if (k == 2) {
    // Every vertex misses exactly one out-neighbour.
    std::vector<std::size_t> skip(n, 0);
    while (true) {
      std::vector<Arc> arcs;
      for (std::size_t u = 0; u < n; ++u) {
        for (std::size_t v = 0, c = 0; v < n; ++v) {
          if (u == v) continue;
          if (c++ != skip[u]) arcs.push_back({static_cast<Vertex>(u + 1), static_cast<Vertex>(v + 1)});
        }
      }
      out.push_back(Digraph::from_arc_list(n, arcs));
      std::size_t i = 0;
      while (i < n && ++skip[i] == n - 1) skip[i++] = 0;
      if (i == n) break;
    }
  } else {
    for (const MaximalRadius& spec : maximal_radius_specs(n, k)) {
      out.push_back(maximal_radius_digraph(spec));
    }
  }
  return out;
}

std::vector<Digraph> maximal_qd_construction(std::size_t n, std::size_t k) {
  std::vector<Digraph> out;
  if (k == 1) {
    out.push_back(complete_symmetric(n));
  } else if (k == 2) {
    std::vector<Arc> arcs;
    for (const Arc& a : complete_symmetric(n).arcs()) {
      if (!((a.from == 1 && a.to == 2) || (a.from == 2 && a.to == 1))) arcs.push_back(a);
    }
    out.push_back(Digraph::from_arc_list(n, arcs));
  } else {
    for (const MaximalRadius& spec : maximal_radius_specs(n, k)) {
      out.push_back(maximal_radius_digraph(spec));
      out.push_back(maximal_quasidiameter_digraph(ReversedMaximalRadius{spec}));
    }
    if (k == 3) {
      for (const MaximalQD3& spec : maximal_qd3_specs(n - 2)) out.push_back(build_family(spec));
    }
  }
  return out;
}

void structure_scenario(const Context& ctx, Invariant inv,
                        const std::function<std::vector<Digraph>(std::size_t, std::size_t)>& make) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const auto oracle = canonical_set(n, satisfying_masks(n, maximal_predicate(n, inv, k), ctx.opts));
      std::set<std::string> built;
      std::uint64_t off_target = 0;
      for (const Digraph& g : make(n, k)) {
        built.insert(canonical_form(g));
        const Invariants values = metric_invariants(g);
        if (invariant_value(values, inv) != Distance(static_cast<std::uint32_t>(k)) ||
            g.arc_count() != max_arcs_value(n, inv, k)) {
          ++off_target;
        }
      }
      ctx.cell({{"n", n}, {"k", k}}, std::to_string(oracle.size()), std::to_string(built.size()),
               oracle == built && off_target == 0, false,
               "iso classes: enumerated vs constructed");
    }
  }
}

std::size_t distinct_forms(const std::vector<Digraph>& graphs) {
  std::set<std::string> forms;
  for (const Digraph& g : graphs) forms.insert(canonical_form(g));
  return forms.size();
}

// ---------------------------------------------------------------------------

void tournament_hertz(const Context& ctx) {
  characterize_critical(
      ctx, Invariant::kD, "diameter", 2,
      [](const HertzClassification& c, std::size_t k) { return c.transitive_tournament == k; },
      [](std::size_t k) { return std::vector<Digraph>{build_family(GammaK{k})}; });
}

void quasi_diameter_hertz(const Context& ctx) {
  characterize_critical(
      ctx, Invariant::kDM, "quasi_diameter", 2,
      [](const HertzClassification& c, std::size_t k) { return c.k == k && c.gamma_ki.has_value(); },
      [](std::size_t k) { return gamma_ki_family(k); });
}

void radius_hertz(const Context& ctx) {
  characterize_critical(
      ctx, Invariant::kR, "radius", 2,
      [](const HertzClassification& c, std::size_t k) { return c.k == k && c.gamma_ki == 1; },
      [](std::size_t k) { return gamma_ki_family(k, 1); });
}

void quasi_radius_hertz(const Context& ctx) {
  characterize_critical(
      ctx, Invariant::kRM, "quasi_radius", 2,
      [](const HertzClassification& c, std::size_t k) {
        return c.k == k && c.partition_blocks.has_value() && 2 * c.partition_blocks->size() <= k;
      },
      [](std::size_t k) {
        std::vector<Digraph> out;
        for (const auto& blocks : block_layouts(k)) out.push_back(build_family(GammaPartition{k, blocks}));
        return out;
      });
}

void radius_max_arcs(const Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const ExtremalResult best = max_arcs_where(n, parse_predicate(atom_k("radius", k)), ctx.opts);
      ctx.compare({{"n", n}, {"k", k}}, BigInt(best.arcs),
                  bound_closed_form(BoundFormula::kG, static_cast<std::int64_t>(n),
                                    static_cast<std::int64_t>(k)),
                  false, "witness " + canonical_form(best.witness));
    }
  }
}

void radius_maximal_structure(const Context& ctx) { structure_scenario(ctx, Invariant::kR, maximal_radius_construction); }

void quasi_diameter_max_arcs(const Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const ExtremalResult best =
          max_arcs_where(n, parse_predicate(atom_k("quasi_diameter", k)), ctx.opts);
      ctx.compare({{"n", n}, {"k", k}}, BigInt(best.arcs),
                  bound_closed_form(BoundFormula::kF, static_cast<std::int64_t>(n),
                                    static_cast<std::int64_t>(k)),
                  false, "witness " + canonical_form(best.witness));
    }
  }
}

void quasi_diameter_maximal_structure(const Context& ctx) { structure_scenario(ctx, Invariant::kDM, maximal_qd_construction); }

void biconnecting_completion(const Context& ctx) {
  characterize_completion(
      ctx, [](const MaskFeatures& f) { return f.bicomponents == 1; },
      [](const Digraph& g) { return bicomponent_count(g) == 1; },
      [](const HertzClassification& c) { return c.transitive_tournament == std::size_t{2}; },
      [](std::size_t n) { return all_blow_ups(build_family(GammaK{2}), n); });
}

void radius_completion(const Context& ctx) {
  characterize_completion(
      ctx, [](const MaskFeatures& f) { return f.r != MaskFeatures::kInfinite; },
      [](const Digraph& g) { return metric_invariants(g).r.is_finite(); },
      [](const HertzClassification& c) { return (c.k == 2 || c.k == 3) && c.gamma_ki == 1; },
      [](std::size_t n) {
        auto out = all_blow_ups(build_family(GammaKI{2, 1}), n);
        for (Digraph& g : all_blow_ups(build_family(GammaKI{3, 1}), n)) out.push_back(std::move(g));
        return out;
      });
}

void quasi_radius_completion(const Context& ctx) {
  characterize_completion(
      ctx, [](const MaskFeatures& f) { return f.r_m != MaskFeatures::kInfinite; },
      [](const Digraph& g) { return metric_invariants(g).r_m.is_finite(); },
      [](const HertzClassification& c) {
        if (c.k % 2 != 0 || !c.partition_blocks) return false;
        return std::all_of(c.partition_blocks->begin(), c.partition_blocks->end(),
                           [](std::size_t b) { return b == 2; });
      },
      [](std::size_t n) {
        std::vector<Digraph> out;
        for (std::size_t k = 2; k <= n; k += 2) {
          const std::vector<std::size_t> blocks(k / 2, 2);
          for (Digraph& g : all_blow_ups(build_family(GammaPartition{k, blocks}), n)) {
            out.push_back(std::move(g));
          }
        }
        return out;
      });
}

void inf_diameter_arcs(const Context& ctx) { extremal_scenario(ctx, BoundFormula::kInfDiameterArcs, "diameter", 2, true); }
void inf_quasi_diameter_arcs(const Context& ctx) {
  extremal_scenario(ctx, BoundFormula::kInfQuasiDiameterArcs, "quasi_diameter", 3, true);
}
void inf_quasi_diameter_arcs_any_k(const Context& ctx) { extremal_any_k(ctx, BoundFormula::kInfQuasiDiameterArcsAnyK, "quasi_diameter"); }
void inf_radius_arcs(const Context& ctx) { extremal_scenario(ctx, BoundFormula::kLambda, "radius", 2, true); }
void inf_radius_arcs_any_k(const Context& ctx) { extremal_any_k(ctx, BoundFormula::kInfRadiusArcsAnyK, "radius"); }
void inf_quasi_radius_arcs(const Context& ctx) {
  extremal_scenario(ctx, BoundFormula::kInfQuasiRadiusArcs, "quasi_radius", 2, true);
}

void d_critical_classes(const Context& ctx) { count_scenario(ctx, CountFormula::kBeta, "diameter", Invariant::kD, false); }
void d_critical_labeled(const Context& ctx) {
  count_scenario(ctx, CountFormula::kLabeledDCritical, "diameter", Invariant::kD, true);
}
void dm_critical_classes(const Context& ctx) {
  count_scenario(ctx, CountFormula::kQ, "quasi_diameter", Invariant::kDM, false);
}
void dm_critical_labeled(const Context& ctx) {
  count_scenario(ctx, CountFormula::kQStar, "quasi_diameter", Invariant::kDM, true);
}
void r_critical_classes(const Context& ctx) { count_scenario(ctx, CountFormula::kNuR, "radius", Invariant::kR, false); }
void r_critical_labeled(const Context& ctx) {
  count_scenario(ctx, CountFormula::kNuRStar, "radius", Invariant::kR, true);
}
void rm_critical_classes(const Context& ctx) {
  count_scenario(ctx, CountFormula::kPiRm, "quasi_radius", Invariant::kRM, false);
}
void rm_critical_labeled(const Context& ctx) {
  count_scenario(ctx, CountFormula::kXiRm, "quasi_radius", Invariant::kRM, true);
}

void max_radius_classes(const Context& ctx) {
  for (std::size_t n = 4; n <= kConstructionMaxN; ++n) {
    for (std::size_t k = 3; k < n; ++k) {
      const auto n64 = static_cast<std::int64_t>(n);
      const auto k64 = static_cast<std::int64_t>(k);
      const BigInt built(distinct_forms(maximal_radius_construction(n, k)));
      ctx.compare({{"n", n}, {"k", k}, {"enumerated", 0}}, built,
                  count_closed_form(CountFormula::kMaxRadiusIso, n64, k64), false,
                  "construction classes vs stated count");
      ctx.compare({{"n", n}, {"k", k}, {"enumerated", 0}}, built,
                  max_radius_iso_derivation_line(n64, k64), true,
                  "construction classes vs derivation's final expression");
      if (n <= ctx.max_n) {
        ctx.compare({{"n", n}, {"k", k}, {"enumerated", 1}},
                    BigInt(iso_class_count(n, maximal_predicate(n, Invariant::kR, k), ctx.opts)),
                    count_closed_form(CountFormula::kMaxRadiusIso, n64, k64), false,
                    "enumerated classes vs stated count");
      }
    }
  }
}

void maximal_count(const Context& ctx, Invariant inv, CountFormula f, bool labeled) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    for (std::size_t k = 1; k < n; ++k) {
      const Predicate pred = maximal_predicate(n, inv, k);
      const BigInt oracle = labeled ? BigInt(count_labeled(n, pred, ctx.opts))
                                    : BigInt(iso_class_count(n, pred, ctx.opts));
      ctx.compare({{"n", n}, {"k", k}}, oracle,
                  count_closed_form(f, static_cast<std::int64_t>(n), static_cast<std::int64_t>(k)),
                  labeled);
    }
  }
}

void max_radius_labeled(const Context& ctx) { maximal_count(ctx, Invariant::kR, CountFormula::kChi, true); }
void max_qd_classes(const Context& ctx) { maximal_count(ctx, Invariant::kDM, CountFormula::kNuDm, false); }

void max_qd_labeled(const Context& ctx) {
  maximal_count(ctx, Invariant::kDM, CountFormula::kMuDm, true);
  for (std::int64_t n = 4; n <= kCaseSumMaxN; ++n) {
    ctx.compare({{"n", n}, {"k", 3}, {"case_sum", 1}}, mu_dm3_by_cases(n),
                count_closed_form(CountFormula::kMuDm, n, 3), true,
                "four-case sum vs closed form");
  }
}

void center_path_sweep(const Context& ctx) {
  for (std::int64_t k = 3; k <= 30; ++k) {
    std::uint64_t bad = 0, checked = 0;
    for (std::int64_t n = k + 1; n <= 60; ++n) {
      const std::int64_t bound = n * (n - k) + (k * k - k - 2) / 2;
      for (std::int64_t t = 1; t <= k - 1; ++t) {
        for (std::int64_t s = 0; s <= n - k - 1; ++s) {
          const std::int64_t value = center_path_arc_bound(n, k, s, t);
          const bool extremal = t == 1 && s == 0;
          ++checked;
          if (value > bound || (value == bound) != extremal) ++bad;
        }
      }
    }
    ctx.exceptions({{"k", k}}, bad, std::to_string(checked) + " (n,s,t) points");
  }
}

void center_outdegree(const Context& ctx) {
  for (std::size_t n = 2; n <= ctx.max_n; ++n) {
    std::uint64_t finite = 0;
    const auto violations = filter_masks(
        n,
        [n](std::uint64_t m, const std::vector<MaskFeatures>& t) {
          const MaskFeatures& f = t[m];
          if (f.r == MaskFeatures::kInfinite) return false;
          const Digraph g = Digraph::from_arc_mask(n, m);
          const MetricProfile p = metric_profile(g);
          const Condensation c = condensation(g);
          const std::size_t limit = n - f.r;
          for (Vertex v = 1; v <= n; ++v) {
            if (p.ecc_out[v - 1] != p.r()) continue;
            for (Vertex w : c.components[c.component_of[v - 1]]) {
              if (g.out_degree(w) > limit) return true;
            }
          }
          return false;
        },
        ctx.opts);
    for (const MaskFeatures& f : feature_table(n, ctx.opts)) {
      finite += f.r != MaskFeatures::kInfinite ? 1 : 0;
    }
    ctx.exceptions({{"n", n}}, violations.size(),
                   std::to_string(finite) + " finite-radius digraphs checked");
  }
}

void short_quasi_diameter(const Context& ctx) {
  for (std::size_t n = 4; n <= ctx.max_n; ++n) {
    const std::size_t k = n - 1;
    const ExtremalResult best =
        max_arcs_where(n, parse_predicate(atom_k("quasi_diameter", k)), ctx.opts);
    ctx.compare({{"n", n}, {"k", k}}, BigInt(best.arcs),
                bound_closed_form(BoundFormula::kShortQuasiDiameterArcs, static_cast<std::int64_t>(n),
                                  static_cast<std::int64_t>(k)),
                false, "witness " + canonical_form(best.witness));
  }
}

struct ScenarioEntry {
  const char* name;
  const char* claim;
  void (*run)(const Context&);
};

const ScenarioEntry kScenarios[] = {
    {"thm1", "d-critical digraphs of infinite diameter have a transitive tournament as Hertz graph",
     tournament_hertz},
    {"thm2", "d_m-critical digraphs of infinite quasi-diameter have Hertz graph GammaKI", quasi_diameter_hertz},
    {"thm3", "r-critical digraphs of infinite radius have Hertz graph GammaKI(k,1)", radius_hertz},
    {"thm4", "r_m-critical digraphs of infinite quasi-radius have the block partition structure",
     quasi_radius_hertz},
    {"thm5", "maximum arc count at radius k equals g(n,k)", radius_max_arcs},
    {"thm6", "maximal digraphs of radius k are exactly the constructed family", radius_maximal_structure},
    {"thm7", "maximum arc count at quasi-diameter k equals f(n,k)", quasi_diameter_max_arcs},
    {"thm8", "maximal digraphs of quasi-diameter k are exactly the constructed family", quasi_diameter_maximal_structure},
    {"cor11", "digraphs made biconnected by any added arc have Hertz graph GammaK(2)", biconnecting_completion},
    {"cor12", "arc bound for infinite diameter with k bicomponents", inf_diameter_arcs},
    {"cor13", "nonisomorphic d-critical digraphs of infinite diameter", d_critical_classes},
    {"cor14", "labeled d-critical digraphs of infinite diameter", d_critical_labeled},
    {"cor21", "arc bound for infinite quasi-diameter with k >= 3 bicomponents", inf_quasi_diameter_arcs},
    {"cor22", "arc bound for infinite quasi-diameter", inf_quasi_diameter_arcs_any_k},
    {"cor23", "nonisomorphic d_m-critical digraphs of infinite quasi-diameter", dm_critical_classes},
    {"cor24", "labeled d_m-critical digraphs of infinite quasi-diameter", dm_critical_labeled},
    {"cor31", "arc bound for infinite radius with k bicomponents", inf_radius_arcs},
    {"cor32", "digraphs given finite radius by any added arc have Hertz graph GammaKI(2|3,1)",
     radius_completion},
    {"cor33", "arc bound for infinite radius", inf_radius_arcs_any_k},
    {"cor34", "nonisomorphic r-critical digraphs of infinite radius", r_critical_classes},
    {"cor35", "labeled r-critical digraphs of infinite radius", r_critical_labeled},
    {"cor41", "arc bound for infinite quasi-radius with k bicomponents", inf_quasi_radius_arcs},
    {"cor42", "digraphs given finite quasi-radius by any added arc have all blocks of size 2",
     quasi_radius_completion},
    {"cor43", "nonisomorphic r_m-critical digraphs of infinite quasi-radius", rm_critical_classes},
    {"cor44", "labeled r_m-critical digraphs of infinite quasi-radius", rm_critical_labeled},
    {"cor51", "nonisomorphic maximal digraphs of radius k >= 3", max_radius_classes},
    {"cor52", "labeled maximal digraphs of radius k", max_radius_labeled},
    {"cor61", "nonisomorphic maximal digraphs of quasi-diameter k", max_qd_classes},
    {"cor62", "labeled maximal digraphs of quasi-diameter k", max_qd_labeled},
    {"lemma9", "center-path arc bound peaks only at t = 1, s = 0", center_path_sweep},
    {"lemma10", "vertices sharing a bicomponent with a center have outdegree <= n - r", center_outdegree},
    {"lemma11", "(k+1)-vertex digraphs of quasi-diameter k have at most (k^2+k)/2 arcs", short_quasi_diameter},
};

}  // namespace

std::string_view status_name(CellStatus s) {
  switch (s) {
    case CellStatus::kMatch: return "match";
    case CellStatus::kMismatch: return "mismatch";
    case CellStatus::kErrataSuspected: return "formula-errata-suspected";
  }
  return "";
}

std::size_t VerificationReport::count(CellStatus s) const {
  return static_cast<std::size_t>(
      std::count_if(cells.begin(), cells.end(), [s](const ReportCell& c) { return c.status == s; }));
}

const std::vector<std::string>& scenario_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const ScenarioEntry& e : kScenarios) out.emplace_back(e.name);
    return out;
  }();
  return names;
}

VerificationReport run_scenario(std::string_view name, std::size_t max_n, ScanOptions opts) {
  const ScenarioEntry* entry = nullptr;
  for (const ScenarioEntry& e : kScenarios) {
    if (name == e.name) entry = &e;
  }
  if (!entry) throw Error(ErrorCode::kUnknownScenario, "no scenario named '" + std::string(name) + "'");
  if (max_n > kMaxEnumerationVertices) {
    throw Error(ErrorCode::kTooLarge, "max n is " + std::to_string(kMaxEnumerationVertices) +
                                          ", got " + std::to_string(max_n));
  }
  if (max_n < 2) throw Error(ErrorCode::kOutOfRange, "max n must be at least 2");

  VerificationReport report;
  report.scenario = entry->name;
  report.claim = entry->claim;
  report.max_n = max_n;
  const auto start = std::chrono::steady_clock::now();
  entry->run(Context{max_n, opts, &report});
  report.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace critdg
