#include <gtest/gtest.h>

#include <random>
#include <set>

#include "critdg/condensation.hpp"
#include "critdg/criticality.hpp"
#include "critdg/families.hpp"
#include "critdg/metrics.hpp"
#include "critdg/oracle.hpp"
#include "support.hpp"

namespace critdg {
namespace {

using testing::expect_error;

const Distance kInf = Distance::infinity();

Predicate P(std::string_view text) { return parse_predicate(text); }

TEST(Enumeration, Sizes) {
  EXPECT_EQ(enumerate_digraphs(2).size(), 4u);
  EXPECT_EQ(enumerate_digraphs(3).size(), 64u);
  expect_error(ErrorCode::kTooLarge, [] { enumerate_digraphs(6); });
  expect_error(ErrorCode::kOutOfRange, [] { enumerate_digraphs(1); });
  std::set<std::uint64_t> masks;
  for (const Digraph& g : enumerate_digraphs(3)) masks.insert(g.arc_mask());
  EXPECT_EQ(masks.size(), 64u);
}

TEST(Predicate, ParseAndPrint) {
  const Predicate p = P("radius=2,arcs=8,critical(d)");
  ASSERT_EQ(p.atoms.size(), 3u);
  EXPECT_EQ(p.to_string(), "radius=2,arcs=8,critical(d)");
  EXPECT_EQ(P(p.to_string()).to_string(), p.to_string());
  EXPECT_EQ(P("diameter=INF").atoms[0].value, kInf);
  EXPECT_TRUE(P("").atoms.empty());
  EXPECT_TRUE(P("true").atoms.empty());
  const Predicate h = P("hertz=gamma_ki(3,1),biconnected,transitive,quasi_radius=inf");
  EXPECT_EQ(P(h.to_string()).to_string(), h.to_string());
  expect_error(ErrorCode::kParseError, [] { P("radius"); });
  expect_error(ErrorCode::kParseError, [] { P("critical(x)"); });
  expect_error(ErrorCode::kParseError, [] { P("hertz=cube(3)"); });
}

TEST(Oracle, CountLabeled) {
  EXPECT_EQ(count_labeled(3, P("")), 64u);
  EXPECT_EQ(count_labeled(3, P("diameter=INF,critical(d),bicomponents=2")), 6u);
  EXPECT_EQ(count_labeled(4, P("radius=2,arcs=8")), 81u);
}

TEST(Oracle, MaxArcs) {
  EXPECT_EQ(max_arcs_where(4, P("radius=3")).arcs, 6u);
  EXPECT_EQ(max_arcs_where(4, P("diameter=INF")).arcs, 9u);
  EXPECT_EQ(max_arcs_where(4, P("quasi_diameter=3")).arcs, 6u);
  const ExtremalResult r = max_arcs_where(5, P("radius=3"));
  EXPECT_EQ(r.arcs, 12u);
  EXPECT_EQ(metric_invariants(r.witness).r, Distance(3));
  EXPECT_EQ(r.witness.arc_mask(), satisfying_masks(5, P("radius=3,arcs=12")).front());
  expect_error(ErrorCode::kEmptyPredicate, [] { max_arcs_where(3, P("radius=5")); });
}

TEST(Oracle, IsoClassCounts) {
  EXPECT_EQ(iso_class_count(3, P("diameter=INF,critical(d),bicomponents=2")), 2u);
  EXPECT_EQ(iso_class_count(4, P("quasi_radius=INF,critical(rm),bicomponents=2")), 2u);
  EXPECT_EQ(iso_class_count(5, P("radius=INF,critical(r),bicomponents=2")), 2u);
  EXPECT_EQ(iso_class_count(3, P("")), 16u);
  EXPECT_EQ(iso_class_count(4, P("")), 218u);
}

// Frozen exhaustive values that the closed forms are checked against.
TEST(Oracle, FrozenCounts) {
  EXPECT_EQ(count_labeled(5, P("radius=2,arcs=15")), 1024u);
  EXPECT_EQ(count_labeled(5, P("radius=3,arcs=12")), 120u);
  EXPECT_EQ(count_labeled(4, P("quasi_diameter=3,arcs=6")), 72u);
  EXPECT_EQ(count_labeled(5, P("quasi_diameter=3,arcs=12")), 600u);
  EXPECT_EQ(iso_class_count(4, P("quasi_diameter=3,arcs=6")), 4u);
  EXPECT_EQ(iso_class_count(5, P("quasi_diameter=3,arcs=12")), 10u);
  EXPECT_EQ(count_labeled(3, P("radius=2,arcs=3")), 8u);
}

TEST(Canonical, DistinguishesAndIdentifies) {
  const Digraph a = blow_up(build_family(GammaK{2}), {1, 2});
  const Digraph b = blow_up(build_family(GammaK{2}), {2, 1});
  EXPECT_NE(canonical_form(a), canonical_form(b));
  EXPECT_FALSE(are_isomorphic(a, b));
  EXPECT_TRUE(are_isomorphic(build_family(GammaPartition{4, {2, 2}}), build_family(D4{})));
  EXPECT_EQ(canonical_form(Digraph::empty(3)), "000000");
  expect_error(ErrorCode::kTooLarge, [] { canonical_form(Digraph::empty(10)); });
}

TEST(Canonical, InvariantUnderRandomRelabeling) {
  std::mt19937_64 rng(2024);
  for (std::size_t n : {4u, 6u, 8u}) {
    for (int trial = 0; trial < 5; ++trial) {
      const Digraph g = testing::random_digraph(n, 0.35, rng);
      const std::string form = canonical_form(g);
      for (int i = 0; i < 100; ++i) {
        const Digraph h = relabel(g, testing::random_permutation(n, rng));
        ASSERT_EQ(canonical_form(h), form);
        ASSERT_TRUE(are_isomorphic(g, h));
      }
    }
  }
}

TEST(Canonical, RemovingAnArcChangesTheClass) {
  std::mt19937_64 rng(9);
  for (int i = 0; i < 30; ++i) {
    const Digraph g = testing::random_digraph(6, 0.5, rng);
    const auto arcs = g.arcs();
    if (arcs.empty()) continue;
    std::vector<Arc> fewer(arcs.begin() + 1, arcs.end());
    EXPECT_FALSE(are_isomorphic(g, Digraph::from_arc_list(6, fewer)));
  }
}

// The oracle's own kernel must agree with the library on every digraph.
TEST(FeatureTable, AgreesWithLibrary) {
  for (std::size_t n = 2; n <= 4; ++n) {
    const auto& table = feature_table(n);
    ASSERT_EQ(table.size(), enumerate_digraphs(n).size());
    for (const Digraph& g : enumerate_digraphs(n)) {
      const MaskFeatures& f = table[g.arc_mask()];
      const Invariants inv = metric_invariants(g);
      EXPECT_EQ(f.bicomponents, bicomponent_count(g));
      for (Invariant i : kAllInvariants) {
        const Distance lib = invariant_value(inv, i);
        const std::uint8_t raw = f.value(i);
        EXPECT_EQ(raw == MaskFeatures::kInfinite ? kInf : Distance(raw), lib);
        EXPECT_EQ(f.is_critical(i), is_critical(g, i)) << g.arc_mask();
      }
    }
  }
}

TEST(FeatureTable, AgreesWithLibraryOnFiveVertexSample) {
  const auto& table = feature_table(5);
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<std::uint64_t> pick(0, table.size() - 1);
  for (int i = 0; i < 3000; ++i) {
    const std::uint64_t m = pick(rng);
    const Digraph g = Digraph::from_arc_mask(5, m);
    EXPECT_EQ(table[m].bicomponents, bicomponent_count(g));
    for (Invariant inv : kAllInvariants) EXPECT_EQ(table[m].is_critical(inv), is_critical(g, inv));
  }
}

TEST(Predicate, TableRouteMatchesLibraryRoute) {
  for (const char* text : {"diameter=INF,critical(d),bicomponents=3", "radius=2,arcs=7",
                           "quasi_radius=INF,critical(rm)", "hertz=gamma_ki(3,1)",
                           "hertz=d4", "biconnected,quasi_diameter=2", "transitive,arcs=4"}) {
    const Predicate p = P(text);
    std::uint64_t direct = 0;
    for (const Digraph& g : enumerate_digraphs(4)) direct += p.evaluate(g) ? 1 : 0;
    EXPECT_EQ(count_labeled(4, p), direct) << text;
  }
}

TEST(Scan, DeterministicAcrossWorkerCounts) {
  const Predicate p = P("radius=2");
  const auto one = satisfying_masks(5, p, {1});
  for (std::size_t w : {2u, 8u}) {
    EXPECT_EQ(satisfying_masks(5, p, {w}), one);
    EXPECT_EQ(max_arcs_where(5, p, {w}).witness, max_arcs_where(5, p, {1}).witness);
    EXPECT_EQ(iso_class_count(4, p, {w}), iso_class_count(4, p, {1}));
  }
}

TEST(Scan, FilterMasks) {
  const auto masks = filter_masks(
      3, [](std::uint64_t m, const std::vector<MaskFeatures>& t) { return t[m].bicomponents == 1; },
      {3});
  EXPECT_EQ(masks.size(), static_cast<std::size_t>(count_labeled(3, P("biconnected"))));
  EXPECT_TRUE(std::is_sorted(masks.begin(), masks.end()));
}

}  // namespace
}  // namespace critdg
