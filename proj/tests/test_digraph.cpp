#include <gtest/gtest.h>

#include <random>

#include "critdg/condensation.hpp"
#include "critdg/digraph.hpp"
#include "critdg/families.hpp"
#include "support.hpp"

namespace critdg {
namespace {

using testing::cycle;
using testing::expect_error;

TEST(Digraph, ConstructionContract) {
  const Digraph g = Digraph::from_arc_list(2, {{1, 2}});
  EXPECT_EQ(g.arc_count(), 1u);
  EXPECT_TRUE(g.has_arc(1, 2));
  EXPECT_FALSE(g.has_arc(2, 1));
  expect_error(ErrorCode::kLoopArc, [] { Digraph::from_arc_list(2, {{1, 1}}); });
  expect_error(ErrorCode::kDuplicateArc, [] { Digraph::from_arc_list(3, {{1, 2}, {1, 2}}); });
  expect_error(ErrorCode::kOutOfRange, [] { Digraph::from_arc_list(3, {{1, 4}}); });
  expect_error(ErrorCode::kOutOfRange, [] { Digraph::from_arc_list(3, {{0, 2}}); });
}

TEST(Digraph, WithArc) {
  const Digraph g = Digraph::empty(3).with_arc({1, 3});
  EXPECT_EQ(g.arcs(), (std::vector<Arc>{{1, 3}}));
  expect_error(ErrorCode::kArcPresent, [&] { g.with_arc({1, 3}); });
  expect_error(ErrorCode::kLoopArc, [&] { g.with_arc({2, 2}); });
}

TEST(Digraph, ArcMaskRoundTripAllThreeVertexGraphs) {
  for (std::uint64_t m = 0; m < 64; ++m) {
    const Digraph g = Digraph::from_arc_mask(3, m);
    EXPECT_EQ(g.arc_mask(), m);
    EXPECT_EQ(Digraph::from_arc_list(3, g.arcs()), g);
  }
  // bit 0 is (1,2), bit n-1 is (2,1)
  EXPECT_EQ(Digraph::from_arc_mask(4, 1).arcs(), (std::vector<Arc>{{1, 2}}));
  EXPECT_EQ(Digraph::from_arc_mask(4, 1u << 3).arcs(), (std::vector<Arc>{{2, 1}}));
}

TEST(Digraph, LargeGraphsUseSeveralWords) {
  std::vector<Arc> arcs;
  for (Vertex v = 1; v < 130; ++v) arcs.push_back({v, v + 1});
  const Digraph g = Digraph::from_arc_list(130, arcs);
  EXPECT_EQ(g.words_per_row(), 3u);
  EXPECT_TRUE(g.has_arc(129, 130));
  EXPECT_EQ(transitive_closure(g).arc_count(), 130u * 129u / 2u);
}

TEST(Digraph, Reverse) {
  EXPECT_EQ(reverse(build_family(GammaK{2})).arcs(), (std::vector<Arc>{{2, 1}}));
  std::mt19937_64 rng(7);
  for (int i = 0; i < 50; ++i) {
    const Digraph g = testing::random_digraph(6, 0.4, rng);
    EXPECT_EQ(reverse(reverse(g)), g);
  }
}

TEST(Digraph, TransitiveClosure) {
  const Digraph path = Digraph::from_arc_list(3, {{1, 2}, {2, 3}});
  EXPECT_EQ(transitive_closure(path), build_family(GammaK{3}));
  EXPECT_EQ(transitive_closure(build_family(GammaK{3})), build_family(GammaK{3}));
  const Digraph g = Digraph::from_arc_list(3, {{1, 2}, {2, 1}, {2, 3}});
  EXPECT_EQ(transitive_closure(g), Digraph::from_arc_list(3, {{1, 2}, {2, 1}, {2, 3}, {1, 3}}));
}

TEST(Digraph, RelabelAndInducedSubgraph) {
  const Digraph g = Digraph::from_arc_list(3, {{1, 2}, {2, 3}});
  const std::vector<Vertex> perm{3, 1, 2};
  EXPECT_EQ(relabel(g, perm), Digraph::from_arc_list(3, {{3, 1}, {1, 2}}));
  const std::vector<Vertex> bad{1, 1, 2};
  expect_error(ErrorCode::kOutOfRange, [&] { relabel(g, bad); });
  const std::vector<Vertex> keep{2, 3};
  EXPECT_EQ(induced_subgraph(g, keep), Digraph::from_arc_list(2, {{1, 2}}));
}

TEST(Condensation, Examples) {
  const Digraph g = Digraph::from_arc_list(3, {{1, 2}, {2, 1}, {1, 3}, {2, 3}});
  const Condensation c = condensation(g);
  ASSERT_EQ(c.count(), 2u);
  EXPECT_EQ(c.components[0], (std::vector<Vertex>{1, 2}));
  EXPECT_EQ(c.components[1], (std::vector<Vertex>{3}));
  EXPECT_EQ(c.hertz, build_family(GammaK{2}));

  const Digraph g4 = build_family(GammaK{4});
  EXPECT_EQ(condensation(g4).count(), 4u);
  EXPECT_EQ(condensation(g4).hertz, g4);

  const Condensation cyc = condensation(cycle(3));
  EXPECT_EQ(cyc.count(), 1u);
  EXPECT_EQ(cyc.hertz.n(), 1u);
  EXPECT_EQ(cyc.hertz.arc_count(), 0u);
}

TEST(Condensation, HertzGraphIsAcyclicAndComponentsPartition) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    const Digraph g = testing::random_digraph(7, 0.25, rng);
    const Condensation c = condensation(g);
    EXPECT_TRUE(structure_flags(c.hertz).is_acyclic);
    std::size_t total = 0;
    for (std::size_t j = 0; j < c.count(); ++j) {
      total += c.sizes[j];
      for (Vertex v : c.components[j]) EXPECT_EQ(c.component_of[v - 1], j);
    }
    EXPECT_EQ(total, g.n());
    EXPECT_EQ(bicomponent_count(g), c.count());
  }
}

TEST(StructureFlags, Examples) {
  const StructureFlags g4 = structure_flags(build_family(GammaK{4}));
  EXPECT_TRUE(g4.is_acyclic && g4.is_transitive && g4.is_transitive_tournament);
  const StructureFlags d4 = structure_flags(build_family(D4{}));
  EXPECT_TRUE(d4.is_acyclic && d4.is_transitive);
  EXPECT_FALSE(d4.is_transitive_tournament);
  const StructureFlags c3 = structure_flags(cycle(3));
  EXPECT_FALSE(c3.is_acyclic);
  EXPECT_FALSE(c3.is_transitive);
  EXPECT_TRUE(c3.is_biconnected);
  EXPECT_TRUE(structure_flags(testing::complete(3)).is_complete_symmetric);
}

}  // namespace
}  // namespace critdg
