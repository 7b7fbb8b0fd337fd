#include <gtest/gtest.h>

#include <algorithm>
#include <vector>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "patmine/error.hpp"
#include "patmine/morphism.hpp"

namespace patmine {
namespace {

using testing::cycle_graph;
using testing::hexagon_with_chord;
using testing::path_graph;

TEST(MappingTest, TotalityAndInjectivity) {
  Mapping m(3);
  EXPECT_FALSE(m.is_total());
  m.assign(0, 4);
  m.assign(1, 2);
  EXPECT_TRUE(m.is_injective());
  m.assign(2, 4);
  EXPECT_TRUE(m.is_total());
  EXPECT_FALSE(m.is_injective());
  m.unassign(2);
  EXPECT_FALSE(m.is_mapped(2));
}

TEST(HomomorphismTest, HexagonWithChordEmbedsInPositiveExample) {
  const Dataset ds = toy_dataset();
  const LabeledGraph pattern = hexagon_with_chord(1, 4);
  const auto m = find_homomorphism(pattern, ds.examples[0].graph);
  ASSERT_TRUE(m.has_value());
  EXPECT_TRUE(is_homomorphism(pattern, ds.examples[0].graph, *m));
  EXPECT_FALSE(find_homomorphism(pattern, ds.examples[1].graph).has_value());
}

TEST(HomomorphismTest, ThreePathIntoFourPathHasFourEmbeddings) {
  const auto maps = brute_force_homomorphisms(path_graph(3), path_graph(4));
  ASSERT_EQ(maps.size(), 4U);
  EXPECT_EQ(maps.front(), Mapping(std::vector<VertexId>{0, 1, 2}));
  EXPECT_TRUE(std::is_sorted(maps.begin(), maps.end()));
  EXPECT_TRUE(find_homomorphism(path_graph(3), path_graph(4)).has_value());
}

TEST(HomomorphismTest, BruteForceTrivialCases) {
  const LabeledGraph single = testing::uniform_graph(1, {});
  EXPECT_EQ(brute_force_homomorphisms(single, path_graph(5)).size(), 5U);

  const std::vector<Edge> arc = {{0, 1}};
  const LabeledGraph directed = testing::uniform_graph(2, arc, false);
  EXPECT_EQ(brute_force_homomorphisms(directed, directed).size(), 1U);

  try {
    brute_force_homomorphisms(path_graph(9), path_graph(9));
    FAIL() << "expected PatternTooLarge";
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), ErrorCode::PatternTooLarge);
  }
}

TEST(HomomorphismTest, RespectsLabelsAndDirection) {
  const std::vector<Edge> arc = {{0, 1}};
  const std::vector<Edge> reversed = {{1, 0}};
  std::vector<Label> ab = {Label("a"), Label("b")};
  const LabeledGraph p = build_graph(2, arc, ab, false);
  EXPECT_TRUE(find_homomorphism(p, build_graph(2, arc, ab, false)).has_value());
  EXPECT_FALSE(find_homomorphism(p, build_graph(2, reversed, ab, false)).has_value());
  std::vector<Label> aa = {Label("a"), Label("a")};
  EXPECT_FALSE(find_homomorphism(p, build_graph(2, arc, aa, false)).has_value());
}

TEST(HomomorphismTest, NonInducedEdgesAreAllowed) {
  // Injective homomorphism only needs pattern edges present in the target.
  EXPECT_TRUE(find_homomorphism(path_graph(3), cycle_graph(3)).has_value());
  EXPECT_FALSE(find_homomorphism(cycle_graph(3), path_graph(3)).has_value());
}

TEST(HomomorphismTest, AgreesWithBruteForceOnRandomPairs) {
  SplitMix64 rng(42);
  int present = 0;
  for (int i = 0; i < 100; ++i) {
    const std::size_t np = 1 + rng.below(6);
    const std::size_t nt = np + rng.below(9 - np);
    const bool undirected = i % 2 == 0;
    const LabeledGraph p = testing::random_connected_graph(rng, np, 150, 2, undirected);
    const LabeledGraph t = testing::random_graph(rng, nt, 450, 2, undirected);
    const auto all = brute_force_homomorphisms(p, t);
    const auto found = find_homomorphism(p, t);
    ASSERT_EQ(found.has_value(), !all.empty()) << "pair " << i;
    EXPECT_EQ(found.has_value(), testing::has_injective_homomorphism(p, t)) << "pair " << i;
    if (found) {
      ++present;
      EXPECT_TRUE(std::find(all.begin(), all.end(), *found) != all.end()) << "pair " << i;
      EXPECT_TRUE(found->is_total() && found->is_injective());
      EXPECT_TRUE(is_homomorphism(p, t, *found));
    }
  }
  // Both outcomes must be exercised for the comparison to mean anything.
  EXPECT_GT(present, 10);
  EXPECT_LT(present, 90);
}

TEST(HomomorphismTest, ForEachEnumeratesExactlyTheBruteForceSet) {
  SplitMix64 rng(7);
  for (int i = 0; i < 40; ++i) {
    const LabeledGraph p = testing::random_connected_graph(rng, 1 + rng.below(4), 200, 2, true);
    const LabeledGraph t = testing::random_graph(rng, 6, 400, 2, true);
    std::vector<Mapping> seen;
    MatchPlan(p).for_each(t, [&](const Mapping& m) {
      seen.push_back(m);
      return true;
    });
    std::sort(seen.begin(), seen.end());
    EXPECT_EQ(seen, brute_force_homomorphisms(p, t)) << "pair " << i;
  }
}

TEST(IsomorphismTest, ChordVariantsOfTheHexagonAreIsomorphic) {
  EXPECT_TRUE(is_isomorphic(hexagon_with_chord(1, 4), hexagon_with_chord(0, 3)));
  EXPECT_TRUE(is_isomorphic(hexagon_with_chord(1, 4), hexagon_with_chord(1, 4)));
  EXPECT_FALSE(is_isomorphic(hexagon_with_chord(1, 4), hexagon_with_chord(0, 2)));
  EXPECT_FALSE(is_isomorphic(cycle_graph(6), path_graph(6)));
}

TEST(IsomorphismTest, SameDegreesButDifferentStructure) {
  // Two triangles vs a 6-cycle: both 2-regular on six vertices.
  const std::vector<Edge> triangles = {{0, 1}, {1, 2}, {2, 0}, {3, 4}, {4, 5}, {5, 3}};
  EXPECT_FALSE(is_isomorphic(testing::uniform_graph(6, triangles), cycle_graph(6)));
}

TEST(IsomorphismTest, AgreesWithPermutationOracle) {
  SplitMix64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const std::size_t n = 1 + rng.below(6);
    const bool undirected = i % 3 != 0;
    const LabeledGraph a = testing::random_graph(rng, n, 400, 2, undirected);
    // Half of the pairs are relabelled copies, so the positive branch is exercised.
    LabeledGraph b;
    if (i % 2 == 0) {
      std::vector<VertexId> perm(n);
      for (VertexId v = 0; v < n; ++v) perm[v] = v;
      rng.shuffle(std::span<VertexId>(perm));
      std::vector<Edge> edges;
      for (const Edge& e : a.edges()) edges.push_back({perm[e.from], perm[e.to]});
      std::vector<Label> labels(n, Label("l0"));
      for (VertexId v = 0; v < n; ++v) labels[perm[v]] = a.label(v);
      b = build_graph(n, edges, labels, false);
    } else {
      b = testing::random_graph(rng, n, 400, 2, undirected);
    }
    EXPECT_EQ(is_isomorphic(a, b), testing::isomorphic_by_permutation(a, b)) << "pair " << i;
  }
}

TEST(IsomorphismTest, IsAnEquivalenceRelation) {
  SplitMix64 rng(3);
  std::vector<LabeledGraph> pool;
  for (int i = 0; i < 24; ++i) pool.push_back(testing::random_graph(rng, 4, 500, 1, true));
  for (const auto& a : pool) {
    EXPECT_TRUE(is_isomorphic(a, a));
    for (const auto& b : pool) {
      EXPECT_EQ(is_isomorphic(a, b), is_isomorphic(b, a));
      for (const auto& c : pool) {
        if (is_isomorphic(a, b) && is_isomorphic(b, c)) EXPECT_TRUE(is_isomorphic(a, c));
      }
    }
  }
}

TEST(IsomorphismTest, IsomorphicTargetsAreInterchangeable) {
  SplitMix64 rng(23);
  for (int i = 0; i < 30; ++i) {
    const LabeledGraph t1 = testing::random_graph(rng, 6, 450, 2, true);
    std::vector<VertexId> perm = {0, 1, 2, 3, 4, 5};
    rng.shuffle(std::span<VertexId>(perm));
    std::vector<Edge> edges;
    for (const Edge& e : t1.edges()) edges.push_back({perm[e.from], perm[e.to]});
    std::vector<Label> labels(6, Label("l0"));
    for (VertexId v = 0; v < 6; ++v) labels[perm[v]] = t1.label(v);
    const LabeledGraph t2 = build_graph(6, edges, labels, false);
    ASSERT_TRUE(is_isomorphic(t1, t2));
    for (int j = 0; j < 10; ++j) {
      const LabeledGraph p = testing::random_connected_graph(rng, 1 + rng.below(5), 200, 2, true);
      EXPECT_EQ(find_homomorphism(p, t1).has_value(), find_homomorphism(p, t2).has_value());
    }
  }
}

}  // namespace
}  // namespace patmine
