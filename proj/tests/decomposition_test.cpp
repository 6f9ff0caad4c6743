#include <gtest/gtest.h>

#include <random>

#include "nearbip/decomposition.hpp"
#include "nearbip/errors.hpp"
#include "nearbip/reduction.hpp"
#include "support/graphs.hpp"

namespace nearbip {
namespace {

TEST(DecompositionTest, ConstraintGraphSplitIsValid) {
  const Graph j = build_constraint_graph();
  EXPECT_TRUE(is_valid(validate_decomposition(j, VertexSet(8, {kX2, kX3, kY4}))));
}

TEST(DecompositionTest, EveryChoiceFailsOnK4) {
  const Graph k4 = testing::complete(4);
  for (std::uint64_t mask = 0; mask < 16; ++mask) {
    VertexSet a(4);
    for (Vertex v = 0; v < 4; ++v)
      if ((mask >> v) & 1U) a.insert(v);
    EXPECT_FALSE(is_valid(validate_decomposition(k4, a))) << mask;
    EXPECT_FALSE(is_nb_decomposition(k4, a));
  }
}

TEST(DecompositionTest, SingleVertexOfC5) {
  EXPECT_EQ(validate_decomposition(testing::cycle(5), VertexSet(5, {2})), Verdict(Valid{}));
}

TEST(DecompositionTest, WitnessesAreGenuine) {
  std::mt19937_64 rng(21);
  for (int trial = 0; trial < 3000; ++trial) {
    const Graph g = testing::from_pair_mask(8, rng() & rng() & ((1ULL << 28) - 1));
    VertexSet a(8);
    for (Vertex v = 0; v < 8; ++v)
      if (rng() % 3 == 0) a.insert(v);
    const Verdict verdict = validate_decomposition(g, a);
    EXPECT_EQ(is_valid(verdict), is_nb_decomposition(g, a));
    if (const auto* e = std::get_if<IndependenceViolation>(&verdict)) {
      EXPECT_TRUE(g.adjacent(e->edge.first, e->edge.second));
      EXPECT_TRUE(a.contains(e->edge.first));
      EXPECT_TRUE(a.contains(e->edge.second));
    } else if (const auto* c = std::get_if<CycleInB>(&verdict)) {
      ASSERT_GE(c->cycle.size(), 3u);
      EXPECT_EQ(VertexSet::of(8, c->cycle).size(), c->cycle.size());
      for (std::size_t i = 0; i < c->cycle.size(); ++i) {
        EXPECT_FALSE(a.contains(c->cycle[i]));
        EXPECT_TRUE(g.adjacent(c->cycle[i], c->cycle[(i + 1) % c->cycle.size()]));
      }
    }
  }
}

TEST(DecompositionTest, ColouringToDecomposition) {
  const Graph c5 = testing::cycle(5);
  GoodTwoColouring one_vertex(std::vector<Colour>(5, Colour::Two));
  one_vertex.set(0, Colour::One);
  const NbDecomposition d = colouring_to_decomposition(c5, one_vertex);
  EXPECT_EQ(d.size(), 1u);
  EXPECT_TRUE(d.valid());

  const Graph tree = testing::path(6);
  const NbDecomposition forest =
      colouring_to_decomposition(tree, GoodTwoColouring(std::vector<Colour>(6, Colour::Two)));
  EXPECT_TRUE(forest.a.empty());
  EXPECT_TRUE(forest.valid());

  const NbDecomposition all_one =
      colouring_to_decomposition(c5, GoodTwoColouring(std::vector<Colour>(5, Colour::One)));
  EXPECT_TRUE(std::holds_alternative<IndependenceViolation>(all_one.verdict));

  EXPECT_THROW(colouring_to_decomposition(c5, GoodTwoColouring(5)), PreconditionError);
}

TEST(DecompositionTest, GoodColouringsRoundTripToValidDecompositions) {
  std::mt19937_64 rng(4);
  int good_seen = 0;
  for (int trial = 0; trial < 5000; ++trial) {
    const Graph g = testing::from_pair_mask(7, rng() & rng() & ((1ULL << 21) - 1));
    GoodTwoColouring c(7);
    for (Vertex v = 0; v < 7; ++v) c.set(v, rng() % 2 == 0 ? Colour::One : Colour::Two);
    const bool good = c.is_good(g);
    good_seen += good ? 1 : 0;
    EXPECT_EQ(good, colouring_to_decomposition(g, c).valid());
  }
  EXPECT_GT(good_seen, 100);
}

TEST(DecompositionTest, PartialColouringChecksIgnoreUnassigned) {
  const Graph c4 = testing::cycle(4);
  GoodTwoColouring c(4);
  c.set(0, Colour::Two);
  c.set(1, Colour::Two);
  c.set(2, Colour::Two);
  EXPECT_TRUE(c.is_good(c4));
  c.set(3, Colour::Two);
  EXPECT_TRUE(c.has_two_cycle(c4));
  c.set(3, Colour::One);
  c.set(0, Colour::One);
  EXPECT_TRUE(c.has_one_edge(c4));
}

TEST(DecompositionTest, ThreeColouringOfC5UsesThreeColours) {
  const auto colours = decomposition_to_three_colouring(testing::cycle(5), VertexSet(5, {0}));
  EXPECT_TRUE(is_proper_colouring(testing::cycle(5), colours));
  EXPECT_EQ(colours, (std::vector<int>{3, 1, 2, 1, 2}));
}

TEST(DecompositionTest, ThreeColouringOfForestNeedsTwo) {
  const Graph tree = Graph::from_edge_list(6, {{0, 1}, {1, 2}, {1, 3}, {3, 4}, {0, 5}});
  const auto colours = decomposition_to_three_colouring(tree, VertexSet(6));
  EXPECT_TRUE(is_proper_colouring(tree, colours));
  EXPECT_EQ(std::count(colours.begin(), colours.end(), 3), 0);
  EXPECT_EQ(colours[0], 1);
}

TEST(DecompositionTest, ThreeColouringOfConstraintGraph) {
  const Graph j = build_constraint_graph();
  const auto colours = decomposition_to_three_colouring(j, VertexSet(8, {kX2, kX3, kY4}));
  EXPECT_TRUE(is_proper_colouring(j, colours));
  EXPECT_EQ(colours[kX2], 3);
  EXPECT_EQ(colours[kX1], 1);
}

TEST(DecompositionTest, ThreeColouringRejectsInvalidSplit) {
  EXPECT_THROW(decomposition_to_three_colouring(testing::complete(4), VertexSet(4, {0})),
               InvalidDecomposition);
}

}  // namespace
}  // namespace nearbip
