#include <gtest/gtest.h>

#include <random>
#include <set>
#include <sstream>

#include "nearbip/errors.hpp"
#include "nearbip/io.hpp"
#include "nearbip/oracle.hpp"
#include "nearbip/reduction.hpp"
#include "support/brute_force.hpp"

namespace nearbip {
namespace {

CnfFormula single_clause() { return parse_dimacs_cnf("p cnf 3 1\n1 2 3 0\n"); }

CnfFormula random_formula(std::mt19937_64& rng, int vars, std::size_t clauses) {
  CnfFormula phi{vars, {}};
  std::uniform_int_distribution<int> var(1, vars);
  std::bernoulli_distribution sign(0.5);
  for (std::size_t k = 0; k < clauses; ++k) {
    Clause c;
    std::set<int> used;
    for (Literal& lit : c) {
      int v;
      do v = var(rng);
      while (!used.insert(v).second);
      lit = {v, sign(rng)};
    }
    phi.clauses.push_back(c);
  }
  return phi;
}

TEST(DimacsTest, ParsesClauses) {
  const CnfFormula phi = parse_dimacs_cnf("c comment\np cnf 3 1\n1 3 -2 0\n");
  EXPECT_EQ(phi.variable_count, 3);
  ASSERT_EQ(phi.clauses.size(), 1u);
  EXPECT_EQ(phi.clauses[0][0], (Literal{1, true}));
  EXPECT_EQ(phi.clauses[0][1], (Literal{3, true}));
  EXPECT_EQ(phi.clauses[0][2], (Literal{2, false}));
}

TEST(DimacsTest, ClausesMaySpanLines) {
  const CnfFormula phi = parse_dimacs_cnf("p cnf 4 2\n1 2\n3 0 -1 -2\n-4 0\n");
  ASSERT_EQ(phi.clauses.size(), 2u);
  EXPECT_EQ(phi.clauses[1][2], (Literal{4, false}));
}

TEST(DimacsTest, RejectsRepeatedVariable) {
  try {
    parse_dimacs_cnf("p cnf 2 1\n1 1 2 0\n");
    FAIL() << "expected RepeatedVariableError";
  } catch (const RepeatedVariableError& e) {
    EXPECT_EQ(e.clause(), 1u);
  }
  EXPECT_THROW(parse_dimacs_cnf("p cnf 2 1\n1 -1 2 0\n"), RepeatedVariableError);
}

TEST(DimacsTest, RejectsWrongArity) {
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 0\n"), ClauseArityError);
  try {
    parse_dimacs_cnf("p cnf 4 2\n1 2 3 0\n1 2 0\n");
    FAIL() << "expected ClauseArityError";
  } catch (const ClauseArityError& e) {
    EXPECT_EQ(e.clause(), 2u);
  }
  EXPECT_THROW(parse_dimacs_cnf("p cnf 4 1\n1 2 3 4 0\n"), ClauseArityError);
}

TEST(DimacsTest, RejectsMalformedInput) {
  EXPECT_THROW(parse_dimacs_cnf("1 2 3 0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 2 1\n1 2 3 0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 2 x 0\n"), SyntaxError);
  EXPECT_THROW(parse_dimacs_cnf("p cnf 3 1\n1 2 3\n"), SyntaxError);
}

TEST(DimacsTest, FalsifiedClause) {
  const CnfFormula phi = single_clause();
  EXPECT_EQ(first_falsified_clause(phi, {false, false, false}), std::optional<std::size_t>(1));
  EXPECT_EQ(first_falsified_clause(phi, {false, true, false}), std::nullopt);
}

TEST(ConstraintGraphTest, Shape) {
  const Graph j = build_constraint_graph();
  EXPECT_EQ(j.vertex_count(), 8u);
  EXPECT_EQ(j.edge_count(), 10u);
  EXPECT_EQ(j.degree(kX1), 1u);
  EXPECT_EQ(j.degree(kX2), 2u);
  EXPECT_EQ(j.degree(kX3), 2u);
  for (Vertex y = kY4; y <= kY8; ++y) EXPECT_EQ(j.degree(y), 3u);
  EXPECT_EQ(constraint_vertex_name(kX1), "X1");
  EXPECT_EQ(constraint_vertex_name(kY8), "Y8");
}

TEST(ConstraintGraphTest, MirrorAutomorphism) {
  const std::array<Vertex, 8> sigma{kX1, kX3, kX2, kY4, kY6, kY5, kY8, kY7};
  const Graph j = build_constraint_graph();
  for (const auto& [a, b] : j.edges()) EXPECT_TRUE(j.adjacent(sigma[a], sigma[b]));
}

TEST(ConstraintGraphTest, DecompositionPerLiteralPattern) {
  const Graph j = build_constraint_graph();
  for (unsigned bits = 0; bits < 7; ++bits) {
    const VertexSet a = constraint_decomposition(std::bitset<3>(bits));
    EXPECT_TRUE(is_nb_decomposition(j, a)) << bits;
    for (Vertex p = 0; p < 3; ++p) EXPECT_EQ(a.contains(p), ((bits >> p) & 1U) != 0) << bits;
  }
  EXPECT_EQ(constraint_decomposition(std::bitset<3>("110")), VertexSet(8, {kX2, kX3, kY4}));
  EXPECT_EQ(constraint_decomposition(std::bitset<3>("101")),
            VertexSet(8, {kX1, kX3, kY5, kY8}));
  EXPECT_EQ(constraint_decomposition(std::bitset<3>("000")), VertexSet(8, {kY6, kY7}));
  EXPECT_THROW(constraint_decomposition(std::bitset<3>("111")), TooManyLiterals);
}

TEST(ConstraintGraphTest, AllThreeLiteralsUnachievable) {
  const Graph j = build_constraint_graph();
  for (const VertexSet& a : all_nb_decompositions(j))
    EXPECT_LT(a.intersection_size(VertexSet(8, {kX1, kX2, kX3})), 3u);
}

TEST(HphiTest, Counts) {
  EXPECT_EQ(hphi_vertex_count(3, 1), 137u);
  EXPECT_EQ(hphi_edge_count(3, 1), 8u * 56 + 16 * 8 + 8 + 10);
  const HphiInstance h = build_hphi(single_clause());
  EXPECT_EQ(h.graph.vertex_count(), 137u);
  EXPECT_EQ(h.graph.edge_count(), hphi_edge_count(3, 1));
  EXPECT_EQ(h.v0, 136u);
  const HphiInstance h2 = build_hphi(parse_dimacs_cnf("p cnf 4 2\n1 2 3 0\n-2 -3 4 0\n"));
  EXPECT_EQ(h2.graph.vertex_count(), hphi_vertex_count(4, 2));
  EXPECT_EQ(h2.graph.edge_count(), hphi_edge_count(4, 2));
}

TEST(HphiTest, SingleClauseStructure) {
  const HphiInstance h = build_hphi(single_clause());
  EXPECT_EQ(diameter(h.graph), std::optional<std::size_t>(3));
  EXPECT_EQ(testing::floyd_diameter(h.graph), std::optional<std::size_t>(3));
  EXPECT_FALSE(testing::has_triangle_brute(h.graph));
}

TEST(HphiTest, RowAdjacency) {
  const HphiInstance h = build_hphi(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n"));
  const std::size_t rows = h.block_rows();
  for (std::size_t k1 = 1; k1 <= 2; ++k1)
    for (std::size_t k2 = 1; k2 <= 2; ++k2)
      for (std::size_t c1 = 1; c1 <= 8; ++c1)
        for (std::size_t c2 = 1; c2 <= 8; ++c2) {
          const bool mate = k1 == k2 && c1 == c2;
          EXPECT_EQ(h.graph.adjacent(h.cell(k1, 2, c1, true), h.cell(k2, 2, c2, false)), !mate);
          EXPECT_FALSE(h.graph.adjacent(h.cell(k1, 2, c1, true), h.cell(k2, 2, c2, true)));
          EXPECT_FALSE(h.graph.adjacent(h.cell(k1, 1, c1, true), h.cell(k2, rows, c2, false)));
        }
  for (std::size_t c = 1; c <= 8; ++c) {
    const Vertex d = h.dominating(1, c);
    EXPECT_TRUE(h.graph.adjacent(d, h.v0));
    EXPECT_TRUE(h.graph.adjacent(d, h.cell(1, rows, c, true)));
    EXPECT_TRUE(h.graph.adjacent(d, h.cell(1, 1, c, false)));
    EXPECT_FALSE(h.graph.adjacent(d, h.cell(2, 1, c, false)));
  }
}

TEST(HphiTest, GadgetPlacement) {
  const CnfFormula phi = parse_dimacs_cnf("p cnf 3 1\n1 -3 2 0\n");
  const HphiInstance h = build_hphi(phi);
  const auto& gad = h.gadget[0];
  EXPECT_EQ(gad[0], h.cell(1, 1, 1, true));
  EXPECT_EQ(gad[1], h.cell(1, 3, 2, false));
  EXPECT_EQ(gad[2], h.cell(1, 2, 3, true));
  for (std::size_t p = 4; p <= 8; ++p) EXPECT_EQ(gad[p - 1], h.cell(1, 3 + p - 3, p, true));
  const auto sub = induced_subgraph(h.graph, VertexSet::of(h.graph.vertex_count(), gad));
  std::vector<Vertex> pos(h.graph.vertex_count());
  for (std::size_t i = 0; i < 8; ++i) pos[gad[i]] = static_cast<Vertex>(i);
  std::vector<Edge> mapped;
  for (const auto& [a, b] : sub.graph.edges()) {
    Vertex x = pos[sub.original[a]], y = pos[sub.original[b]];
    mapped.emplace_back(std::min(x, y), std::max(x, y));
  }
  EXPECT_EQ(Graph::from_edge_list(8, mapped), build_constraint_graph());
}

TEST(HphiTest, CoordinatesRoundTrip) {
  const HphiInstance h = build_hphi(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n-1 2 -3 0\n"));
  for (Vertex v = 0; v < h.graph.vertex_count(); ++v) {
    const Coordinate& c = h.coord_of[v];
    switch (c.kind) {
      case Coordinate::Kind::Cell:
        EXPECT_EQ(h.cell(c.clause, c.row, c.column, c.is_true), v);
        break;
      case Coordinate::Kind::Dominating:
        EXPECT_EQ(h.dominating(c.clause, c.column), v);
        break;
      case Coordinate::Kind::Root:
        EXPECT_EQ(h.v0, v);
        break;
    }
  }
}

TEST(HphiTest, CertifiesAndDetectsMutations) {
  const HphiInstance h = build_hphi(single_clause());
  const CertificateReport ok = certify_hphi(h);
  EXPECT_TRUE(ok.all_passed());
  for (const char* name : {"vertex-count", "edge-count", "diameter", "triangle-free",
                           "row-structure", "dominating-block", "column-gadget-unique",
                           "induced-constraint-graph"}) {
    ASSERT_NE(ok.find(name), nullptr) << name;
    EXPECT_TRUE(ok.find(name)->passed) << name;
  }

  HphiInstance cut = h;
  std::vector<Edge> edges = h.graph.edges();
  const Edge gadget_edge{std::min(h.gadget[0][kY4], h.gadget[0][kY5]),
                         std::max(h.gadget[0][kY4], h.gadget[0][kY5])};
  std::erase(edges, gadget_edge);
  cut.graph = Graph::from_edge_list(h.graph.vertex_count(), edges);
  const CertificateReport broken = certify_hphi(cut);
  EXPECT_FALSE(broken.all_passed());
  EXPECT_FALSE(broken.find("induced-constraint-graph")->passed);

  HphiInstance rootless = h;
  edges = h.graph.edges();
  std::erase_if(edges, [&](const Edge& e) { return e.second == h.v0; });
  rootless.graph = Graph::from_edge_list(h.graph.vertex_count(), edges);
  EXPECT_FALSE(certify_hphi(rootless).find("diameter")->passed);
}

TEST(HphiTest, DeterministicSerialization) {
  const CnfFormula phi = parse_dimacs_cnf("p cnf 4 2\n1 2 3 0\n-2 -3 4 0\n");
  const HphiInstance a = build_hphi(phi);
  const HphiInstance b = build_hphi(phi);
  EXPECT_EQ(serialize_edge_list(a.graph), serialize_edge_list(b.graph));
  EXPECT_EQ(serialize_coordinate_map(a), serialize_coordinate_map(b));
}

// Only the third literal, not x2, is false under the all-true assignment.
TEST(EmbeddingTest, AllTrueSingleClause) {
  const HphiInstance h = build_hphi(parse_dimacs_cnf("p cnf 3 1\n1 3 -2 0\n"));
  const NbDecomposition d = assignment_to_decomposition(h, {true, true, true});
  EXPECT_TRUE(d.valid()) << describe(d.verdict);
  EXPECT_TRUE(is_nb_decomposition(h.graph, d.a));
  VertexSet literals(h.graph.vertex_count(), {h.gadget[0][0], h.gadget[0][1], h.gadget[0][2]});
  EXPECT_EQ(d.a & literals, VertexSet(h.graph.vertex_count(), {h.gadget[0][2]}));
}

TEST(EmbeddingTest, RejectsUnsatisfyingAssignment) {
  const HphiInstance h =
      build_hphi(parse_dimacs_cnf("p cnf 3 2\n1 2 3 0\n1 -2 3 0\n"));
  try {
    assignment_to_decomposition(h, {false, true, false});
    FAIL() << "expected UnsatisfiedClause";
  } catch (const UnsatisfiedClause& e) {
    EXPECT_EQ(e.clause(), 2u);
  }
  try {
    assignment_to_decomposition(build_hphi(single_clause()), {false, false, false});
    FAIL() << "expected UnsatisfiedClause";
  } catch (const UnsatisfiedClause& e) {
    EXPECT_EQ(e.clause(), 1u);
  }
  EXPECT_THROW(assignment_to_decomposition(h, {true}), PreconditionError);
}

TEST(EmbeddingTest, RandomSatisfiableFormulas) {
  std::mt19937_64 rng(7);
  int embedded = 0;
  while (embedded < 25) {
    const CnfFormula phi = random_formula(rng, 3 + static_cast<int>(rng() % 3), 1 + rng() % 3);
    const auto value = testing::brute_satisfy(phi);
    if (!value) continue;
    const HphiInstance h = build_hphi(phi);
    const NbDecomposition d = assignment_to_decomposition(h, *value);
    ASSERT_TRUE(d.valid()) << describe(d.verdict);
    ++embedded;
  }
}

}  // namespace
}  // namespace nearbip
