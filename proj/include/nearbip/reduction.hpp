#pragma once

#include <array>
#include <bitset>
#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nearbip/decomposition.hpp"
#include "nearbip/graph.hpp"

namespace nearbip {

struct Literal {
  int variable = 0;  // 1-based
  bool positive = true;
  friend bool operator==(const Literal&, const Literal&) = default;
};

using Clause = std::array<Literal, 3>;

struct CnfFormula {
  int variable_count = 0;
  std::vector<Clause> clauses;
  friend bool operator==(const CnfFormula&, const CnfFormula&) = default;
};

/// Throws ClauseArityError for an empty formula, RepeatedVariableError, or
/// OutOfRangeError for a variable outside [1, variable_count].
void validate_formula(const CnfFormula& phi);

/// DIMACS CNF with a "p cnf <vars> <clauses>" header; clauses may span lines.
/// Every clause must have three literals over distinct variables.
CnfFormula parse_dimacs_cnf(std::istream& in);
CnfFormula parse_dimacs_cnf(std::string_view text);

/// value[i - 1] is the truth value of variable i.
using Assignment = std::vector<bool>;

bool literal_true(const Literal& lit, const Assignment& value);
/// 1-based index of the first clause with every literal false.
std::optional<std::size_t> first_falsified_clause(const CnfFormula& phi, const Assignment& value);

// ---------------------------------------------------------------------------
// Constraint graph J

/// Vertex ids of J: X1, X2, X3, Y4, ..., Y8 in that order.
enum JVertex : Vertex { kX1 = 0, kX2, kX3, kY4, kY5, kY6, kY7, kY8 };
inline constexpr std::size_t kConstraintVertexCount = 8;
inline constexpr std::array<Edge, 10> kConstraintEdges{{
    {kX1, kY4}, {kX2, kY5}, {kX2, kY8}, {kX3, kY6}, {kX3, kY7},
    {kY4, kY5}, {kY4, kY6}, {kY5, kY7}, {kY6, kY8}, {kY7, kY8},
}};

std::string_view constraint_vertex_name(Vertex v);
Graph build_constraint_graph();

/// Independent set A of J with A ∩ {X1, X2, X3} equal to the literal
/// vertices flagged in `in_a` (bit p-1 for X_p) and J - A a forest.
/// Throws TooManyLiterals when all three bits are set.
VertexSet constraint_decomposition(std::bitset<3> in_a);

// ---------------------------------------------------------------------------
// Hardness construction

/// Position of an H_phi vertex. clause, row and column are 1-based; rows
/// 1..n are the variable block, n+1..n+5m the clause blocks and n+5m+1 the
/// dominating row.
struct Coordinate {
  enum class Kind { Cell, Dominating, Root };
  Kind kind = Kind::Cell;
  std::size_t clause = 0;
  std::size_t row = 0;
  std::size_t column = 0;
  bool is_true = false;
  friend bool operator==(const Coordinate&, const Coordinate&) = default;
};

/// Vertex ids run clause-major, then row, then column, true before false;
/// each clause graph's dominating row follows its block rows and v_0 is last.
struct HphiInstance {
  CnfFormula formula;
  Graph graph;
  std::vector<Coordinate> coord_of;
  /// Per clause: X_1^k, X_2^k, X_3^k, Y_4^k, ..., Y_8^k.
  std::vector<std::array<Vertex, 8>> gadget;
  Vertex v0 = 0;

  std::size_t block_rows() const;
  std::size_t columns() const { return 8 * formula.clauses.size(); }
  Vertex cell(std::size_t clause, std::size_t row, std::size_t column, bool is_true) const;
  Vertex dominating(std::size_t clause, std::size_t column) const;
};

std::size_t hphi_vertex_count(std::size_t variables, std::size_t clauses);
std::size_t hphi_edge_count(std::size_t variables, std::size_t clauses);

HphiInstance build_hphi(const CnfFormula& phi);

struct CertificateCheck {
  std::string name;
  bool passed = false;
  std::string detail;
};

struct CertificateReport {
  std::vector<CertificateCheck> checks;
  bool all_passed() const;
  const CertificateCheck* find(std::string_view name) const;
};

/// Structural audit: vertex and edge counts, diameter 3, triangle-freeness,
/// row and dominating-block adjacency, one gadget vertex per column, and the
/// induced copy of J in every clause graph.
CertificateReport certify_hphi(const HphiInstance& h);

/// Decomposition of H_phi built from a satisfying assignment. Throws
/// UnsatisfiedClause (1-based) or PreconditionError on a wrong-sized
/// assignment.
NbDecomposition assignment_to_decomposition(const HphiInstance& h, const Assignment& value);

}  // namespace nearbip
