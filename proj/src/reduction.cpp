#include "nearbip/reduction.hpp"

#include <istream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "nearbip/errors.hpp"

namespace nearbip {

// ---------------------------------------------------------------------------
// CNF

void validate_formula(const CnfFormula& phi) {
  if (phi.clauses.empty()) throw ClauseArityError("formula has no clauses");
  for (std::size_t k = 0; k < phi.clauses.size(); ++k) {
    const Clause& c = phi.clauses[k];
    for (std::size_t p = 0; p < 3; ++p) {
      const int var = c[p].variable;
      if (var < 1 || var > phi.variable_count)
        throw OutOfRangeError(static_cast<std::size_t>(var < 0 ? -var : var),
                              static_cast<std::size_t>(phi.variable_count) + 1);
      for (std::size_t q = 0; q < p; ++q)
        if (c[q].variable == var) throw RepeatedVariableError(k + 1, var);
    }
  }
}

namespace {

long parse_int(const std::string& token, std::size_t line) {
  std::size_t used = 0;
  long value = 0;
  try {
    value = std::stol(token, &used);
  } catch (const std::exception&) {
    throw SyntaxError(line, "expected an integer, got '" + token + "'");
  }
  if (used != token.size()) throw SyntaxError(line, "expected an integer, got '" + token + "'");
  return value;
}

}  // namespace

CnfFormula parse_dimacs_cnf(std::istream& in) {
  CnfFormula phi;
  std::optional<std::size_t> declared_clauses;
  std::vector<Literal> pending;
  std::size_t line_no = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    std::istringstream tokens(line);
    std::string token;
    if (!(tokens >> token)) continue;
    if (token == "c") continue;
    if (token == "%") break;
    if (token == "p") {
      if (declared_clauses) throw SyntaxError(line_no, "duplicate problem line");
      std::string format, vars, clauses, extra;
      if (!(tokens >> format >> vars >> clauses) || format != "cnf" || (tokens >> extra))
        throw SyntaxError(line_no, "expected 'p cnf <variables> <clauses>'");
      const long v = parse_int(vars, line_no);
      const long m = parse_int(clauses, line_no);
      if (v < 0 || m < 0) throw SyntaxError(line_no, "negative count in problem line");
      phi.variable_count = static_cast<int>(v);
      declared_clauses = static_cast<std::size_t>(m);
      continue;
    }
    if (!declared_clauses) throw SyntaxError(line_no, "clause before 'p cnf' line");
    do {
      const long lit = parse_int(token, line_no);
      if (lit == 0) {
        const std::size_t index = phi.clauses.size() + 1;
        if (pending.size() != 3) throw ClauseArityError(index, pending.size());
        Clause c{pending[0], pending[1], pending[2]};
        for (std::size_t p = 0; p < 3; ++p)
          for (std::size_t q = 0; q < p; ++q)
            if (c[p].variable == c[q].variable) throw RepeatedVariableError(index, c[p].variable);
        phi.clauses.push_back(c);
        pending.clear();
        continue;
      }
      const long var = lit < 0 ? -lit : lit;
      if (var > phi.variable_count)
        throw SyntaxError(line_no, "variable " + std::to_string(var) + " exceeds declared count");
      pending.push_back(Literal{static_cast<int>(var), lit > 0});
    } while (tokens >> token);
  }
  if (!declared_clauses) throw SyntaxError(line_no, "missing 'p cnf' line");
  if (!pending.empty()) throw SyntaxError(line_no, "unterminated clause");
  if (phi.clauses.size() != *declared_clauses)
    throw SyntaxError(line_no, "header declares " + std::to_string(*declared_clauses) +
                                   " clauses, found " + std::to_string(phi.clauses.size()));
  if (phi.clauses.empty()) throw ClauseArityError("formula has no clauses");
  return phi;
}

CnfFormula parse_dimacs_cnf(std::string_view text) {
  std::istringstream in{std::string(text)};
  return parse_dimacs_cnf(in);
}

bool literal_true(const Literal& lit, const Assignment& value) {
  return value[static_cast<std::size_t>(lit.variable - 1)] == lit.positive;
}

std::optional<std::size_t> first_falsified_clause(const CnfFormula& phi, const Assignment& value) {
  for (std::size_t k = 0; k < phi.clauses.size(); ++k) {
    const Clause& c = phi.clauses[k];
    if (!literal_true(c[0], value) && !literal_true(c[1], value) && !literal_true(c[2], value))
      return k + 1;
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Constraint graph

std::string_view constraint_vertex_name(Vertex v) {
  static constexpr std::array<std::string_view, 8> kNames{"X1", "X2", "X3", "Y4",
                                                          "Y5", "Y6", "Y7", "Y8"};
  return kNames.at(v);
}

Graph build_constraint_graph() {
  return Graph::from_edge_list(kConstraintVertexCount, kConstraintEdges);
}

VertexSet constraint_decomposition(std::bitset<3> in_a) {
  if (in_a.all()) throw TooManyLiterals();
  // X2 <-> X3, Y5 <-> Y6, Y7 <-> Y8 is an automorphism of J, so the cases
  // with X3 but not X2 are mirror images of those with X2 but not X3.
  static constexpr std::array<Vertex, 8> kMirror{kX1, kX3, kX2, kY4, kY6, kY5, kY8, kY7};
  const bool mirrored = in_a[2] && !in_a[1];
  if (mirrored) {
    in_a[1] = true;
    in_a[2] = false;
  }
  VertexSet a(kConstraintVertexCount);
  if (in_a[1] && in_a[2]) {
    a = VertexSet(kConstraintVertexCount, {kX2, kX3, kY4});
  } else {
    a = VertexSet(kConstraintVertexCount, {kY6, kY7});
    if (in_a[0]) a.insert(kX1);
    if (in_a[1]) a.insert(kX2);
  }
  if (mirrored) {
    VertexSet image(kConstraintVertexCount);
    a.for_each([&](Vertex v) { image.insert(kMirror[v]); });
    a = image;
  }
  static const Graph kJ = build_constraint_graph();
  if (!is_nb_decomposition(kJ, a))
    throw std::logic_error("constraint decomposition table produced an invalid split");
  return a;
}

// ---------------------------------------------------------------------------
// H_phi

std::size_t HphiInstance::block_rows() const {
  return static_cast<std::size_t>(formula.variable_count) + 5 * formula.clauses.size();
}

Vertex HphiInstance::cell(std::size_t clause, std::size_t row, std::size_t column,
                          bool is_true) const {
  const std::size_t base = (clause - 1) * (16 * block_rows() + 8);
  return static_cast<Vertex>(base + ((row - 1) * 8 + (column - 1)) * 2 + (is_true ? 0 : 1));
}

Vertex HphiInstance::dominating(std::size_t clause, std::size_t column) const {
  const std::size_t base = (clause - 1) * (16 * block_rows() + 8);
  return static_cast<Vertex>(base + 16 * block_rows() + (column - 1));
}

std::size_t hphi_vertex_count(std::size_t variables, std::size_t clauses) {
  return 16 * clauses * (variables + 5 * clauses) + 8 * clauses + 1;
}

std::size_t hphi_edge_count(std::size_t variables, std::size_t clauses) {
  const std::size_t rows = variables + 5 * clauses;
  const std::size_t cols = 8 * clauses;
  return rows * cols * (cols - 1)  // true-false pairs in a row, mates excluded
         + cols * 2 * rows         // dominating vertex to its column
         + cols                    // v_0
         + kConstraintEdges.size() * clauses;
}

HphiInstance build_hphi(const CnfFormula& phi) {
  validate_formula(phi);
  HphiInstance h;
  h.formula = phi;
  const std::size_t m = phi.clauses.size();
  const std::size_t n = static_cast<std::size_t>(phi.variable_count);
  const std::size_t rows = h.block_rows();
  const std::size_t total = hphi_vertex_count(n, m);
  h.v0 = static_cast<Vertex>(total - 1);

  h.coord_of.resize(total);
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t r = 1; r <= rows; ++r)
      for (std::size_t c = 1; c <= 8; ++c)
        for (bool t : {true, false})
          h.coord_of[h.cell(k, r, c, t)] = Coordinate{Coordinate::Kind::Cell, k, r, c, t};
    for (std::size_t c = 1; c <= 8; ++c)
      h.coord_of[h.dominating(k, c)] = Coordinate{Coordinate::Kind::Dominating, k, rows + 1, c, false};
  }
  h.coord_of[h.v0] = Coordinate{Coordinate::Kind::Root, 0, 0, 0, false};

  std::vector<Edge> edges;
  edges.reserve(hphi_edge_count(n, m));
  for (std::size_t r = 1; r <= rows; ++r)
    for (std::size_t k = 1; k <= m; ++k)
      for (std::size_t c = 1; c <= 8; ++c)
        for (std::size_t k2 = 1; k2 <= m; ++k2)
          for (std::size_t c2 = 1; c2 <= 8; ++c2)
            if (k != k2 || c != c2) edges.emplace_back(h.cell(k, r, c, true), h.cell(k2, r, c2, false));
  for (std::size_t k = 1; k <= m; ++k) {
    for (std::size_t c = 1; c <= 8; ++c) {
      const Vertex d = h.dominating(k, c);
      for (std::size_t r = 1; r <= rows; ++r)
        for (bool t : {true, false}) edges.emplace_back(d, h.cell(k, r, c, t));
      edges.emplace_back(h.v0, d);
    }
  }
  for (std::size_t k = 1; k <= m; ++k) {
    std::array<Vertex, 8> g{};
    const Clause& clause = phi.clauses[k - 1];
    for (std::size_t p = 1; p <= 3; ++p) {
      const Literal& lit = clause[p - 1];
      g[p - 1] = h.cell(k, static_cast<std::size_t>(lit.variable), p, lit.positive);
    }
    for (std::size_t p = 4; p <= 8; ++p) g[p - 1] = h.cell(k, n + 5 * (k - 1) + (p - 3), p, true);
    for (const auto& [a, b] : kConstraintEdges) edges.emplace_back(g[a], g[b]);
    h.gadget.push_back(g);
  }
  h.graph = Graph::from_edge_list(total, edges);
  return h;
}

bool CertificateReport::all_passed() const {
  for (const auto& c : checks)
    if (!c.passed) return false;
  return !checks.empty();
}

const CertificateCheck* CertificateReport::find(std::string_view name) const {
  for (const auto& c : checks)
    if (c.name == name) return &c;
  return nullptr;
}

namespace {

bool triangle_free(const Graph& g, std::string& detail) {
  for (const auto& [u, v] : g.edges()) {
    const VertexSet common = g.neighbour_set(u) & g.neighbour_set(v);
    if (!common.empty()) {
      detail = "triangle " + std::to_string(u) + " " + std::to_string(v) + " " +
               std::to_string(common.first());
      return false;
    }
  }
  return true;
}

}  // namespace

CertificateReport certify_hphi(const HphiInstance& h) {
  CertificateReport report;
  auto add = [&](std::string name, bool passed, std::string detail) {
    report.checks.push_back({std::move(name), passed, std::move(detail)});
  };
  const Graph& g = h.graph;
  const std::size_t n_vars = static_cast<std::size_t>(h.formula.variable_count);
  const std::size_t m = h.formula.clauses.size();
  const std::size_t rows = h.block_rows();
  const std::size_t nv = g.vertex_count();
  auto in_range = [&](Vertex v) { return v < nv && v < h.coord_of.size(); };

  const std::size_t want_vertices = hphi_vertex_count(n_vars, m);
  add("vertex-count", nv == want_vertices,
      std::to_string(nv) + " vertices, expected " + std::to_string(want_vertices));
  const std::size_t want_edges = hphi_edge_count(n_vars, m);
  add("edge-count", g.edge_count() == want_edges,
      std::to_string(g.edge_count()) + " edges, expected " + std::to_string(want_edges));

  const auto d = diameter(g);
  add("diameter", d && *d == 3,
      "diameter " + (d ? std::to_string(*d) : std::string("infinite")) + ", expected 3");

  std::string detail;
  const bool no_triangles = triangle_free(g, detail);
  add("triangle-free", no_triangles, no_triangles ? "no triangles" : detail);

  // Rows: each true cell sees exactly the 8m - 1 non-mate false cells of
  // its row and nothing else in that row.
  bool rows_ok = nv == want_vertices;
  detail = "every true vertex adjacent to all non-mate false vertices of its row";
  for (std::size_t k = 1; rows_ok && k <= m; ++k) {
    for (std::size_t r = 1; rows_ok && r <= rows; ++r) {
      for (std::size_t c = 1; rows_ok && c <= 8; ++c) {
        const Vertex t = h.cell(k, r, c, true);
        VertexSet row_false(nv);
        for (std::size_t k2 = 1; k2 <= m; ++k2)
          for (std::size_t c2 = 1; c2 <= 8; ++c2)
            if (k2 != k || c2 != c) row_false.insert(h.cell(k2, r, c2, false));
        const std::size_t seen = g.neighbour_set(t).intersection_size(row_false);
        if (seen != 8 * m - 1 || g.adjacent(t, h.cell(k, r, c, false))) {
          rows_ok = false;
          detail = "true vertex " + std::to_string(t) + " has " + std::to_string(seen) +
                   " false neighbours in its row";
        }
      }
    }
  }
  add("row-structure", rows_ok, detail);

  bool dominating_ok = nv == want_vertices;
  detail = "every dominating vertex adjacent to exactly its column and v0";
  for (std::size_t k = 1; dominating_ok && k <= m; ++k) {
    for (std::size_t c = 1; dominating_ok && c <= 8; ++c) {
      const Vertex dv = h.dominating(k, c);
      VertexSet expect(nv);
      for (std::size_t r = 1; r <= rows; ++r)
        for (bool t : {true, false}) expect.insert(h.cell(k, r, c, t));
      expect.insert(h.v0);
      if (g.neighbour_set(dv) != expect) {
        dominating_ok = false;
        detail = "dominating vertex " + std::to_string(dv) + " has the wrong neighbourhood";
      }
    }
  }
  add("dominating-block", dominating_ok, detail);

  bool columns_ok = h.gadget.size() == m;
  detail = "each of the " + std::to_string(8 * m) + " columns holds one gadget vertex";
  std::vector<std::size_t> per_column(8 * m, 0);
  for (const auto& tuple : h.gadget) {
    for (Vertex v : tuple) {
      if (!in_range(v) || h.coord_of[v].kind != Coordinate::Kind::Cell) {
        columns_ok = false;
        detail = "gadget vertex " + std::to_string(v) + " is not a block cell";
        continue;
      }
      const Coordinate& at = h.coord_of[v];
      ++per_column[(at.clause - 1) * 8 + (at.column - 1)];
    }
  }
  for (std::size_t col = 0; columns_ok && col < per_column.size(); ++col) {
    if (per_column[col] != 1) {
      columns_ok = false;
      detail = "column " + std::to_string(col + 1) + " holds " +
               std::to_string(per_column[col]) + " gadget vertices";
    }
  }
  add("column-gadget-unique", columns_ok, detail);

  bool j_ok = h.gadget.size() == m;
  detail = "every clause graph induces J on its gadget vertices";
  const Graph j = build_constraint_graph();
  for (std::size_t k = 0; j_ok && k < h.gadget.size(); ++k) {
    const auto& tuple = h.gadget[k];
    for (Vertex a = 0; j_ok && a < 8; ++a) {
      for (Vertex b = a + 1; j_ok && b < 8; ++b) {
        const bool present = in_range(tuple[a]) && in_range(tuple[b]) &&
                             g.adjacent(tuple[a], tuple[b]);
        if (present != j.adjacent(a, b)) {
          j_ok = false;
          detail = "clause " + std::to_string(k + 1) + ": pair " +
                   std::string(constraint_vertex_name(a)) + " " +
                   std::string(constraint_vertex_name(b)) +
                   (present ? " adjacent but not in J" : " missing from H_phi");
        }
      }
    }
  }
  add("induced-constraint-graph", j_ok, detail);
  return report;
}

NbDecomposition assignment_to_decomposition(const HphiInstance& h, const Assignment& value) {
  const std::size_t n = static_cast<std::size_t>(h.formula.variable_count);
  const std::size_t m = h.formula.clauses.size();
  if (value.size() != n)
    throw PreconditionError("assignment has " + std::to_string(value.size()) +
                            " values, formula has " + std::to_string(n) + " variables");
  if (auto k = first_falsified_clause(h.formula, value)) throw UnsatisfiedClause(*k);

  VertexSet a(h.graph.vertex_count());
  a.insert(h.v0);
  // Puts the true vertices of a whole row on one side and their mates on
  // the other.
  auto place_row = [&](std::size_t row, bool true_cells_in_a) {
    for (std::size_t k = 1; k <= m; ++k)
      for (std::size_t c = 1; c <= 8; ++c) a.insert(h.cell(k, row, c, true_cells_in_a));
  };
  for (std::size_t i = 1; i <= n; ++i) place_row(i, !value[i - 1]);
  for (std::size_t k = 1; k <= m; ++k) {
    const Clause& clause = h.formula.clauses[k - 1];
    std::bitset<3> false_literals;
    for (std::size_t p = 0; p < 3; ++p) false_literals[p] = !literal_true(clause[p], value);
    const VertexSet in_j = constraint_decomposition(false_literals);
    for (std::size_t p = 4; p <= 8; ++p)
      place_row(n + 5 * (k - 1) + (p - 3), in_j.contains(static_cast<Vertex>(p - 1)));
  }
  return make_decomposition(h.graph, std::move(a));
}

}  // namespace nearbip
