#include "nearbip/decomposition.hpp"

#include <algorithm>
#include <sstream>

#include "nearbip/errors.hpp"

namespace nearbip {

std::string describe(const Verdict& v) {
  std::ostringstream out;
  if (std::holds_alternative<Valid>(v)) {
    out << "VALID";
  } else if (const auto* e = std::get_if<IndependenceViolation>(&v)) {
    out << "INDEPENDENCE VIOLATION: edge " << e->edge.first << " " << e->edge.second;
  } else {
    out << "CYCLE IN B:";
    for (Vertex x : std::get<CycleInB>(v).cycle) out << ' ' << x;
  }
  return out.str();
}

Verdict validate_decomposition(const Graph& g, const VertexSet& a) {
  for (Vertex u = a.first(); u < g.vertex_count(); u = a.next(u)) {
    const VertexSet& row = g.neighbour_set(u);
    for (Vertex v = row.next(u); v < g.vertex_count(); v = row.next(v))
      if (a.contains(v)) return IndependenceViolation{{u, v}};
  }
  const VertexSet b = a.complement();
  if (is_forest(g, b)) return Valid{};
  return CycleInB{*find_cycle(g, b)};
}

bool is_nb_decomposition(const Graph& g, const VertexSet& a) {
  for (Vertex u = a.first(); u < g.vertex_count(); u = a.next(u))
    if (g.neighbour_set(u).intersects(a)) return false;
  return is_forest(g, a.complement());
}

NbDecomposition make_decomposition(const Graph& g, VertexSet a) {
  Verdict verdict = validate_decomposition(g, a);
  return NbDecomposition{std::move(a), std::move(verdict)};
}

bool GoodTwoColouring::is_total() const {
  return std::none_of(colour_.begin(), colour_.end(),
                      [](Colour c) { return c == Colour::Unassigned; });
}

VertexSet GoodTwoColouring::class_of(Colour c) const {
  VertexSet s(colour_.size());
  for (Vertex v = 0; v < colour_.size(); ++v)
    if (colour_[v] == c) s.insert(v);
  return s;
}

bool GoodTwoColouring::has_one_edge(const Graph& g) const {
  const VertexSet ones = one_set();
  for (Vertex v = ones.first(); v < g.vertex_count(); v = ones.next(v))
    if (g.neighbour_set(v).intersects(ones)) return true;
  return false;
}

bool GoodTwoColouring::has_two_cycle(const Graph& g) const {
  return !is_forest(g, class_of(Colour::Two));
}

NbDecomposition colouring_to_decomposition(const Graph& g, const GoodTwoColouring& c) {
  if (c.vertex_count() != g.vertex_count() || !c.is_total())
    throw PreconditionError("colouring must be total on the graph's vertices");
  return make_decomposition(g, c.one_set());
}

std::vector<int> decomposition_to_three_colouring(const Graph& g, const VertexSet& a) {
  const Verdict verdict = validate_decomposition(g, a);
  if (!is_valid(verdict)) throw InvalidDecomposition(describe(verdict));
  std::vector<int> colours(g.vertex_count(), 0);
  a.for_each([&](Vertex v) { colours[v] = 3; });
  // components() roots every tree at its smallest vertex.
  const VertexSet b = a.complement();
  std::vector<Vertex> stack;
  for (const auto& tree : components(g, b)) {
    colours[tree.front()] = 1;
    stack.push_back(tree.front());
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      for (Vertex w : g.neighbours(v)) {
        if (!b.contains(w) || colours[w] != 0) continue;
        colours[w] = 3 - colours[v];
        stack.push_back(w);
      }
    }
  }
  return colours;
}

bool is_proper_colouring(const Graph& g, const std::vector<int>& colours) {
  if (colours.size() != g.vertex_count()) return false;
  for (const auto& [u, v] : g.edges())
    if (colours[u] == colours[v]) return false;
  return true;
}

}  // namespace nearbip
