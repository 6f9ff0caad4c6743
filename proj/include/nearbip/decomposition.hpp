#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "nearbip/graph.hpp"
#include "nearbip/vertex_set.hpp"

namespace nearbip {

struct Valid {
  friend bool operator==(const Valid&, const Valid&) = default;
};

/// An edge with both endpoints in A.
struct IndependenceViolation {
  Edge edge;
  friend bool operator==(const IndependenceViolation&, const IndependenceViolation&) = default;
};

/// A cycle whose vertices all lie in B = V \ A.
struct CycleInB {
  std::vector<Vertex> cycle;
  friend bool operator==(const CycleInB&, const CycleInB&) = default;
};

using Verdict = std::variant<Valid, IndependenceViolation, CycleInB>;

inline bool is_valid(const Verdict& v) { return std::holds_alternative<Valid>(v); }
std::string describe(const Verdict& v);

/// Checks that `a` is independent and V \ a induces a forest. Independence
/// is checked first; the witness edge is the lexicographically smallest one.
Verdict validate_decomposition(const Graph& g, const VertexSet& a);

/// Same decision as validate_decomposition without building a witness.
bool is_nb_decomposition(const Graph& g, const VertexSet& a);

/// Candidate split (A, B = V \ A) together with its verdict.
struct NbDecomposition {
  VertexSet a;
  Verdict verdict;

  VertexSet b() const { return a.complement(); }
  bool valid() const { return is_valid(verdict); }
  std::size_t size() const { return a.size(); }
};

NbDecomposition make_decomposition(const Graph& g, VertexSet a);

enum class Colour : std::uint8_t { Unassigned = 0, One = 1, Two = 2 };

/// Not necessarily proper 2-colouring. Good means: colour-1 class
/// independent, colour-2 class induces a forest. Unassigned vertices are
/// ignored by the checks, so a partial colouring is good when no 1-edge or
/// 2-cycle has appeared yet.
class GoodTwoColouring {
 public:
  explicit GoodTwoColouring(std::size_t n) : colour_(n, Colour::Unassigned) {}
  explicit GoodTwoColouring(std::vector<Colour> colours) : colour_(std::move(colours)) {}

  std::size_t vertex_count() const { return colour_.size(); }
  Colour operator[](Vertex v) const { return colour_[v]; }
  void set(Vertex v, Colour c) { colour_[v] = c; }
  void set_all(const VertexSet& s, Colour c) {
    s.for_each([&](Vertex v) { colour_[v] = c; });
  }

  bool is_total() const;
  VertexSet class_of(Colour c) const;
  /// Colour-1 class.
  VertexSet one_set() const { return class_of(Colour::One); }

  bool has_one_edge(const Graph& g) const;
  bool has_two_cycle(const Graph& g) const;
  bool is_good(const Graph& g) const { return !has_one_edge(g) && !has_two_cycle(g); }

 private:
  std::vector<Colour> colour_;
};

/// A = colour-1 class. Throws PreconditionError unless `c` is total.
NbDecomposition colouring_to_decomposition(const Graph& g, const GoodTwoColouring& c);

/// Proper colouring with values in {1, 2, 3}: A gets 3, each tree of the
/// forest on B is 2-coloured with its smallest vertex coloured 1.
/// Throws InvalidDecomposition unless (a, V \ a) validates.
std::vector<int> decomposition_to_three_colouring(const Graph& g, const VertexSet& a);

/// True iff no edge joins two vertices of equal colour.
bool is_proper_colouring(const Graph& g, const std::vector<int>& colours);

}  // namespace nearbip
