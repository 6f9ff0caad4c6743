#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "nearbip/vertex_set.hpp"

namespace nearbip {

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on vertices 0..n-1.
///
/// Adjacency is kept twice: sorted neighbour lists for traversal and one
/// bitmask row per vertex for constant-time membership and popcount queries.
class Graph {
 public:
  Graph() = default;

  /// Throws SelfLoopError or OutOfRangeError. Duplicate pairs, in either
  /// orientation, collapse to one edge.
  static Graph from_edge_list(std::size_t n, std::span<const Edge> pairs);
  static Graph from_edge_list(std::size_t n, std::initializer_list<Edge> pairs) {
    return from_edge_list(n, std::span<const Edge>(pairs.begin(), pairs.size()));
  }

  std::size_t vertex_count() const { return lists_.size(); }
  std::size_t edge_count() const { return edge_count_; }

  std::span<const Vertex> neighbours(Vertex v) const { return lists_[v]; }
  const VertexSet& neighbour_set(Vertex v) const { return rows_[v]; }
  std::size_t degree(Vertex v) const { return lists_[v].size(); }
  bool adjacent(Vertex u, Vertex v) const { return rows_[u].contains(v); }

  /// Edges as (u, v) with u < v in lexicographic order.
  std::vector<Edge> edges() const;

  VertexSet all_vertices() const { return VertexSet::full(vertex_count()); }
  VertexSet empty_set() const { return VertexSet(vertex_count()); }

  friend bool operator==(const Graph& a, const Graph& b) { return a.lists_ == b.lists_; }

 private:
  std::vector<std::vector<Vertex>> lists_;
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Breadth-first distances from `source`; unreachable vertices are empty.
std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source);

bool is_connected(const Graph& g);

/// Maximum distance over all vertex pairs. Empty means infinite
/// (disconnected); graphs with n <= 1 have diameter 0.
std::optional<std::size_t> diameter(const Graph& g);

struct Bipartition {
  VertexSet first;
  VertexSet second;
};

/// Proper 2-colouring witness of the subgraph induced by `within`, or empty
/// if that subgraph has an odd cycle. In every component the smallest vertex
/// lands in `first`; isolated vertices are therefore all in `first`.
std::optional<Bipartition> bipartition(const Graph& g, const VertexSet& within);
std::optional<Bipartition> is_bipartite(const Graph& g);

/// Connected components of the subgraph induced by `within`, each listed in
/// increasing vertex order, ordered by smallest vertex.
std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& within);

bool is_forest(const Graph& g, const VertexSet& within);
bool is_forest(const Graph& g);

/// Some cycle of the subgraph induced by `within`, as a vertex sequence
/// v0 v1 ... vk with consecutive vertices (and vk, v0) adjacent.
std::optional<std::vector<Vertex>> find_cycle(const Graph& g, const VertexSet& within);

/// Vertices outside `x` with at least two neighbours in `x`.
VertexSet two_neighbour_set(const Graph& g, const VertexSet& x);

struct InducedSubgraph {
  Graph graph;
  /// original[i] is the vertex of the parent graph relabelled to i.
  std::vector<Vertex> original;
};

/// Subgraph induced by `s`, relabelled to 0..|s|-1 in increasing order.
InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s);

}  // namespace nearbip
