#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "nearbip/graph.hpp"
#include "nearbip/vertex_set.hpp"

namespace nearbip {

struct OracleOptions {
  /// Graphs above this many vertices are refused with SearchSpaceTooLarge.
  /// Values above 64 are clamped to 64.
  std::size_t hard_limit = 26;
  /// Only look for sets of at most this size.
  std::optional<std::size_t> budget;
  /// Skip supersets of dependent sets during enumeration. Disabling it checks
  /// every subset of each size and exists for cross-checking.
  bool prune_dependent = true;
};

struct OracleResult {
  std::optional<std::size_t> minimum_size;
  std::optional<VertexSet> witness;
  /// False only when a budget cut the search short without a hit.
  bool exhausted = true;
};

/// Minimum independent feedback vertex set by exhaustive search in order of
/// increasing size; the witness is the lexicographically smallest optimum.
/// Empty result (with exhausted set) means the graph is not near-bipartite.
OracleResult exact_min_ifvs(const Graph& g, const OracleOptions& options = {});

/// Every A for which (A, V \ A) is a near-bipartite decomposition, in
/// (size, lexicographic) order.
std::vector<VertexSet> all_nb_decompositions(const Graph& g, std::size_t hard_limit = 26);

bool is_near_bipartite_exact(const Graph& g, std::size_t hard_limit = 26);

}  // namespace nearbip
