#pragma once

#include <cstddef>
#include <optional>

#include "nearbip/decomposition.hpp"
#include "nearbip/graph.hpp"
#include "nearbip/vertex_set.hpp"

namespace nearbip {

/// Smallest u such that G - u is bipartite.
std::optional<Vertex> find_deletion_bipartite_vertex(const Graph& g);

/// Split of V \ {u} around a deletion-bipartite vertex u.
///
///  (i)   s1 ∪ s2 and t1 ∪ t2 are the colour classes of G - u
///  (ii)  u is adjacent to all of s1 ∪ t1
///  (iii) u is adjacent to none of s2 ∪ t2
///  (iv)  s2 is complete to t1 ∪ t2 and t2 is complete to s1 ∪ s2
///
/// z holds the isolated vertices of G[s1 ∪ t1]. Under (i)-(iv) the sets s2,
/// t2, z ∩ s1 and z ∩ t1 are twin-sets.
struct UPartition {
  Vertex u = 0;
  VertexSet s1, s2, t1, t2, z;
};

/// Throws StructureViolation naming the failed property ("i", "iv" or
/// "twin") with a witness. When some vertex is non-adjacent to u, diameter
/// 2 forces G - u to be connected, so its bipartition is unique up to the
/// swap of s and t; the class of the smallest vertex becomes s.
UPartition partition_around_u(const Graph& g, Vertex u);

/// Which step produced a colouring.
enum class BranchCase {
  UColouredOne,      // u = 1, s1' ∪ t1' forced to 2
  UAlone,            // u = 2 and s1' ∪ t1' is empty
  S2HasOne,          // u = 2, a vertex of s2 is 1
  T2HasOne,          // u = 2, a vertex of t2 is 1
  GuessInT1,         // u = 2, s2 all 2: at most one vertex of t1' is 2
  GuessInS1,         // u = 2, t2 all 2 and s2 empty: mirror image
  SmallerClassesOne  // u = 2, s2 ∪ t2 empty: smaller class of each component is 1
};

struct Lemma1Outcome {
  NbDecomposition decomposition;
  BranchCase winning_case;
  /// Number of branches generated, initial twin-set branches included.
  std::size_t branch_count = 0;
};

/// Minimum independent feedback vertex set of a diameter-2 graph with
/// G - u bipartite, by the twin-set branching scheme.
/// Throws DiameterNotTwo, or PreconditionError if G - u is not bipartite.
Lemma1Outcome solve_with_deletion_vertex(const Graph& g, Vertex u);
NbDecomposition lemma1_min_ifvs(const Graph& g, Vertex u);

/// Smallest valid 2-neighbour set A_X over all X with 4 <= |X| <= 5, ties
/// broken lexicographically. Throws PreconditionError when some G - u is
/// bipartite, since the minimality argument needs that case excluded.
std::optional<NbDecomposition> lemma2_min_ifvs(const Graph& g);

/// Minimum independent feedback vertex set of a diameter-2 graph; empty
/// when the graph is not near-bipartite. Throws DiameterNotTwo.
std::optional<NbDecomposition> solve_min_ifvs_diam2(const Graph& g);

enum class YangYuanCondition { None, DeletionBipartite, TwoNeighbourSet };

struct YangYuanVerdict {
  YangYuanCondition condition = YangYuanCondition::None;
  std::optional<Vertex> u;
  std::optional<VertexSet> x;
  bool near_bipartite() const { return condition != YangYuanCondition::None; }
};

/// Tests (i) some G - u is bipartite, then (ii) some X with 4 <= |X| <= 5
/// has (A_X, V \ A_X) valid; reports the first condition that holds.
/// Throws DiameterNotTwo.
YangYuanVerdict yang_yuan_characterize(const Graph& g);
bool yang_yuan_near_bipartite(const Graph& g);

}  // namespace nearbip
