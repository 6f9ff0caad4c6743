#include "nearbip/oracle.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>

#include "nearbip/errors.hpp"

namespace nearbip {

namespace {

using Mask = std::uint64_t;
constexpr std::size_t kMaxVertices = 64;

Mask bit(std::size_t v) { return Mask{1} << v; }

class MaskGraph {
 public:
  MaskGraph(const Graph& g, std::size_t hard_limit) : n_(g.vertex_count()) {
    const std::size_t limit = std::min(hard_limit, kMaxVertices);
    if (n_ > limit) throw SearchSpaceTooLarge(n_, limit);
    adj_.resize(n_, 0);
    for (Vertex v = 0; v < n_; ++v)
      for (Vertex w : g.neighbours(v)) adj_[v] |= bit(w);
  }

  std::size_t n() const { return n_; }
  Mask all() const { return n_ == 64 ? ~Mask{0} : bit(n_) - 1; }
  Mask adj(std::size_t v) const { return adj_[v]; }

  bool independent(Mask s) const {
    for (Mask rest = s; rest != 0; rest &= rest - 1)
      if ((adj_[std::countr_zero(rest)] & s) != 0) return false;
    return true;
  }

  /// Forest iff |E| = |V| - (number of components).
  bool forest(Mask s) const {
    std::size_t twice_edges = 0;
    for (Mask rest = s; rest != 0; rest &= rest - 1)
      twice_edges += static_cast<std::size_t>(std::popcount(adj_[std::countr_zero(rest)] & s));
    std::size_t comps = 0;
    Mask unseen = s;
    while (unseen != 0) {
      Mask comp = unseen & (~unseen + 1);
      Mask frontier = comp;
      while (frontier != 0) {
        Mask grown = 0;
        for (Mask f = frontier; f != 0; f &= f - 1) grown |= adj_[std::countr_zero(f)];
        grown &= s & ~comp;
        comp |= grown;
        frontier = grown;
      }
      unseen &= ~comp;
      ++comps;
    }
    return twice_edges / 2 + comps == static_cast<std::size_t>(std::popcount(s));
  }

 private:
  std::size_t n_;
  std::vector<Mask> adj_;
};

VertexSet to_set(Mask m, std::size_t n) {
  VertexSet s(n);
  for (; m != 0; m &= m - 1) s.insert(static_cast<Vertex>(std::countr_zero(m)));
  return s;
}

/// Lexicographic DFS over subsets of exactly `target` vertices. Returns the
/// first accepted set.
class SizedSearch {
 public:
  SizedSearch(const MaskGraph& g, std::size_t target, bool prune)
      : g_(g), target_(target), prune_(prune) {}

  std::optional<Mask> run() { return visit(0, 0, 0, 0); }

 private:
  std::optional<Mask> visit(Mask chosen, Mask blocked, std::size_t depth, std::size_t start) {
    if (depth == target_) {
      if (!prune_ && !g_.independent(chosen)) return std::nullopt;
      if (g_.forest(g_.all() & ~chosen)) return chosen;
      return std::nullopt;
    }
    for (std::size_t v = start; v + (target_ - depth) <= g_.n(); ++v) {
      if (prune_ && (blocked & bit(v)) != 0) continue;
      if (auto hit = visit(chosen | bit(v), blocked | g_.adj(v), depth + 1, v + 1)) return hit;
    }
    return std::nullopt;
  }

  const MaskGraph& g_;
  std::size_t target_;
  bool prune_;
};

void collect_independent(const MaskGraph& g, Mask chosen, Mask blocked, std::size_t start,
                         std::vector<Mask>& out) {
  if (g.forest(g.all() & ~chosen)) out.push_back(chosen);
  for (std::size_t v = start; v < g.n(); ++v) {
    if ((blocked & bit(v)) != 0) continue;
    collect_independent(g, chosen | bit(v), blocked | g.adj(v), v + 1, out);
  }
}

}  // namespace

OracleResult exact_min_ifvs(const Graph& g, const OracleOptions& options) {
  const MaskGraph mg(g, options.hard_limit);
  const std::size_t cap = std::min(mg.n(), options.budget.value_or(mg.n()));
  for (std::size_t size = 0; size <= cap; ++size) {
    if (auto hit = SizedSearch(mg, size, options.prune_dependent).run())
      return OracleResult{size, to_set(*hit, mg.n()), true};
  }
  return OracleResult{std::nullopt, std::nullopt, cap == mg.n()};
}

std::vector<VertexSet> all_nb_decompositions(const Graph& g, std::size_t hard_limit) {
  const MaskGraph mg(g, hard_limit);
  std::vector<Mask> found;
  collect_independent(mg, 0, 0, 0, found);
  std::vector<VertexSet> out;
  out.reserve(found.size());
  for (Mask m : found) out.push_back(to_set(m, mg.n()));
  std::sort(out.begin(), out.end(), VertexSet::size_lex_less);
  return out;
}

bool is_near_bipartite_exact(const Graph& g, std::size_t hard_limit) {
  OracleOptions options;
  options.hard_limit = hard_limit;
  return exact_min_ifvs(g, options).minimum_size.has_value();
}

}  // namespace nearbip
