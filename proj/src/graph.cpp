#include "nearbip/graph.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "nearbip/errors.hpp"

namespace nearbip {

Graph Graph::from_edge_list(std::size_t n, std::span<const Edge> pairs) {
  Graph g;
  g.lists_.assign(n, {});
  g.rows_.assign(n, VertexSet(n));
  for (const auto& [u, v] : pairs) {
    if (u >= n) throw OutOfRangeError(u, n);
    if (v >= n) throw OutOfRangeError(v, n);
    if (u == v) throw SelfLoopError(u);
    if (g.rows_[u].contains(v)) continue;
    g.rows_[u].insert(v);
    g.rows_[v].insert(u);
    ++g.edge_count_;
  }
  for (std::size_t v = 0; v < n; ++v) g.lists_[v] = g.rows_[v].members();
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < vertex_count(); ++u)
    for (Vertex v : lists_[u])
      if (u < v) out.emplace_back(u, v);
  return out;
}

std::vector<std::optional<std::size_t>> distances_from(const Graph& g, Vertex source) {
  std::vector<std::optional<std::size_t>> dist(g.vertex_count());
  std::deque<Vertex> queue{source};
  dist[source] = 0;
  while (!queue.empty()) {
    const Vertex v = queue.front();
    queue.pop_front();
    for (Vertex w : g.neighbours(v)) {
      if (dist[w]) continue;
      dist[w] = *dist[v] + 1;
      queue.push_back(w);
    }
  }
  return dist;
}

bool is_connected(const Graph& g) {
  if (g.vertex_count() == 0) return true;
  return components(g, g.all_vertices()).size() == 1;
}

std::optional<std::size_t> diameter(const Graph& g) {
  const std::size_t n = g.vertex_count();
  std::size_t best = 0;
  std::vector<std::size_t> dist(n);
  std::vector<Vertex> queue(n);
  constexpr std::size_t kUnseen = static_cast<std::size_t>(-1);
  for (Vertex s = 0; s < n; ++s) {
    std::fill(dist.begin(), dist.end(), kUnseen);
    dist[s] = 0;
    std::size_t head = 0;
    std::size_t tail = 0;
    queue[tail++] = s;
    while (head < tail) {
      const Vertex v = queue[head++];
      for (Vertex w : g.neighbours(v)) {
        if (dist[w] != kUnseen) continue;
        dist[w] = dist[v] + 1;
        queue[tail++] = w;
      }
    }
    if (tail != n) return std::nullopt;
    best = std::max(best, dist[queue[tail - 1]]);
  }
  return best;
}

std::optional<Bipartition> bipartition(const Graph& g, const VertexSet& within) {
  const std::size_t n = g.vertex_count();
  Bipartition out{VertexSet(n), VertexSet(n)};
  std::vector<std::uint8_t> side(n, 2);
  std::vector<Vertex> stack;
  for (Vertex root = within.first(); root < n; root = within.next(root)) {
    if (side[root] != 2) continue;
    side[root] = 0;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      (side[v] == 0 ? out.first : out.second).insert(v);
      for (Vertex w : g.neighbours(v)) {
        if (!within.contains(w)) continue;
        if (side[w] == 2) {
          side[w] = static_cast<std::uint8_t>(1 - side[v]);
          stack.push_back(w);
        } else if (side[w] == side[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return out;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
  return bipartition(g, g.all_vertices());
}

std::vector<std::vector<Vertex>> components(const Graph& g, const VertexSet& within) {
  const std::size_t n = g.vertex_count();
  std::vector<bool> seen(n, false);
  std::vector<std::vector<Vertex>> out;
  std::vector<Vertex> stack;
  for (Vertex root = within.first(); root < n; root = within.next(root)) {
    if (seen[root]) continue;
    auto& comp = out.emplace_back();
    seen[root] = true;
    stack.push_back(root);
    while (!stack.empty()) {
      const Vertex v = stack.back();
      stack.pop_back();
      comp.push_back(v);
      for (Vertex w : g.neighbours(v)) {
        if (seen[w] || !within.contains(w)) continue;
        seen[w] = true;
        stack.push_back(w);
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

namespace {

struct DisjointSets {
  explicit DisjointSets(std::size_t n) : parent(n) {
    std::iota(parent.begin(), parent.end(), Vertex{0});
  }
  Vertex find(Vertex v) {
    while (parent[v] != v) {
      parent[v] = parent[parent[v]];
      v = parent[v];
    }
    return v;
  }
  bool unite(Vertex a, Vertex b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[a] = b;
    return true;
  }
  std::vector<Vertex> parent;
};

}  // namespace

bool is_forest(const Graph& g, const VertexSet& within) {
  DisjointSets sets(g.vertex_count());
  bool acyclic = true;
  within.for_each([&](Vertex u) {
    if (!acyclic) return;
    for (Vertex v : g.neighbours(u)) {
      if (v >= u) break;
      if (within.contains(v) && !sets.unite(u, v)) {
        acyclic = false;
        return;
      }
    }
  });
  return acyclic;
}

bool is_forest(const Graph& g) { return is_forest(g, g.all_vertices()); }

std::optional<std::vector<Vertex>> find_cycle(const Graph& g, const VertexSet& within) {
  const std::size_t n = g.vertex_count();
  // Grow a spanning forest; the first rejected edge closes a cycle with the
  // forest path between its endpoints.
  DisjointSets sets(n);
  std::vector<std::vector<Vertex>> forest(n);
  for (Vertex u = within.first(); u < n; u = within.next(u)) {
    for (Vertex v : g.neighbours(u)) {
      if (v >= u) break;
      if (!within.contains(v)) continue;
      if (sets.unite(u, v)) {
        forest[u].push_back(v);
        forest[v].push_back(u);
        continue;
      }
      std::vector<std::optional<Vertex>> parent(n);
      std::deque<Vertex> queue{u};
      parent[u] = u;
      while (!queue.empty() && !parent[v]) {
        const Vertex x = queue.front();
        queue.pop_front();
        for (Vertex y : forest[x]) {
          if (parent[y]) continue;
          parent[y] = x;
          queue.push_back(y);
        }
      }
      std::vector<Vertex> cycle;
      for (Vertex x = v; x != u; x = *parent[x]) cycle.push_back(x);
      cycle.push_back(u);
      return cycle;
    }
  }
  return std::nullopt;
}

VertexSet two_neighbour_set(const Graph& g, const VertexSet& x) {
  VertexSet out(g.vertex_count());
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (x.contains(v)) continue;
    if (g.neighbour_set(v).intersection_size(x) >= 2) out.insert(v);
  }
  return out;
}

InducedSubgraph induced_subgraph(const Graph& g, const VertexSet& s) {
  InducedSubgraph out;
  out.original = s.members();
  std::vector<Vertex> relabel(g.vertex_count(), 0);
  for (std::size_t i = 0; i < out.original.size(); ++i)
    relabel[out.original[i]] = static_cast<Vertex>(i);
  std::vector<Edge> edges;
  for (Vertex u : out.original)
    for (Vertex v : g.neighbours(u))
      if (u < v && s.contains(v)) edges.emplace_back(relabel[u], relabel[v]);
  out.graph = Graph::from_edge_list(out.original.size(), edges);
  return out;
}

}  // namespace nearbip
