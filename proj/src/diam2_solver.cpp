#include "nearbip/diam2_solver.hpp"

#include <array>
#include <stdexcept>
#include <vector>

#include "nearbip/errors.hpp"

namespace nearbip {

namespace {

void require_diameter_two(const Graph& g) {
  const auto d = diameter(g);
  if (!d || *d != 2) throw DiameterNotTwo(d);
}

VertexSet without(const Graph& g, Vertex u) {
  VertexSet s = g.all_vertices();
  s.erase(u);
  return s;
}

/// Calls f(X) for every X of the given size in lexicographic order until f
/// returns false.
template <typename F>
bool for_each_subset(std::size_t n, std::size_t size, F&& f) {
  if (size > n) return true;
  std::vector<Vertex> idx(size);
  for (std::size_t i = 0; i < size; ++i) idx[i] = static_cast<Vertex>(i);
  VertexSet x(n);
  while (true) {
    x = VertexSet(n);
    for (Vertex v : idx) x.insert(v);
    if (!f(x)) return false;
    std::size_t i = size;
    while (i > 0 && idx[i - 1] == n - size + i - 1) --i;
    if (i == 0) return true;
    ++idx[i - 1];
    for (std::size_t j = i; j < size; ++j) idx[j] = idx[j - 1] + 1;
  }
}

bool twin_set(const Graph& g, const VertexSet& s, std::vector<Vertex>& witness) {
  const Vertex first = s.first();
  if (first >= g.vertex_count()) return true;
  for (Vertex v = s.next(first); v < g.vertex_count(); v = s.next(v)) {
    if (g.neighbour_set(v) != g.neighbour_set(first)) {
      witness = {first, v};
      return false;
    }
  }
  return true;
}

class Lemma1Search {
 public:
  Lemma1Search(const Graph& g, UPartition p)
      : g_(g), p_(std::move(p)), s1_prime_(p_.s1 - p_.z), t1_prime_(p_.t1 - p_.z),
        rest_(s1_prime_ | t1_prime_), components_(components(g, rest_)) {}

  Lemma1Outcome run() {
    const std::size_t n = g_.vertex_count();
    // Representative plus residual of each non-empty twin-set.
    struct Twins {
      Vertex representative;
      VertexSet residual;
    };
    std::vector<Twins> twins;
    for (const VertexSet* s : {&p_.s2, &p_.t2}) add_twins(*s, twins);
    add_twins(p_.z & p_.s1, twins);
    add_twins(p_.z & p_.t1, twins);

    // Each twin-set contributes one bit for its representative and, when the
    // residual is non-empty, one bit for the residual's common colour.
    std::size_t bits = 0;
    for (const auto& t : twins) bits += t.residual.empty() ? 1 : 2;
    for (std::size_t mask = 0; mask < (std::size_t{1} << bits); ++mask) {
      GoodTwoColouring c(n);
      std::size_t pos = 0;
      for (std::size_t i = 0; i < twins.size(); ++i) {
        c.set(twins[i].representative, colour_bit(mask, pos));
        if (twins[i].residual.empty()) {
          pos += 1;
        } else {
          c.set_all(twins[i].residual, colour_bit(mask, pos + 1));
          pos += 2;
        }
      }
      ++branch_count_;
      if (!c.is_good(g_)) continue;
      complete(c);
    }
    if (!best_) throw std::logic_error("twin-set branching found no good colouring");
    return Lemma1Outcome{make_decomposition(g_, *best_), best_case_, branch_count_};
  }

 private:
  static Colour colour_bit(std::size_t mask, std::size_t pos) {
    return ((mask >> pos) & 1U) != 0 ? Colour::Two : Colour::One;
  }

  static void add_twins(const VertexSet& s, auto& out) {
    if (s.empty()) return;
    VertexSet residual = s;
    const Vertex rep = s.first();
    residual.erase(rep);
    out.push_back({rep, std::move(residual)});
  }

  void consider(const GoodTwoColouring& c, BranchCase why) {
    ++branch_count_;
    if (!c.is_good(g_)) return;
    VertexSet a = c.one_set();
    if (!best_ || VertexSet::size_lex_less(a, *best_)) {
      best_ = std::move(a);
      best_case_ = why;
    }
  }

  bool any_coloured(const GoodTwoColouring& c, const VertexSet& s, Colour colour) const {
    bool hit = false;
    s.for_each([&](Vertex v) { hit = hit || c[v] == colour; });
    return hit;
  }

  void complete(const GoodTwoColouring& branch) {
    GoodTwoColouring with_u_one = branch;
    with_u_one.set(p_.u, Colour::One);
    with_u_one.set_all(rest_, Colour::Two);
    consider(with_u_one, BranchCase::UColouredOne);

    GoodTwoColouring c = branch;
    c.set(p_.u, Colour::Two);
    if (rest_.empty()) {
      consider(c, BranchCase::UAlone);
      return;
    }
    if (p_.s2.empty() && p_.t2.empty()) {
      for (const auto& comp : components_) {
        const VertexSet cs = VertexSet::of(g_.vertex_count(), comp) & s1_prime_;
        const VertexSet ct = VertexSet::of(g_.vertex_count(), comp) & t1_prime_;
        const std::size_t ns = cs.size();
        const std::size_t nt = ct.size();
        // Equal sizes: the class holding the component's smallest vertex.
        const bool s_smaller = ns < nt || (ns == nt && cs.contains(comp.front()));
        c.set_all(s_smaller ? cs : ct, Colour::One);
        c.set_all(s_smaller ? ct : cs, Colour::Two);
      }
      consider(c, BranchCase::SmallerClassesOne);
      return;
    }
    if (any_coloured(c, p_.s2, Colour::One)) {
      c.set_all(t1_prime_, Colour::Two);
      c.set_all(s1_prime_, Colour::One);
      consider(c, BranchCase::S2HasOne);
      return;
    }
    if (any_coloured(c, p_.t2, Colour::One)) {
      c.set_all(s1_prime_, Colour::Two);
      c.set_all(t1_prime_, Colour::One);
      consider(c, BranchCase::T2HasOne);
      return;
    }
    // All of s2 ∪ t2 is 2. A coloured-2 vertex s of s2 together with u and
    // two coloured-2 vertices of t1' would close the 4-cycle u-t-s-t'-u, so
    // at most one vertex of t1' is 2 (mirrored when only t2 is non-empty).
    // The other side then follows per component.
    const bool guess_t = !p_.s2.empty();
    const VertexSet& guess_side = guess_t ? t1_prime_ : s1_prime_;
    const VertexSet& other_side = guess_t ? s1_prime_ : t1_prime_;
    const BranchCase why = guess_t ? BranchCase::GuessInT1 : BranchCase::GuessInS1;
    std::vector<std::optional<Vertex>> guesses{std::nullopt};
    guess_side.for_each([&](Vertex v) { guesses.emplace_back(v); });
    for (const auto& guess : guesses) {
      GoodTwoColouring d = c;
      d.set_all(guess_side, Colour::One);
      if (guess) d.set(*guess, Colour::Two);
      if (!propagate_across_components(d, guess_side, other_side)) {
        ++branch_count_;
        continue;
      }
      consider(d, why);
    }
  }

  /// Each component's `known` part must be monochromatic; its `unknown` part
  /// gets the opposite colour. False if some known part is mixed.
  bool propagate_across_components(GoodTwoColouring& c, const VertexSet& known,
                                   const VertexSet& unknown) const {
    for (const auto& comp : components_) {
      Colour seen = Colour::Unassigned;
      for (Vertex v : comp) {
        if (!known.contains(v)) continue;
        if (seen == Colour::Unassigned) seen = c[v];
        else if (seen != c[v]) return false;
      }
      const Colour opposite = seen == Colour::One ? Colour::Two : Colour::One;
      for (Vertex v : comp)
        if (unknown.contains(v)) c.set(v, opposite);
    }
    return true;
  }

  const Graph& g_;
  UPartition p_;
  VertexSet s1_prime_;
  VertexSet t1_prime_;
  VertexSet rest_;
  std::vector<std::vector<Vertex>> components_;
  std::optional<VertexSet> best_;
  BranchCase best_case_ = BranchCase::UColouredOne;
  std::size_t branch_count_ = 0;
};

}  // namespace

std::optional<Vertex> find_deletion_bipartite_vertex(const Graph& g) {
  for (Vertex u = 0; u < g.vertex_count(); ++u)
    if (bipartition(g, without(g, u))) return u;
  return std::nullopt;
}

UPartition partition_around_u(const Graph& g, Vertex u) {
  const std::size_t n = g.vertex_count();
  if (u >= n) throw OutOfRangeError(u, n);
  const auto classes = bipartition(g, without(g, u));
  if (!classes) throw StructureViolation("i", {u});

  const VertexSet& nu = g.neighbour_set(u);
  UPartition p{u,
               classes->first & nu,
               classes->first - nu,
               classes->second & nu,
               classes->second - nu,
               VertexSet(n)};

  const VertexSet s = p.s1 | p.s2;
  const VertexSet t = p.t1 | p.t2;
  auto check_complete = [&](const VertexSet& from, const VertexSet& to) {
    from.for_each([&](Vertex a) {
      const VertexSet missing = to - g.neighbour_set(a);
      if (!missing.empty()) throw StructureViolation("iv", {a, missing.first()});
    });
  };
  check_complete(p.s2, t);
  check_complete(p.t2, s);

  const VertexSet inner = p.s1 | p.t1;
  inner.for_each([&](Vertex v) {
    if (!g.neighbour_set(v).intersects(inner)) p.z.insert(v);
  });

  std::vector<Vertex> witness;
  for (const VertexSet& twins : {p.s2, p.t2, p.z & p.s1, p.z & p.t1})
    if (!twin_set(g, twins, witness)) throw StructureViolation("twin", witness);
  return p;
}

Lemma1Outcome solve_with_deletion_vertex(const Graph& g, Vertex u) {
  require_diameter_two(g);
  if (u >= g.vertex_count()) throw OutOfRangeError(u, g.vertex_count());
  if (!bipartition(g, without(g, u)))
    throw PreconditionError("G - " + std::to_string(u) + " is not bipartite");
  return Lemma1Search(g, partition_around_u(g, u)).run();
}

NbDecomposition lemma1_min_ifvs(const Graph& g, Vertex u) {
  return solve_with_deletion_vertex(g, u).decomposition;
}

std::optional<NbDecomposition> lemma2_min_ifvs(const Graph& g) {
  if (auto u = find_deletion_bipartite_vertex(g))
    throw PreconditionError("G - " + std::to_string(*u) +
                            " is bipartite; use the deletion-vertex solver");
  const std::size_t n = g.vertex_count();
  std::optional<VertexSet> best;
  for (std::size_t size : {4, 5}) {
    for_each_subset(n, size, [&](const VertexSet& x) {
      VertexSet a = two_neighbour_set(g, x);
      if (best && VertexSet::size_lex_less(*best, a)) return true;
      if (best && *best == a) return true;
      if (is_nb_decomposition(g, a)) best = std::move(a);
      return true;
    });
  }
  if (!best) return std::nullopt;
  return make_decomposition(g, std::move(*best));
}

std::optional<NbDecomposition> solve_min_ifvs_diam2(const Graph& g) {
  require_diameter_two(g);
  if (auto u = find_deletion_bipartite_vertex(g)) return lemma1_min_ifvs(g, *u);
  return lemma2_min_ifvs(g);
}

YangYuanVerdict yang_yuan_characterize(const Graph& g) {
  require_diameter_two(g);
  YangYuanVerdict verdict;
  if (auto u = find_deletion_bipartite_vertex(g)) {
    verdict.condition = YangYuanCondition::DeletionBipartite;
    verdict.u = u;
    return verdict;
  }
  for (std::size_t size : {4, 5}) {
    const bool exhausted = for_each_subset(g.vertex_count(), size, [&](const VertexSet& x) {
      if (!is_nb_decomposition(g, two_neighbour_set(g, x))) return true;
      verdict.condition = YangYuanCondition::TwoNeighbourSet;
      verdict.x = x;
      return false;
    });
    if (!exhausted) break;
  }
  return verdict;
}

bool yang_yuan_near_bipartite(const Graph& g) { return yang_yuan_characterize(g).near_bipartite(); }

}  // namespace nearbip
