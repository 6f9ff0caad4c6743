#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace nearbip {

using Vertex = std::uint32_t;

/// Subset of a fixed universe [0, universe) stored as a dense bitmask.
///
/// Set algebra between two sets requires equal universes. Iteration visits
/// members in increasing order, which is also the order used by the
/// lexicographic comparison.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr std::size_t kWordBits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t universe);
  VertexSet(std::size_t universe, std::initializer_list<Vertex> members);

  static VertexSet full(std::size_t universe);
  template <typename Range>
  static VertexSet of(std::size_t universe, const Range& members) {
    VertexSet s(universe);
    for (auto v : members) s.insert(static_cast<Vertex>(v));
    return s;
  }

  std::size_t universe() const { return universe_; }
  std::size_t size() const;
  bool empty() const;

  bool contains(Vertex v) const {
    return (words_[v / kWordBits] >> (v % kWordBits)) & 1U;
  }
  void insert(Vertex v) { words_[v / kWordBits] |= Word{1} << (v % kWordBits); }
  void erase(Vertex v) { words_[v / kWordBits] &= ~(Word{1} << (v % kWordBits)); }

  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  /// Universe minus this set.
  VertexSet complement() const;

  /// |this ∩ other| without materialising the intersection.
  std::size_t intersection_size(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  /// Smallest member; universe() when empty.
  Vertex first() const;
  /// Smallest member greater than v; universe() when none.
  Vertex next(Vertex v) const;

  std::vector<Vertex> members() const;

  template <typename F>
  void for_each(F&& f) const {
    for (std::size_t w = 0; w < words_.size(); ++w) {
      Word bits = words_[w];
      while (bits != 0) {
        const int bit = std::countr_zero(bits);
        f(static_cast<Vertex>(w * kWordBits + static_cast<std::size_t>(bit)));
        bits &= bits - 1;
      }
    }
  }

  std::span<const Word> words() const { return words_; }

  friend bool operator==(const VertexSet& a, const VertexSet& b) = default;

  /// Lexicographic comparison of the increasing member sequences.
  static bool lex_less(const VertexSet& a, const VertexSet& b);
  /// The (size, lexicographic) order used for every tie-break.
  static bool size_lex_less(const VertexSet& a, const VertexSet& b);

 private:
  void trim();

  std::size_t universe_ = 0;
  std::vector<Word> words_;
};

}  // namespace nearbip
