#include "nearbip/vertex_set.hpp"

#include <algorithm>
#include <cassert>

namespace nearbip {

namespace {

std::size_t word_count(std::size_t universe) {
  return (universe + VertexSet::kWordBits - 1) / VertexSet::kWordBits;
}

}  // namespace

VertexSet::VertexSet(std::size_t universe)
    : universe_(universe), words_(word_count(universe), 0) {}

VertexSet::VertexSet(std::size_t universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) {
    assert(v < universe);
    insert(v);
  }
}

VertexSet VertexSet::full(std::size_t universe) {
  VertexSet s(universe);
  std::fill(s.words_.begin(), s.words_.end(), ~Word{0});
  s.trim();
  return s;
}

void VertexSet::trim() {
  const std::size_t tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

std::size_t VertexSet::size() const {
  std::size_t total = 0;
  for (Word w : words_) total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const {
  return std::all_of(words_.begin(), words_.end(), [](Word w) { return w == 0; });
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::complement() const {
  VertexSet s(*this);
  for (Word& w : s.words_) w = ~w;
  s.trim();
  return s;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return total;
}

bool VertexSet::intersects(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  assert(universe_ == other.universe_);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

Vertex VertexSet::first() const {
  for (std::size_t w = 0; w < words_.size(); ++w)
    if (words_[w] != 0)
      return static_cast<Vertex>(w * kWordBits +
                                 static_cast<std::size_t>(std::countr_zero(words_[w])));
  return static_cast<Vertex>(universe_);
}

Vertex VertexSet::next(Vertex v) const {
  std::size_t pos = static_cast<std::size_t>(v) + 1;
  if (pos >= universe_) return static_cast<Vertex>(universe_);
  std::size_t w = pos / kWordBits;
  Word bits = words_[w] & (~Word{0} << (pos % kWordBits));
  while (true) {
    if (bits != 0)
      return static_cast<Vertex>(w * kWordBits +
                                 static_cast<std::size_t>(std::countr_zero(bits)));
    if (++w == words_.size()) return static_cast<Vertex>(universe_);
    bits = words_[w];
  }
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for_each([&](Vertex v) { out.push_back(v); });
  return out;
}

bool VertexSet::lex_less(const VertexSet& a, const VertexSet& b) {
  assert(a.universe_ == b.universe_);
  // Below the lowest differing bit the sequences agree. The set owning that
  // bit is smaller unless the other set has nothing left at all.
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    const Word diff = a.words_[w] ^ b.words_[w];
    if (diff == 0) continue;
    const Word low = diff & (~diff + 1);
    const bool a_owns = (a.words_[w] & low) != 0;
    const VertexSet& other = a_owns ? b : a;
    bool other_continues = (other.words_[w] & ~(low | (low - 1))) != 0;
    for (std::size_t k = w + 1; !other_continues && k < other.words_.size(); ++k)
      other_continues = other.words_[k] != 0;
    return a_owns == other_continues;
  }
  return false;
}

bool VertexSet::size_lex_less(const VertexSet& a, const VertexSet& b) {
  const std::size_t sa = a.size();
  const std::size_t sb = b.size();
  if (sa != sb) return sa < sb;
  return lex_less(a, b);
}

}  // namespace nearbip
