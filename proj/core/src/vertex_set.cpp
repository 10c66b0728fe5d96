#include "chibound/vertex_set.hpp"

#include <bit>
#include <stdexcept>
#include <string>

namespace chibound {

VertexSet::VertexSet(int universe) : universe_(universe) {
  if (universe < 0) throw std::invalid_argument("VertexSet: negative universe");
  words_.assign(word_count(universe), Word{0});
}

VertexSet::VertexSet(int universe, std::initializer_list<Vertex> members)
    : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet::VertexSet(int universe, std::span<const Vertex> members) : VertexSet(universe) {
  for (Vertex v : members) insert(v);
}

VertexSet VertexSet::full(int universe) {
  VertexSet s(universe);
  for (auto& w : s.words_) w = ~Word{0};
  s.clear_padding();
  return s;
}

void VertexSet::check_member(Vertex v) const {
  if (v < 0 || v >= universe_) {
    throw std::out_of_range("vertex " + std::to_string(v) + " outside [0," +
                            std::to_string(universe_) + ")");
  }
}

void VertexSet::check_universe(const VertexSet& other) const {
  if (other.universe_ != universe_) {
    throw std::invalid_argument("VertexSet: universe mismatch (" + std::to_string(universe_) +
                                " vs " + std::to_string(other.universe_) + ")");
  }
}

void VertexSet::clear_padding() {
  const int tail = universe_ % kWordBits;
  if (tail != 0 && !words_.empty()) words_.back() &= (Word{1} << tail) - 1;
}

void VertexSet::insert(Vertex v) {
  check_member(v);
  words_[static_cast<std::size_t>(v) / kWordBits] |= Word{1} << (v % kWordBits);
}

void VertexSet::erase(Vertex v) {
  check_member(v);
  words_[static_cast<std::size_t>(v) / kWordBits] &= ~(Word{1} << (v % kWordBits));
}

int VertexSet::count() const {
  int c = 0;
  for (Word w : words_) c += std::popcount(w);
  return c;
}

bool VertexSet::empty() const {
  for (Word w : words_)
    if (w != 0) return false;
  return true;
}

Vertex VertexSet::first() const {
  for (std::size_t i = 0; i < words_.size(); ++i) {
    if (words_[i] != 0) return static_cast<Vertex>(i * kWordBits) + std::countr_zero(words_[i]);
  }
  return -1;
}

Vertex VertexSet::next(Vertex after) const {
  const int start = after + 1;
  if (start >= universe_) return -1;
  std::size_t i = static_cast<std::size_t>(start) / kWordBits;
  Word w = words_[i] & (~Word{0} << (start % kWordBits));
  while (true) {
    if (w != 0) return static_cast<Vertex>(i * kWordBits) + std::countr_zero(w);
    if (++i >= words_.size()) return -1;
    w = words_[i];
  }
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0) return true;
  return false;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0) return false;
  return true;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_universe(other);
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] &= ~other.words_[i];
  return *this;
}

VertexSet VertexSet::operator~() const {
  VertexSet out = *this;
  for (auto& w : out.words_) w = ~w;
  out.clear_padding();
  return out;
}

bool operator==(const VertexSet& a, const VertexSet& b) {
  if (a.universe_ != b.universe_) return false;
  for (std::size_t i = 0; i < a.words_.size(); ++i)
    if (a.words_[i] != b.words_[i]) return false;
  return true;
}

std::vector<Vertex> VertexSet::to_vector() const {
  std::vector<Vertex> out;
  out.reserve(static_cast<std::size_t>(count()));
  for (Vertex v : *this) out.push_back(v);
  return out;
}

}  // namespace chibound
