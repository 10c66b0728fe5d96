#pragma once

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <iterator>
#include <optional>
#include <span>
#include <vector>

#include <boost/container/small_vector.hpp>

namespace chibound {

using Vertex = int;

/// A subset of the vertex range [0, universe) stored as packed 64-bit words.
///
/// Set algebra runs one machine word at a time. Both operands of a binary
/// operation must share the same universe. Bits at or above the universe
/// size are kept clear so that counting and equality never see padding.
class VertexSet {
 public:
  using Word = std::uint64_t;
  static constexpr int kWordBits = 64;

  class Iterator {
   public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = Vertex;
    using difference_type = std::ptrdiff_t;
    using pointer = const Vertex*;
    using reference = Vertex;

    Iterator() = default;
    Iterator(const VertexSet* set, Vertex at) : set_(set), at_(at) {}

    Vertex operator*() const { return at_; }
    Iterator& operator++() {
      at_ = set_->next(at_);
      return *this;
    }
    Iterator operator++(int) {
      Iterator old = *this;
      ++*this;
      return old;
    }
    bool operator==(const Iterator& other) const { return at_ == other.at_; }

   private:
    const VertexSet* set_ = nullptr;
    Vertex at_ = -1;
  };

  VertexSet() = default;
  explicit VertexSet(int universe);
  VertexSet(int universe, std::initializer_list<Vertex> members);
  VertexSet(int universe, std::span<const Vertex> members);

  static VertexSet full(int universe);

  int universe() const { return universe_; }
  bool contains(Vertex v) const {
    return v >= 0 && v < universe_ &&
           ((words_[static_cast<std::size_t>(v) / kWordBits] >> (v % kWordBits)) & 1U) != 0;
  }
  void insert(Vertex v);
  void erase(Vertex v);

  int count() const;
  bool empty() const;

  /// Smallest member, or -1 when empty.
  Vertex first() const;
  /// Smallest member strictly greater than `after`, or -1.
  Vertex next(Vertex after) const;

  bool intersects(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  /// Complement with respect to [0, universe).
  VertexSet operator~() const;

  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }
  friend bool operator==(const VertexSet& a, const VertexSet& b);

  Iterator begin() const { return Iterator(this, first()); }
  Iterator end() const { return Iterator(this, -1); }

  std::vector<Vertex> to_vector() const;

  std::span<const Word> words() const { return {words_.data(), words_.size()}; }

 private:
  static std::size_t word_count(int universe) {
    return (static_cast<std::size_t>(universe) + kWordBits - 1) / kWordBits;
  }
  void check_member(Vertex v) const;
  void check_universe(const VertexSet& other) const;
  void clear_padding();

  int universe_ = 0;
  boost::container::small_vector<Word, 2> words_;
};

}  // namespace chibound
