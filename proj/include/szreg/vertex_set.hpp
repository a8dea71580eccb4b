#pragma once

#include <bit>
#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace szreg {

using Vertex = std::uint32_t;

/// Fixed-capacity bit set over the vertex range {0..capacity-1}.
///
/// Two sets are only comparable or combinable when their capacities agree;
/// the capacity is the vertex count of the graph they are keyed to.
class VertexSet {
public:
  using Word = std::uint64_t;
  static constexpr std::size_t word_bits = 64;

  VertexSet() = default;
  explicit VertexSet(std::size_t capacity);
  VertexSet(std::size_t capacity, std::initializer_list<Vertex> members);
  VertexSet(std::size_t capacity, std::span<const Vertex> members);

  static VertexSet full(std::size_t capacity);
  static VertexSet range(std::size_t capacity, Vertex first, Vertex last_exclusive);

  std::size_t capacity() const noexcept { return capacity_; }
  std::size_t size() const noexcept;
  bool empty() const noexcept;

  void insert(Vertex v);
  void erase(Vertex v);
  bool contains(Vertex v) const noexcept {
    return v < capacity_ && (words_[v / word_bits] >> (v % word_bits)) & 1U;
  }

  /// Smallest member; capacity() when empty.
  Vertex min() const noexcept;
  std::vector<Vertex> members() const;

  /// |this ∩ other| without materializing the intersection.
  std::size_t intersection_size(const VertexSet& other) const;
  bool is_subset_of(const VertexSet& other) const;
  bool intersects(const VertexSet& other) const;

  VertexSet& operator&=(const VertexSet& other);
  VertexSet& operator|=(const VertexSet& other);
  VertexSet& operator-=(const VertexSet& other);
  friend VertexSet operator&(VertexSet a, const VertexSet& b) { return a &= b; }
  friend VertexSet operator|(VertexSet a, const VertexSet& b) { return a |= b; }
  friend VertexSet operator-(VertexSet a, const VertexSet& b) { return a -= b; }

  friend bool operator==(const VertexSet&, const VertexSet&) = default;

  /// Lexicographic order on the sorted member sequences.
  friend bool lex_less(const VertexSet& a, const VertexSet& b);

  std::span<const Word> words() const noexcept { return words_; }

private:
  void check_compatible(const VertexSet& other) const;

  std::size_t capacity_ = 0;
  std::vector<Word> words_;
};

bool lex_less(const VertexSet& a, const VertexSet& b);

} // namespace szreg
