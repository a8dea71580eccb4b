#include "szreg/vertex_set.hpp"

#include <algorithm>
#include <string>

#include "szreg/error.hpp"

namespace szreg {

namespace {

std::size_t word_count(std::size_t capacity) {
  return (capacity + VertexSet::word_bits - 1) / VertexSet::word_bits;
}

} // namespace

VertexSet::VertexSet(std::size_t capacity) : capacity_(capacity), words_(word_count(capacity), 0) {}

VertexSet::VertexSet(std::size_t capacity, std::initializer_list<Vertex> members)
    : VertexSet(capacity) {
  for (Vertex v : members)
    insert(v);
}

VertexSet::VertexSet(std::size_t capacity, std::span<const Vertex> members) : VertexSet(capacity) {
  for (Vertex v : members)
    insert(v);
}

VertexSet VertexSet::full(std::size_t capacity) {
  return range(capacity, 0, static_cast<Vertex>(capacity));
}

VertexSet VertexSet::range(std::size_t capacity, Vertex first, Vertex last_exclusive) {
  VertexSet s(capacity);
  for (Vertex v = first; v < last_exclusive; ++v)
    s.insert(v);
  return s;
}

std::size_t VertexSet::size() const noexcept {
  std::size_t total = 0;
  for (Word w : words_)
    total += static_cast<std::size_t>(std::popcount(w));
  return total;
}

bool VertexSet::empty() const noexcept {
  for (Word w : words_)
    if (w != 0)
      return false;
  return true;
}

void VertexSet::insert(Vertex v) {
  if (v >= capacity_)
    throw Error(ErrorCode::BadParams,
                "vertex " + std::to_string(v) + " outside [0," + std::to_string(capacity_) + ")");
  words_[v / word_bits] |= Word{1} << (v % word_bits);
}

void VertexSet::erase(Vertex v) {
  if (v < capacity_)
    words_[v / word_bits] &= ~(Word{1} << (v % word_bits));
}

Vertex VertexSet::min() const noexcept {
  for (std::size_t i = 0; i < words_.size(); ++i)
    if (words_[i] != 0)
      return static_cast<Vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(words_[i])));
  return static_cast<Vertex>(capacity_);
}

std::vector<Vertex> VertexSet::members() const {
  std::vector<Vertex> out;
  out.reserve(size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    Word w = words_[i];
    while (w != 0) {
      out.push_back(static_cast<Vertex>(i * word_bits + static_cast<std::size_t>(std::countr_zero(w))));
      w &= w - 1;
    }
  }
  return out;
}

std::size_t VertexSet::intersection_size(const VertexSet& other) const {
  check_compatible(other);
  std::size_t total = 0;
  for (std::size_t i = 0; i < words_.size(); ++i)
    total += static_cast<std::size_t>(std::popcount(words_[i] & other.words_[i]));
  return total;
}

bool VertexSet::is_subset_of(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & ~other.words_[i]) != 0)
      return false;
  return true;
}

bool VertexSet::intersects(const VertexSet& other) const {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    if ((words_[i] & other.words_[i]) != 0)
      return true;
  return false;
}

VertexSet& VertexSet::operator&=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator|=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] |= other.words_[i];
  return *this;
}

VertexSet& VertexSet::operator-=(const VertexSet& other) {
  check_compatible(other);
  for (std::size_t i = 0; i < words_.size(); ++i)
    words_[i] &= ~other.words_[i];
  return *this;
}

void VertexSet::check_compatible(const VertexSet& other) const {
  if (capacity_ != other.capacity_)
    throw Error(ErrorCode::BadParams, "vertex sets keyed to different ground sizes");
}

bool lex_less(const VertexSet& a, const VertexSet& b) {
  const auto ma = a.members();
  const auto mb = b.members();
  return std::lexicographical_compare(ma.begin(), ma.end(), mb.begin(), mb.end());
}

} // namespace szreg
