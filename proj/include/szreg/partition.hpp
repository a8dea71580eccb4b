#pragma once

#include <cstddef>
#include <vector>

#include "szreg/vertex_set.hpp"

namespace szreg {

/// Partition of {0..n-1} into disjoint nonempty classes.
///
/// Classes are kept in canonical order (ascending smallest member), so two
/// partitions with the same classes compare equal and every consumer sees
/// the same class indices.
class Partition {
public:
  Partition() = default;

  /// Throws InvalidPartition unless the classes are nonempty, pairwise
  /// disjoint, keyed to capacity n, and cover {0..n-1}.
  Partition(std::size_t n, std::vector<VertexSet> classes);

  static Partition trivial(std::size_t n);
  static Partition discrete(std::size_t n);
  /// Class index per vertex; labels are arbitrary integers.
  static Partition from_labels(const std::vector<std::size_t>& labels);

  std::size_t ground_size() const noexcept { return n_; }
  std::size_t size() const noexcept { return classes_.size(); }
  const VertexSet& operator[](std::size_t k) const { return classes_[k]; }
  const std::vector<VertexSet>& classes() const noexcept { return classes_; }

  std::size_t class_of(Vertex v) const;
  bool refines(const Partition& coarser) const;

  friend bool operator==(const Partition&, const Partition&) = default;

private:
  std::size_t n_ = 0;
  std::vector<VertexSet> classes_;
};

} // namespace szreg
