#include "szreg/partition.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "szreg/error.hpp"

namespace szreg {

Partition::Partition(std::size_t n, std::vector<VertexSet> classes)
    : n_(n), classes_(std::move(classes)) {
  VertexSet seen(n);
  for (std::size_t k = 0; k < classes_.size(); ++k) {
    const VertexSet& c = classes_[k];
    if (c.capacity() != n)
      throw Error(ErrorCode::InvalidPartition,
                  "class " + std::to_string(k) + " keyed to ground size " +
                      std::to_string(c.capacity()) + ", expected " + std::to_string(n));
    if (c.empty())
      throw Error(ErrorCode::InvalidPartition, "class " + std::to_string(k) + " is empty");
    if (c.intersects(seen))
      throw Error(ErrorCode::InvalidPartition, "class " + std::to_string(k) + " overlaps an earlier class");
    seen |= c;
  }
  if (seen.size() != n)
    throw Error(ErrorCode::InvalidPartition,
                "classes cover " + std::to_string(seen.size()) + " of " + std::to_string(n) + " vertices");
  std::sort(classes_.begin(), classes_.end(),
            [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); });
}

Partition Partition::trivial(std::size_t n) {
  if (n == 0)
    return Partition(0, {});
  return Partition(n, {VertexSet::full(n)});
}

Partition Partition::discrete(std::size_t n) {
  std::vector<VertexSet> classes;
  classes.reserve(n);
  for (Vertex v = 0; v < n; ++v)
    classes.emplace_back(n, std::initializer_list<Vertex>{v});
  return Partition(n, std::move(classes));
}

Partition Partition::from_labels(const std::vector<std::size_t>& labels) {
  const std::size_t n = labels.size();
  std::map<std::size_t, VertexSet> by_label;
  for (Vertex v = 0; v < n; ++v) {
    auto [it, _] = by_label.try_emplace(labels[v], n);
    it->second.insert(v);
  }
  std::vector<VertexSet> classes;
  classes.reserve(by_label.size());
  for (auto& [_, c] : by_label)
    classes.push_back(std::move(c));
  return Partition(n, std::move(classes));
}

std::size_t Partition::class_of(Vertex v) const {
  for (std::size_t k = 0; k < classes_.size(); ++k)
    if (classes_[k].contains(v))
      return k;
  throw Error(ErrorCode::BadParams, "vertex " + std::to_string(v) + " not in partition");
}

bool Partition::refines(const Partition& coarser) const {
  if (n_ != coarser.n_)
    return false;
  for (const VertexSet& c : classes_)
    if (!c.is_subset_of(coarser.classes_[coarser.class_of(c.min())]))
      return false;
  return true;
}

} // namespace szreg
