#pragma once

#include <random>
#include <vector>

#include "szreg/graph.hpp"
#include "szreg/partition.hpp"
#include "szreg/rational.hpp"

namespace szreg::test {

inline Rational q(std::int64_t num, std::int64_t den = 1) { return Rational(num, den); }

inline VertexSet vs(std::size_t n, std::initializer_list<Vertex> members) { return VertexSet(n, members); }

/// n = 4 with the single edge 0–2.
inline Graph single_edge() {
  const std::vector<Edge> edges{{0, 2}};
  return Graph(4, edges);
}

/// Cycle 0–1–2–3–0.
inline Graph cycle4() {
  const std::vector<Edge> edges{{0, 1}, {1, 2}, {2, 3}, {3, 0}};
  return Graph(4, edges);
}

inline Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution coin(p);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin(rng))
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

inline Partition random_partition(std::mt19937_64& rng, std::size_t n, std::size_t max_classes) {
  std::uniform_int_distribution<std::size_t> classes(1, std::max<std::size_t>(1, std::min(n, max_classes)));
  const std::size_t k = classes(rng);
  std::uniform_int_distribution<std::size_t> label(0, k - 1);
  std::vector<std::size_t> labels(n);
  for (auto& l : labels)
    l = label(rng);
  return Partition::from_labels(labels);
}

/// Splits every class of p at random into up to `pieces` parts.
inline Partition random_refinement(std::mt19937_64& rng, const Partition& p, std::size_t pieces) {
  std::uniform_int_distribution<std::size_t> label(0, pieces - 1);
  std::vector<std::size_t> labels(p.ground_size());
  for (std::size_t k = 0; k < p.size(); ++k)
    for (Vertex v : p[k].members())
      labels[v] = k * pieces + label(rng);
  return Partition::from_labels(labels);
}

/// Uniformly random nonempty subset of the members of s with at most max_size elements.
inline VertexSet random_subset(std::mt19937_64& rng, const VertexSet& s, std::size_t max_size) {
  auto members = s.members();
  std::shuffle(members.begin(), members.end(), rng);
  std::uniform_int_distribution<std::size_t> size(1, std::min(max_size, members.size()));
  members.resize(size(rng));
  return VertexSet(s.capacity(), std::span<const Vertex>(members));
}

} // namespace szreg::test
