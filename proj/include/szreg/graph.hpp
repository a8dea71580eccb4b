#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "szreg/rational.hpp"
#include "szreg/vertex_set.hpp"

namespace szreg {

class Partition;

using Edge = std::pair<Vertex, Vertex>;

/// Immutable simple undirected graph on {0..n-1}.
///
/// Adjacency is stored as one bit row per vertex, so neighbourhood counts
/// against a vertex set are a popcount over word intersections.
class Graph {
public:
  Graph() = default;

  /// Throws InvalidGraph on loops, duplicate edges (in either orientation)
  /// or endpoints outside [0, n).
  Graph(std::size_t n, std::span<const Edge> edges);

  static Graph empty(std::size_t n) { return Graph(n, {}); }
  static Graph complete(std::size_t n);

  std::size_t vertex_count() const noexcept { return rows_.size(); }
  std::size_t edge_count() const noexcept { return edge_count_; }

  bool adjacent(Vertex u, Vertex v) const noexcept { return rows_[u].contains(v); }
  const VertexSet& neighbours(Vertex v) const { return rows_[v]; }

  /// Edges as (u, v) with u < v, ascending.
  std::vector<Edge> edges() const;

private:
  std::vector<VertexSet> rows_;
  std::size_t edge_count_ = 0;
};

/// Number of ordered pairs (u, v) ∈ i × j with u adjacent to v.
std::uint64_t adjacent_pairs(const Graph& g, const VertexSet& i, const VertexSet& j);

/// Fraction of ordered pairs of i × j that are adjacent. Throws EmptySet.
Rational density(const Graph& g, const VertexSet& i, const VertexSet& j);

/// Squared Frobenius norm of the adjacency matrix after averaging over every
/// block I × J of the partition: Σ_{I,J} |I||J| d(I,J)², diagonal included.
/// Throws InvalidPartition if p is not keyed to g's vertex set.
Rational energy(const Graph& g, const Partition& p);

/// Σ |I||J| over the supplied ordered pairs.
std::uint64_t irregular_mass(std::span<const std::pair<VertexSet, VertexSet>> pairs);

} // namespace szreg
