#include "szreg/graph.hpp"

#include <string>

#include "szreg/error.hpp"
#include "szreg/partition.hpp"

namespace szreg {

Graph::Graph(std::size_t n, std::span<const Edge> edges) : rows_(n, VertexSet(n)) {
  for (const auto& [u, v] : edges) {
    const std::string where = "edge (" + std::to_string(u) + ", " + std::to_string(v) + ")";
    if (u >= n || v >= n)
      throw Error(ErrorCode::InvalidGraph, where + " has an endpoint outside [0," + std::to_string(n) + ")");
    if (u == v)
      throw Error(ErrorCode::InvalidGraph, where + " is a loop");
    if (rows_[u].contains(v))
      throw Error(ErrorCode::InvalidGraph, where + " is a duplicate");
    rows_[u].insert(v);
    rows_[v].insert(u);
    ++edge_count_;
  }
}

Graph Graph::complete(std::size_t n) {
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      edges.emplace_back(u, v);
  return Graph(n, edges);
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edge_count_);
  for (Vertex u = 0; u < rows_.size(); ++u)
    for (Vertex v : rows_[u].members())
      if (u < v)
        out.emplace_back(u, v);
  return out;
}

std::uint64_t adjacent_pairs(const Graph& g, const VertexSet& i, const VertexSet& j) {
  std::uint64_t count = 0;
  for (Vertex u : i.members())
    count += g.neighbours(u).intersection_size(j);
  return count;
}

Rational density(const Graph& g, const VertexSet& i, const VertexSet& j) {
  if (i.empty() || j.empty())
    throw Error(ErrorCode::EmptySet, "density needs nonempty vertex sets");
  const auto cells = static_cast<std::int64_t>(i.size() * j.size());
  return Rational(static_cast<std::int64_t>(adjacent_pairs(g, i, j)), cells);
}

Rational energy(const Graph& g, const Partition& p) {
  if (p.ground_size() != g.vertex_count())
    throw Error(ErrorCode::InvalidPartition, "partition ground size " + std::to_string(p.ground_size()) +
                                                 " differs from graph order " +
                                                 std::to_string(g.vertex_count()));
  // |I||J| d(I,J)^2 = e(I,J)^2 / (|I||J|); the (I,J) and (J,I) terms coincide.
  Rational total;
  for (std::size_t a = 0; a < p.size(); ++a) {
    for (std::size_t b = a; b < p.size(); ++b) {
      const auto e = static_cast<std::int64_t>(adjacent_pairs(g, p[a], p[b]));
      if (e == 0)
        continue;
      const auto cells = static_cast<std::int64_t>(p[a].size() * p[b].size());
      Rational term(mpz_class(static_cast<long>(e)) * e, mpz_class(static_cast<long>(cells)));
      total += a == b ? term : term * 2;
    }
  }
  return total;
}

std::uint64_t irregular_mass(std::span<const std::pair<VertexSet, VertexSet>> pairs) {
  std::uint64_t total = 0;
  for (const auto& [i, j] : pairs)
    total += static_cast<std::uint64_t>(i.size()) * j.size();
  return total;
}

} // namespace szreg
