#include <doctest.h>

#include <random>

#include "support.hpp"
#include "szreg/error.hpp"
#include "szreg/graph.hpp"
#include "szreg/oracle.hpp"
#include "szreg/partition.hpp"

using namespace szreg;
using szreg::test::q;
using szreg::test::vs;

TEST_CASE("vertex set algebra") {
  VertexSet a(70, {0, 3, 64, 69});
  VertexSet b(70, {3, 5, 69});
  CHECK(a.size() == 4);
  CHECK(a.min() == 0);
  CHECK((a & b).members() == std::vector<Vertex>{3, 69});
  CHECK((a | b).size() == 5);
  CHECK((a - b).members() == std::vector<Vertex>{0, 64});
  CHECK(a.intersection_size(b) == 2);
  CHECK(VertexSet(70, {3, 69}).is_subset_of(a));
  CHECK_FALSE(b.is_subset_of(a));
  CHECK(VertexSet(70).min() == 70);
  CHECK(lex_less(VertexSet(70, {0, 5}), VertexSet(70, {1})));
  CHECK(lex_less(VertexSet(70, {0}), VertexSet(70, {0, 1})));
  CHECK_THROWS_AS(a.insert(70), Error);
  CHECK_THROWS_AS(a.intersection_size(VertexSet(10)), Error);
}

TEST_CASE("graph construction validates edges") {
  const std::vector<Edge> loop{{1, 1}};
  const std::vector<Edge> dup{{0, 1}, {1, 0}};
  const std::vector<Edge> out{{0, 4}};
  CHECK_THROWS_AS(Graph(4, loop), Error);
  CHECK_THROWS_AS(Graph(4, dup), Error);
  CHECK_THROWS_AS(Graph(4, out), Error);

  std::mt19937_64 rng(7);
  const Graph g = test::random_graph(rng, 40, 0.3);
  std::size_t counted = 0;
  for (Vertex u = 0; u < 40; ++u) {
    CHECK_FALSE(g.adjacent(u, u));
    for (Vertex v = 0; v < 40; ++v) {
      CHECK(g.adjacent(u, v) == g.adjacent(v, u));
      counted += g.adjacent(u, v) ? 1 : 0;
    }
  }
  CHECK(counted == 2 * g.edge_count());
  CHECK(g.edges().size() == g.edge_count());
}

TEST_CASE("partition validation and canonical order") {
  const Partition p(5, {vs(5, {3, 4}), vs(5, {1}), vs(5, {0, 2})});
  CHECK(p[0] == vs(5, {0, 2}));
  CHECK(p[1] == vs(5, {1}));
  CHECK(p[2] == vs(5, {3, 4}));
  CHECK(p.class_of(4) == 2);

  auto invalid = [](auto&& make) {
    try {
      make();
      return false;
    } catch (const Error& e) {
      return e.code() == ErrorCode::InvalidPartition;
    }
  };
  CHECK(invalid([] { Partition(4, {vs(4, {0, 1}), vs(4, {1, 2, 3})}); }));
  CHECK(invalid([] { Partition(4, {vs(4, {0, 1}), vs(4, {2})}); }));
  CHECK(invalid([] { Partition(4, {vs(4, {0, 1, 2, 3}), VertexSet(4)}); }));
  CHECK(invalid([] { Partition(4, {vs(5, {0, 1, 2, 3})}); }));

  CHECK(Partition::discrete(4).refines(Partition::trivial(4)));
  CHECK_FALSE(Partition::trivial(4).refines(Partition::discrete(4)));
  CHECK(Partition::from_labels({7, 7, 1, 1}) == Partition(4, {vs(4, {0, 1}), vs(4, {2, 3})}));
}

TEST_CASE("density examples") {
  CHECK(density(Graph::complete(4), vs(4, {0, 1}), vs(4, {2, 3})) == q(1));
  CHECK(density(Graph::empty(4), vs(4, {0, 3}), vs(4, {1})) == q(0));
  CHECK(density(Graph::complete(3), VertexSet::full(3), VertexSet::full(3)) == q(2, 3));
  CHECK(density(test::single_edge(), vs(4, {0, 1}), vs(4, {2, 3})) == q(1, 4));
  CHECK_THROWS_AS(density(Graph::complete(3), VertexSet(3), VertexSet::full(3)), Error);
}

TEST_CASE("energy examples") {
  CHECK(energy(Graph::complete(3), Partition::discrete(3)) == q(6));
  CHECK(energy(Graph::complete(3), Partition::trivial(3)) == q(4));
  CHECK(energy(test::cycle4(), Partition(4, {vs(4, {0, 2}), vs(4, {1, 3})})) == q(8));
  CHECK_THROWS_AS(energy(Graph::complete(3), Partition::trivial(4)), Error);
}

TEST_CASE("irregular mass examples") {
  using Pairs = std::vector<std::pair<VertexSet, VertexSet>>;
  CHECK(irregular_mass(Pairs{}) == 0);
  CHECK(irregular_mass(Pairs{{vs(4, {0, 1}), vs(4, {2, 3})}, {vs(4, {2, 3}), vs(4, {0, 1})}}) == 8);
  CHECK(irregular_mass(Pairs{{vs(4, {0}), vs(4, {1, 2, 3})}}) == 3);
}

TEST_CASE("density is symmetric and within [0,1]") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 2 + rng() % 30;
    const Graph g = test::random_graph(rng, n, 0.5);
    const VertexSet i = test::random_subset(rng, VertexSet::full(n), n);
    const VertexSet j = test::random_subset(rng, VertexSet::full(n), n);
    const Rational d = density(g, i, j);
    CHECK(d == density(g, j, i));
    CHECK(d >= q(0));
    CHECK(d <= q(1));
  }
}

TEST_CASE("energy bounds, discrete value and refinement monotonicity") {
  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const Graph g = test::random_graph(rng, n, 0.4);
    const Partition p = test::random_partition(rng, n, 6);
    const Partition r = test::random_refinement(rng, p, 3);
    const Rational ep = energy(g, p);
    const Rational er = energy(g, r);
    const auto n2 = q(static_cast<std::int64_t>(n * n));
    CHECK(ep >= q(0));
    CHECK(er <= n2);
    CHECK(er >= ep);
    CHECK(energy(g, Partition::discrete(n)) == q(2 * static_cast<std::int64_t>(g.edge_count())));
  }
}

TEST_CASE("energy equals the Frobenius norm of the explicit block average") {
  std::mt19937_64 rng(13);
  for (std::size_t n : {1, 2, 5, 17, 33, 64}) {
    for (int trial = 0; trial < 3; ++trial) {
      const Graph g = test::random_graph(rng, n, 0.5);
      const Partition p = test::random_partition(rng, n, 8);
      const auto a = oracle::DenseMatrix::adjacency(g);
      CHECK(oracle::frobenius_sq(oracle::project_partition(a, p)) == energy(g, p));
    }
  }
}
