#include <doctest.h>

#include <random>

#include "support.hpp"
#include "szreg/error.hpp"
#include "szreg/oracle.hpp"
#include "szreg/refinement.hpp"

using namespace szreg;
using szreg::test::q;
using szreg::test::vs;

namespace {

std::vector<std::size_t> sizes(const Partition& p) {
  std::vector<std::size_t> out;
  for (const auto& c : p.classes())
    out.push_back(c.size());
  return out;
}

Partition by_sizes(std::initializer_list<std::size_t> class_sizes) {
  std::vector<std::size_t> labels;
  std::size_t label = 0;
  for (std::size_t s : class_sizes) {
    labels.insert(labels.end(), s, label);
    ++label;
  }
  return Partition::from_labels(labels);
}

} // namespace

TEST_CASE("balance_refine examples") {
  SUBCASE("7 + 3 at eps 1/2") {
    const Partition p = by_sizes({7, 3});
    const Partition qp = balance_refine(p, q(1, 2));
    CHECK(balance_chunk_size(p, q(1, 2)) == 3);
    CHECK(sizes(qp) == std::vector<std::size_t>{3, 3, 1, 3});
    CHECK(qp[2] == vs(10, {6}));
    const auto cert = is_balanced(qp, q(1, 2));
    CHECK(cert.balanced);
    CHECK(cert.class_size == 3);
    CHECK(cert.leftover == 1);
  }
  SUBCASE("whole set at eps 1/2") {
    const Partition qp = balance_refine(Partition::trivial(10), q(1, 2));
    CHECK(sizes(qp) == std::vector<std::size_t>{5, 5});
    CHECK(is_balanced(qp, q(1, 2)).leftover == 0);
  }
  SUBCASE("whole set at eps 1") {
    CHECK(balance_refine(Partition::trivial(10), q(1)) == Partition::trivial(10));
  }
  SUBCASE("small eps gives singletons") {
    CHECK(balance_refine(Partition::trivial(10), q(1, 20)) == Partition::discrete(10));
  }
  SUBCASE("classes smaller than the chunk stay whole") {
    const Partition qp = balance_refine(by_sizes({9, 1}), q(1, 2));
    CHECK(sizes(qp) == std::vector<std::size_t>{3, 3, 3, 1});
  }
  CHECK_THROWS_AS(balance_refine(Partition::trivial(4), q(0)), Error);
}

TEST_CASE("is_balanced examples") {
  const auto a = is_balanced(by_sizes({3, 3, 3, 1}), q(1, 2));
  CHECK(a.balanced);
  CHECK(a.classes == std::vector<std::size_t>{0, 1, 2});
  CHECK(a.leftover == 1);

  const auto b = is_balanced(Partition::discrete(4), q(0));
  CHECK(b.balanced);
  CHECK(b.classes.size() == 4);
  CHECK(b.leftover == 0);

  const auto c = is_balanced(by_sizes({4, 3, 2, 1}), q(1, 10));
  CHECK_FALSE(c.balanced);
  CHECK(c.leftover == 6);

  // Covered mass ties (2·3 vs 3·2) go to the smaller size.
  const auto d = is_balanced(by_sizes({3, 3, 2, 2, 2}), q(1, 2));
  CHECK(d.class_size == 2);
}

TEST_CASE("balance_refine bounds on random instances") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 200;
    const Partition p = test::random_partition(rng, n, 12);
    const Rational eps = std::vector<Rational>{q(1, 10), q(1, 4), q(1, 2), q(1), q(2, 7)}[trial % 5];
    const Partition qp = balance_refine(p, eps);
    CHECK(qp.refines(p));
    CHECK(q(static_cast<std::int64_t>(qp.size())) <= (q(1) + eps.inverse()) * q(static_cast<std::int64_t>(p.size())));
    const auto cert = is_balanced(qp, eps);
    CHECK(cert.balanced);
    CHECK(q(static_cast<std::int64_t>(cert.leftover)) <= eps * q(static_cast<std::int64_t>(n)));
  }
}

TEST_CASE("atom_partition examples") {
  const VertexSet s = vs(8, {1, 2, 3, 4, 5, 6});
  const auto atoms = atom_partition(s, {vs(8, {1, 2, 3}), vs(8, {3, 4})});
  REQUIRE(atoms.size() == 4);
  CHECK(atoms[0] == vs(8, {1, 2}));
  CHECK(atoms[1] == vs(8, {3}));
  CHECK(atoms[2] == vs(8, {4}));
  CHECK(atoms[3] == vs(8, {5, 6}));

  CHECK(atom_partition(s, {}) == std::vector<VertexSet>{s});
  CHECK(atom_partition(s, {s}) == std::vector<VertexSet>{s});
  CHECK(atom_partition(s, {vs(8, {1, 2}), vs(8, {1, 2})}).size() == 2);
  CHECK_THROWS_AS(atom_partition(s, {vs(8, {0, 1})}), Error);
}

TEST_CASE("atoms match the explicit intersection construction") {
  std::mt19937_64 rng(32);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 40;
    const VertexSet s = test::random_subset(rng, VertexSet::full(n), n);
    std::vector<VertexSet> c(rng() % 5);
    for (auto& m : c)
      m = test::random_subset(rng, s, s.size());
    // For each D ⊆ C: ⋂_{X∈D} X ∩ ⋂_{Y∉D} (s∖Y), nonempty ones only.
    std::vector<VertexSet> expected;
    for (std::uint32_t d = 0; d < (1U << c.size()); ++d) {
      VertexSet cell = s;
      for (std::size_t m = 0; m < c.size(); ++m)
        cell = (d >> m & 1U) ? (cell & c[m]) : (cell - c[m]);
      if (!cell.empty())
        expected.push_back(cell);
    }
    auto actual = atom_partition(s, c);
    auto by_min = [](const VertexSet& a, const VertexSet& b) { return a.min() < b.min(); };
    std::sort(expected.begin(), expected.end(), by_min);
    CHECK(actual == expected);
  }
}

TEST_CASE("irregularity_refine on the single-edge example") {
  const Graph g = test::single_edge();
  const Partition p(4, {vs(4, {0, 1}), vs(4, {2, 3})});
  const Rational eps = q(2, 5);
  WitnessMap w;
  w.emplace(ClassPair{0, 1}, PairWitness{vs(4, {0}), vs(4, {2}), q(1), q(1, 4)});
  w.emplace(ClassPair{1, 0}, PairWitness{vs(4, {2}), vs(4, {0}), q(1), q(1, 4)});
  CHECK(witnessed_mass(p, w) == 8);

  const Partition refined = irregularity_refine(g, p, eps, w);
  CHECK(refined == Partition::discrete(4));
  CHECK(energy(g, p) == q(1, 2));
  CHECK(energy(g, refined) == q(2));
  const Rational increment = energy(g, refined) - energy(g, p);
  CHECK(increment == q(3, 2));
  CHECK(eps.pow(5) * q(16) == q(1024, 6250));
  CHECK(increment > q(16384, 100000));
  CHECK(refined.size() <= atom_refinement_size_bound(2));
  CHECK(atom_refinement_size_bound(2) == 32);

  CHECK(irregularity_refine(g, p, eps, {}) == p);
}

TEST_CASE("irregularity_refine rejects invalid witnesses") {
  const Graph g = test::single_edge();
  const Partition p(4, {vs(4, {0, 1}), vs(4, {2, 3})});
  auto code = [&](const WitnessMap& w) {
    try {
      irregularity_refine(g, p, q(2, 5), w);
    } catch (const Error& e) {
      return e.code();
    }
    return ErrorCode::BadParams;
  };
  CHECK(code({{ClassPair{0, 1}, PairWitness{vs(4, {0}), vs(4, {2}), q(1, 2), q(1, 4)}}}) ==
        ErrorCode::InvalidWitness);
  CHECK(code({{ClassPair{0, 1}, PairWitness{vs(4, {0, 1}), vs(4, {2}), q(1, 2), q(1, 4)}}}) ==
        ErrorCode::InvalidWitness);
  CHECK(code({{ClassPair{1, 0}, PairWitness{vs(4, {0}), vs(4, {2}), q(1), q(1, 4)}}}) ==
        ErrorCode::InvalidWitness);
  CHECK(code({{ClassPair{0, 5}, PairWitness{vs(4, {0}), vs(4, {2}), q(1), q(1, 4)}}}) ==
        ErrorCode::InvalidWitness);
  try {
    irregularity_refine(g, Partition::trivial(5), q(2, 5), {});
    FAIL("accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidPartition);
  }
}

TEST_CASE("refinement from checked witnesses obeys the energy identities") {
  std::mt19937_64 rng(33);
  int heavy = 0;
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 6 + rng() % 20;
    const Graph g = test::random_graph(rng, n, 0.5);
    const Partition p = test::random_partition(rng, n, 4);
    const Rational eps = trial % 2 == 0 ? q(1, 4) : q(1, 3);
    const auto report = check_partition(g, p, eps);
    const WitnessMap w = witnesses_of(report);
    const Partition refined = irregularity_refine(g, p, eps, w);

    CHECK(refined.refines(p));
    CHECK(refined.size() <= atom_refinement_size_bound(p.size()));
    for (const auto& [pair, wit] : w) {
      CHECK(witness_increment(wit) > eps.pow(4) * q(static_cast<std::int64_t>(p[pair.first].size() * p[pair.second].size())));
      for (const auto& cls : refined.classes()) {
        CHECK((!cls.intersects(wit.x) || cls.is_subset_of(wit.x)));
        CHECK((!cls.intersects(wit.y) || cls.is_subset_of(wit.y)));
      }
    }

    const auto a = oracle::DenseMatrix::adjacency(g);
    const auto ap = oracle::project_partition(a, p);
    const auto aq = oracle::project_partition(a, refined);
    const Rational gain = energy(g, refined) - energy(g, p);
    CHECK(gain == oracle::frobenius_sq(aq - ap));

    const auto n2 = q(static_cast<std::int64_t>(n * n));
    if (q(static_cast<std::int64_t>(witnessed_mass(p, w))) > eps * n2) {
      ++heavy;
      CHECK(gain > eps.pow(5) * n2);
    }
  }
  CHECK(heavy > 5);
}
