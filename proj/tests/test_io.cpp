#include <doctest.h>

#include <random>
#include <sstream>

#include "support.hpp"
#include "szreg/error.hpp"
#include "szreg/io.hpp"

using namespace szreg;
using szreg::test::vs;

namespace {

ErrorCode parse_error_code(const std::string& text, bool partition = false, std::size_t n = 4) {
  std::istringstream in(text);
  try {
    if (partition)
      io::read_partition(in, n);
    else
      io::read_edge_list(in);
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("input accepted: " << text);
  return ErrorCode::BadParams;
}

std::string error_text(const std::string& text) {
  std::istringstream in(text);
  try {
    io::read_edge_list(in);
  } catch (const Error& e) {
    return e.what();
  }
  return {};
}

} // namespace

TEST_CASE("edge list reading") {
  std::istringstream in("0 2\n\n# comment\n1   3\n");
  const Graph g = io::read_edge_list(in);
  CHECK(g.vertex_count() == 4);
  CHECK(g.edge_count() == 2);
  CHECK(g.adjacent(2, 0));
  CHECK(g.adjacent(3, 1));
}

TEST_CASE("vertex header keeps isolated vertices") {
  std::istringstream in("# vertices 8\n");
  const Graph g = io::read_edge_list(in);
  CHECK(g.vertex_count() == 8);
  CHECK(g.edge_count() == 0);
}

TEST_CASE("edge list rejects loops, duplicates and junk with the line number") {
  CHECK(parse_error_code("0 1\n2 2\n") == ErrorCode::ParseError);
  CHECK(error_text("0 1\n2 2\n").find("line 2") != std::string::npos);
  CHECK(error_text("0 1\n1 2\n1 0\n").find("line 3") != std::string::npos);
  CHECK(parse_error_code("0 1 2\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("0 x\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("-1 2\n") == ErrorCode::ParseError);
  CHECK(parse_error_code("# vertices 3\n0 5\n") == ErrorCode::ParseError);
}

TEST_CASE("partition reading") {
  std::istringstream in("0: 0 1\n1: 2 3\n");
  const Partition p = io::read_partition(in, 4);
  CHECK(p == Partition(4, {vs(4, {0, 1}), vs(4, {2, 3})}));

  CHECK(parse_error_code("1: 0 1\n0: 2 3\n", true) == ErrorCode::ParseError);
  CHECK(parse_error_code("0: 0 1\n1: 2 9\n", true) == ErrorCode::ParseError);
  CHECK(parse_error_code("0: 0 1\n1:\n", true) == ErrorCode::ParseError);
  CHECK(parse_error_code("0 1 2 3\n", true) == ErrorCode::ParseError);
  CHECK(parse_error_code("0: 0 1\n1: 1 2 3\n", true) == ErrorCode::InvalidPartition);
  CHECK(parse_error_code("0: 0 1\n", true) == ErrorCode::InvalidPartition);
}

TEST_CASE("write then read reproduces graphs and partitions") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t n = 1 + rng() % 30;
    const Graph g = test::random_graph(rng, n, 0.3);
    const Partition p = test::random_partition(rng, n, 5);
    std::stringstream gs, ps;
    io::write_edge_list(gs, g);
    io::write_partition(ps, p);
    const Graph g2 = io::read_edge_list(gs);
    CHECK(g2.vertex_count() == n);
    CHECK(g2.edges() == g.edges());
    CHECK(io::read_partition(ps, n) == p);
  }
}
