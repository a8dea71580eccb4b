#include "szreg/generators.hpp"

#include <string>
#include <vector>

#include "szreg/error.hpp"

namespace szreg::gen {

namespace {

void require_probability(const Rational& p, const char* name) {
  if (p.sign() < 0 || p > Rational(1))
    throw Error(ErrorCode::BadParams, std::string(name) + " must lie in [0,1], got " + p.to_string());
}

} // namespace

bool Coin::flip(const Rational& p) {
  const std::uint64_t draw = engine_();
  // draw < p·2^64  <=>  draw·den < num·2^64
  mpz_class lhs = mpz_class(static_cast<unsigned long>(draw)) * p.denominator();
  mpz_class rhs = p.numerator() << 64;
  return lhs < rhs;
}

Graph gnp(std::size_t n, const Rational& p, std::uint64_t seed) {
  require_probability(p, "p");
  Coin coin(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin.flip(p))
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

Graph planted(std::size_t blocks, std::size_t block_size, const Rational& p_in, const Rational& p_out,
              std::uint64_t seed) {
  require_probability(p_in, "p_in");
  require_probability(p_out, "p_out");
  if (blocks == 0 || block_size == 0)
    throw Error(ErrorCode::BadParams, "planted model needs at least one block of at least one vertex");
  const std::size_t n = blocks * block_size;
  Coin coin(seed);
  std::vector<Edge> edges;
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (coin.flip(u / block_size == v / block_size ? p_in : p_out))
        edges.emplace_back(u, v);
  return Graph(n, edges);
}

} // namespace szreg::gen
