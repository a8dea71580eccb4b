#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "szreg/graph.hpp"
#include "szreg/rational.hpp"

namespace szreg::gen {

/// Seeded coin: a 64-bit mt19937_64 draw r gives heads iff r < p·2⁶⁴, compared
/// exactly, so p = 0 and p = 1 are deterministic and results are portable.
class Coin {
public:
  explicit Coin(std::uint64_t seed) : engine_(seed) {}
  bool flip(const Rational& p);

private:
  std::mt19937_64 engine_;
};

/// Erdős–Rényi G(n, p): every pair u < v (lexicographic order) is an edge
/// with probability p. Throws BadParams unless 0 ≤ p ≤ 1.
Graph gnp(std::size_t n, const Rational& p, std::uint64_t seed);

/// Planted blocks of consecutive vertices: blocks × block_size vertices, pairs
/// inside a block are edges with probability p_in, pairs across with p_out.
Graph planted(std::size_t blocks, std::size_t block_size, const Rational& p_in, const Rational& p_out,
              std::uint64_t seed);

} // namespace szreg::gen
