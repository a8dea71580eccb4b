#pragma once

#include <cstddef>
#include <vector>

#include "szreg/graph.hpp"
#include "szreg/partition.hpp"
#include "szreg/rational.hpp"
#include "szreg/regularity.hpp"

// Brute-force reference implementations. Nothing here calls into the
// density, energy or pair-search code it is used to check.
namespace szreg::oracle {

inline constexpr std::size_t max_dimension = 256;

/// Square matrix of exact rationals, row-major.
class DenseMatrix {
public:
  DenseMatrix() = default;
  explicit DenseMatrix(std::size_t n);

  static DenseMatrix adjacency(const Graph& g);

  std::size_t dimension() const noexcept { return n_; }
  Rational& operator()(std::size_t r, std::size_t c) { return cells_[r * n_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return cells_[r * n_ + c]; }

  bool symmetric() const;

  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix&, const DenseMatrix&) = default;

private:
  std::size_t n_ = 0;
  std::vector<Rational> cells_;
};

/// Orthogonal projection onto matrices constant on i × j and zero elsewhere:
/// the average of m over i × j on that block. Throws EmptySet.
DenseMatrix project_block(const DenseMatrix& m, const VertexSet& i, const VertexSet& j);

/// Σ over ordered class pairs of project_block. Throws InvalidPartition.
DenseMatrix project_partition(const DenseMatrix& m, const Partition& p);

/// Σ of squared entries.
Rational frobenius_sq(const DenseMatrix& m);

/// Entrywise inner product ⟨a, b⟩ = Tr(aᵀ b).
Rational inner_product(const DenseMatrix& a, const DenseMatrix& b);

/// Re-decides ε-regularity of (i, j) by walking every subset pair as bit masks
/// in ascending numeric order, counting adjacent pairs directly.
/// Requires |i|, |j| ≤ 12 (TooLarge otherwise).
PairClassification brute_force_pair_check(const Graph& g, const VertexSet& i, const VertexSet& j,
                                          const Rational& eps);

} // namespace szreg::oracle
