#include "szreg/oracle.hpp"

#include <bit>
#include <string>

#include "szreg/error.hpp"

namespace szreg::oracle {

namespace {

void check_dimension(std::size_t n) {
  if (n > max_dimension)
    throw Error(ErrorCode::TooLarge, "oracle matrices are capped at " + std::to_string(max_dimension));
}

void check_same(const DenseMatrix& a, const DenseMatrix& b) {
  if (a.dimension() != b.dimension())
    throw Error(ErrorCode::BadParams, "matrix dimensions differ");
}

} // namespace

DenseMatrix::DenseMatrix(std::size_t n) : n_(n), cells_(n * n) { check_dimension(n); }

DenseMatrix DenseMatrix::adjacency(const Graph& g) {
  const std::size_t n = g.vertex_count();
  DenseMatrix m(n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c)
      if (g.adjacent(static_cast<Vertex>(r), static_cast<Vertex>(c)))
        m(r, c) = Rational(1);
  return m;
}

bool DenseMatrix::symmetric() const {
  for (std::size_t r = 0; r < n_; ++r)
    for (std::size_t c = r + 1; c < n_; ++c)
      if ((*this)(r, c) != (*this)(c, r))
        return false;
  return true;
}

DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b) {
  check_same(a, b);
  DenseMatrix out = a;
  for (std::size_t k = 0; k < out.cells_.size(); ++k)
    out.cells_[k] += b.cells_[k];
  return out;
}

DenseMatrix operator-(const DenseMatrix& a, const DenseMatrix& b) {
  check_same(a, b);
  DenseMatrix out = a;
  for (std::size_t k = 0; k < out.cells_.size(); ++k)
    out.cells_[k] -= b.cells_[k];
  return out;
}

DenseMatrix project_block(const DenseMatrix& m, const VertexSet& i, const VertexSet& j) {
  if (i.empty() || j.empty())
    throw Error(ErrorCode::EmptySet, "block projection needs nonempty index sets");
  const auto rows = i.members();
  const auto cols = j.members();
  Rational sum;
  for (auto r : rows)
    for (auto c : cols)
      sum += m(r, c);
  const Rational average = sum / Rational(static_cast<std::int64_t>(rows.size() * cols.size()));
  DenseMatrix out(m.dimension());
  for (auto r : rows)
    for (auto c : cols)
      out(r, c) = average;
  return out;
}

DenseMatrix project_partition(const DenseMatrix& m, const Partition& p) {
  if (p.ground_size() != m.dimension())
    throw Error(ErrorCode::InvalidPartition, "partition ground size differs from matrix dimension");
  // Blocks of distinct class pairs are disjoint, so each projection is added
  // onto its own cells only.
  DenseMatrix out(m.dimension());
  for (const VertexSet& i : p.classes()) {
    for (const VertexSet& j : p.classes()) {
      const DenseMatrix block = project_block(m, i, j);
      for (auto r : i.members())
        for (auto c : j.members())
          out(r, c) += block(r, c);
    }
  }
  return out;
}

Rational frobenius_sq(const DenseMatrix& m) { return inner_product(m, m); }

Rational inner_product(const DenseMatrix& a, const DenseMatrix& b) {
  check_same(a, b);
  Rational total;
  for (std::size_t r = 0; r < a.dimension(); ++r)
    for (std::size_t c = 0; c < a.dimension(); ++c)
      if (a(r, c).sign() != 0 && b(r, c).sign() != 0)
        total += a(r, c) * b(r, c);
  return total;
}

PairClassification brute_force_pair_check(const Graph& g, const VertexSet& i, const VertexSet& j,
                                          const Rational& eps) {
  if (i.empty() || j.empty())
    throw Error(ErrorCode::EmptySet, "pair classes must be nonempty");
  if (eps.sign() <= 0)
    throw Error(ErrorCode::BadEpsilon, "epsilon must be positive");
  const auto rows = i.members();
  const auto cols = j.members();
  if (rows.size() > 12 || cols.size() > 12)
    throw Error(ErrorCode::TooLarge, "brute force is limited to classes of at most 12 vertices");

  auto count = [&](unsigned xmask, unsigned ymask) {
    std::int64_t e = 0;
    for (std::size_t r = 0; r < rows.size(); ++r)
      if (xmask >> r & 1U)
        for (std::size_t c = 0; c < cols.size(); ++c)
          if ((ymask >> c & 1U) && g.adjacent(rows[r], cols[c]))
            ++e;
    return e;
  };
  const unsigned full_x = (1U << rows.size()) - 1;
  const unsigned full_y = (1U << cols.size()) - 1;
  const auto a = static_cast<std::int64_t>(rows.size());
  const auto b = static_cast<std::int64_t>(cols.size());
  const Rational d_ij(count(full_x, full_y), a * b);

  for (unsigned xmask = 1; xmask <= full_x; ++xmask) {
    const auto xs = static_cast<std::int64_t>(std::popcount(xmask));
    if (!(Rational(xs) > eps * Rational(a)))
      continue;
    for (unsigned ymask = 1; ymask <= full_y; ++ymask) {
      const auto ys = static_cast<std::int64_t>(std::popcount(ymask));
      if (!(Rational(ys) > eps * Rational(b)))
        continue;
      const Rational d_xy(count(xmask, ymask), xs * ys);
      if ((d_xy - d_ij).abs() > eps) {
        PairWitness w{VertexSet(g.vertex_count()), VertexSet(g.vertex_count()), d_xy, d_ij};
        for (std::size_t r = 0; r < rows.size(); ++r)
          if (xmask >> r & 1U)
            w.x.insert(rows[r]);
        for (std::size_t c = 0; c < cols.size(); ++c)
          if (ymask >> c & 1U)
            w.y.insert(cols[c]);
        return PairClassification::irregular(std::move(w));
      }
    }
  }
  return PairClassification::regular();
}

} // namespace szreg::oracle
