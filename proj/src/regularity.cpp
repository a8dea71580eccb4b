#include "szreg/regularity.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

#include "szreg/error.hpp"

namespace szreg {

namespace {

/// Integer violation thresholds for a fixed |X| = s and |Y| = k: a column sum
/// S = e(X, Y) violates iff S > high or S <= low.
struct Band {
  std::int64_t high;
  std::int64_t low;
};

Band band_for(const Rational& d_ij, const Rational& eps, std::size_t s, std::size_t k) {
  const Rational cells(static_cast<std::int64_t>(s * k));
  const Rational upper = (d_ij + eps) * cells;
  const Rational lower = (d_ij - eps) * cells;
  return {upper.floor().get_si(), lower.ceil().get_si() - 1};
}

/// Smallest admissible size: the least integer strictly greater than ε·size.
std::size_t min_admissible(const Rational& eps, std::size_t size) {
  const mpz_class f = (eps * Rational(static_cast<std::int64_t>(size))).floor();
  return static_cast<std::size_t>(f.get_si()) + 1;
}

/// Given per-column counts c[v] = |N(col v) ∩ X| for a fixed X of size s,
/// returns the positions of the first violating column set in (size desc,
/// lex) order, or nothing when no admissible column set violates.
class ColumnSearch {
public:
  ColumnSearch(std::size_t columns, std::size_t min_size) : columns_(columns), min_size_(min_size) {}

  template <class BandOf>
  std::optional<std::vector<std::size_t>> first_violation(const std::vector<std::int64_t>& c,
                                                          BandOf&& band_of) const {
    if (min_size_ > columns_)
      return std::nullopt;
    std::vector<std::int64_t> sorted = c;
    std::sort(sorted.begin(), sorted.end(), std::greater<>());
    std::vector<std::int64_t> top(columns_ + 1, 0), bottom(columns_ + 1, 0);
    for (std::size_t k = 0; k < columns_; ++k) {
      top[k + 1] = top[k] + sorted[k];
      bottom[k + 1] = bottom[k] + sorted[columns_ - 1 - k];
    }
    for (std::size_t k = columns_; k >= min_size_; --k) {
      const Band band = band_of(k);
      if (top[k] > band.high || bottom[k] <= band.low)
        return lex_first(c, k, band);
      if (k == 0)
        break;
    }
    return std::nullopt;
  }

private:
  // Can `need` more columns drawn from positions > after, added to sum, violate?
  bool completable(const std::vector<std::int64_t>& c, std::size_t after, std::size_t need,
                   std::int64_t sum, const Band& band) const {
    std::vector<std::int64_t> pool(c.begin() + static_cast<std::ptrdiff_t>(after), c.end());
    if (pool.size() < need)
      return false;
    std::sort(pool.begin(), pool.end());
    std::int64_t lo = sum, hi = sum;
    for (std::size_t t = 0; t < need; ++t) {
      lo += pool[t];
      hi += pool[pool.size() - 1 - t];
    }
    return hi > band.high || lo <= band.low;
  }

  std::vector<std::size_t> lex_first(const std::vector<std::int64_t>& c, std::size_t k,
                                     const Band& band) const {
    std::vector<std::size_t> chosen;
    std::int64_t sum = 0;
    std::size_t next = 0;
    while (chosen.size() < k) {
      const std::size_t need_after = k - chosen.size() - 1;
      bool placed = false;
      for (std::size_t p = next; p + need_after < columns_; ++p) {
        if (completable(c, p + 1, need_after, sum + c[p], band)) {
          chosen.push_back(p);
          sum += c[p];
          next = p + 1;
          placed = true;
          break;
        }
      }
      if (!placed)
        throw std::logic_error("column search lost feasibility");
    }
    return chosen;
  }

  std::size_t columns_;
  std::size_t min_size_;
};

void require_nonempty(const VertexSet& i, const VertexSet& j) {
  if (i.empty() || j.empty())
    throw Error(ErrorCode::EmptySet, "pair classes must be nonempty");
}

VertexSet pick(std::size_t n, const std::vector<Vertex>& members, const std::vector<std::size_t>& positions) {
  VertexSet s(n);
  for (std::size_t p : positions)
    s.insert(members[p]);
  return s;
}

PairWitness make_witness(const Graph& g, VertexSet x, VertexSet y, const Rational& d_ij) {
  Rational d_xy = density(g, x, y);
  return {std::move(x), std::move(y), std::move(d_xy), d_ij};
}

void assert_sound(const Graph& g, const VertexSet& i, const VertexSet& j, const Rational& eps,
                  const PairWitness& w) {
  if (auto defect = witness_defect(g, i, j, eps, w))
    throw std::logic_error("internal witness failed validation: " + *defect);
}

/// Exact best-Y search for one fixed X. Returns the first violating Y in
/// (size desc, lex) order over subsets of j.
std::optional<VertexSet> best_partner(const Graph& g, const VertexSet& x, const std::vector<Vertex>& cols,
                                      const Rational& d_ij, const Rational& eps) {
  const std::size_t s = x.size();
  if (s == 0)
    return std::nullopt;
  std::vector<std::int64_t> c(cols.size());
  for (std::size_t v = 0; v < cols.size(); ++v)
    c[v] = static_cast<std::int64_t>(g.neighbours(cols[v]).intersection_size(x));
  ColumnSearch search(cols.size(), min_admissible(eps, cols.size()));
  auto hit = search.first_violation(c, [&](std::size_t k) { return band_for(d_ij, eps, s, k); });
  if (!hit)
    return std::nullopt;
  return pick(g.vertex_count(), cols, *hit);
}

} // namespace

void require_positive_epsilon(const Rational& eps) {
  if (eps.sign() <= 0)
    throw Error(ErrorCode::BadEpsilon, "epsilon must be positive, got " + eps.to_string());
}

const char* to_string(PairStatus s) noexcept {
  switch (s) {
  case PairStatus::RegularCertified: return "regular_certified";
  case PairStatus::IrregularWitnessed: return "irregular_witnessed";
  case PairStatus::UnknownTreatedAsRegular: return "unknown_treated_as_regular";
  }
  return "?";
}

const char* to_string(Strategy s) noexcept {
  switch (s) {
  case Strategy::Exhaustive: return "exhaustive";
  case Strategy::Heuristic: return "heuristic";
  case Strategy::Auto: return "auto";
  }
  return "?";
}

const char* to_string(Verdict v) noexcept {
  switch (v) {
  case Verdict::Regular: return "regular";
  case Verdict::Irregular: return "irregular";
  case Verdict::HeuristicallyRegular: return "heuristically_regular";
  }
  return "?";
}

Strategy parse_strategy(std::string_view text) {
  if (text == "exhaustive")
    return Strategy::Exhaustive;
  if (text == "heuristic")
    return Strategy::Heuristic;
  if (text == "auto")
    return Strategy::Auto;
  throw Error(ErrorCode::BadParams, "unknown strategy '" + std::string(text) + "'");
}

std::optional<std::string> witness_defect(const Graph& g, const VertexSet& i, const VertexSet& j,
                                          const Rational& eps, const PairWitness& w) {
  if (w.x.capacity() != g.vertex_count() || w.y.capacity() != g.vertex_count())
    return "witness sets keyed to the wrong ground size";
  if (w.x.empty() || w.y.empty())
    return "witness sets must be nonempty";
  if (!w.x.is_subset_of(i))
    return "x is not a subset of I";
  if (!w.y.is_subset_of(j))
    return "y is not a subset of J";
  const auto size = [](const VertexSet& s) { return Rational(static_cast<std::int64_t>(s.size())); };
  if (!(size(w.x) > eps * size(i)))
    return "|x| <= eps |I|";
  if (!(size(w.y) > eps * size(j)))
    return "|y| <= eps |J|";
  if (density(g, w.x, w.y) != w.d_xy)
    return "recorded d(x,y) does not match the graph";
  if (density(g, i, j) != w.d_ij)
    return "recorded d(I,J) does not match the graph";
  if (!((w.d_xy - w.d_ij).abs() > eps))
    return "|d(x,y) - d(I,J)| <= eps";
  return std::nullopt;
}

Rational witness_increment(const PairWitness& w) {
  const Rational gap = w.d_xy - w.d_ij;
  return Rational(static_cast<std::int64_t>(w.x.size() * w.y.size())) * gap * gap;
}

PairClassification check_pair_exhaustive(const Graph& g, const VertexSet& i, const VertexSet& j,
                                         const Rational& eps, std::size_t cutoff) {
  require_nonempty(i, j);
  require_positive_epsilon(eps);
  const std::size_t a = i.size();
  const std::size_t b = j.size();
  if (a + b > cutoff || a > 62)
    throw Error(ErrorCode::TooLarge, "|I| + |J| = " + std::to_string(a + b) + " exceeds exhaustive cutoff " +
                                         std::to_string(cutoff));

  const std::size_t x_min = min_admissible(eps, a);
  const std::size_t y_min = min_admissible(eps, b);
  if (x_min > a || y_min > b)
    return PairClassification::regular();

  const auto rows = i.members();
  const auto cols = j.members();
  const Rational d_ij = density(g, i, j);

  // Column v's neighbourhood inside i, as a bit mask over row positions.
  std::vector<std::uint64_t> col_mask(b, 0);
  for (std::size_t v = 0; v < b; ++v)
    for (std::size_t r = 0; r < a; ++r)
      if (g.adjacent(cols[v], rows[r]))
        col_mask[v] |= std::uint64_t{1} << r;

  std::vector<std::vector<Band>> bands(a + 1);
  for (std::size_t s = x_min; s <= a; ++s) {
    bands[s].resize(b + 1);
    for (std::size_t k = y_min; k <= b; ++k)
      bands[s][k] = band_for(d_ij, eps, s, k);
  }

  ColumnSearch search(b, y_min);
  std::vector<std::int64_t> c(b);
  std::vector<std::size_t> combo;
  for (std::size_t s = a; s >= x_min; --s) {
    combo.resize(s);
    std::iota(combo.begin(), combo.end(), std::size_t{0});
    while (true) {
      std::uint64_t xmask = 0;
      for (std::size_t r : combo)
        xmask |= std::uint64_t{1} << r;
      for (std::size_t v = 0; v < b; ++v)
        c[v] = std::popcount(col_mask[v] & xmask);
      auto hit = search.first_violation(c, [&](std::size_t k) { return bands[s][k]; });
      if (hit) {
        PairWitness w = make_witness(g, pick(g.vertex_count(), rows, combo),
                                     pick(g.vertex_count(), cols, *hit), d_ij);
        assert_sound(g, i, j, eps, w);
        return PairClassification::irregular(std::move(w));
      }
      // Next s-combination of {0..a-1} in lexicographic order.
      std::size_t t = s;
      while (t > 0 && combo[t - 1] == a - s + t - 1)
        --t;
      if (t == 0)
        break;
      ++combo[t - 1];
      for (std::size_t u = t; u < s; ++u)
        combo[u] = combo[u - 1] + 1;
    }
    if (s == 0)
      break;
  }
  return PairClassification::regular();
}

PairClassification find_witness_heuristic(const Graph& g, const VertexSet& i, const VertexSet& j,
                                          const Rational& eps) {
  require_nonempty(i, j);
  require_positive_epsilon(eps);
  const std::size_t n = g.vertex_count();
  const std::size_t a = i.size();
  const std::size_t b = j.size();
  const std::size_t x_min = min_admissible(eps, a);
  const std::size_t y_min = min_admissible(eps, b);
  if (x_min > a || y_min > b)
    return PairClassification::unknown();

  const auto rows = i.members();
  const auto cols = j.members();
  const Rational d_ij = density(g, i, j);
  const Rational half_eps = eps / 2;
  const Rational bj(static_cast<std::int64_t>(b));

  std::vector<std::size_t> degree(a);
  VertexSet x_high(n), x_low(n);
  for (std::size_t r = 0; r < a; ++r) {
    degree[r] = g.neighbours(rows[r]).intersection_size(j);
    const Rational d_row(static_cast<std::int64_t>(degree[r]), static_cast<std::int64_t>(b));
    if (d_row > d_ij + half_eps)
      x_high.insert(rows[r]);
    else if (d_row < d_ij - half_eps)
      x_low.insert(rows[r]);
  }

  auto try_pair = [&](const VertexSet& x, const VertexSet& y) -> std::optional<PairWitness> {
    if (x.empty() || y.empty())
      return std::nullopt;
    PairWitness w = make_witness(g, x, y, d_ij);
    if (witness_defect(g, i, j, eps, w))
      return std::nullopt;
    return w;
  };

  // Columns seen by more (resp. fewer) than half of a row set.
  auto majority = [&](const VertexSet& x, bool high) {
    VertexSet y(n);
    for (Vertex v : cols) {
      const std::size_t hits = g.neighbours(v).intersection_size(x);
      if (high ? 2 * hits > x.size() : 2 * hits < x.size())
        y.insert(v);
    }
    return y;
  };

  const VertexSet& whole_j = j;
  for (const auto& [x, y] : {std::pair{x_high, whole_j}, std::pair{x_low, whole_j},
                             std::pair{x_high, majority(x_high, true)},
                             std::pair{x_low, majority(x_low, false)}}) {
    if (auto w = try_pair(x, y))
      return PairClassification::irregular(std::move(*w));
  }

  // Row candidates: the deviating sets, every admissible prefix of the rows
  // sorted by degree (both directions), and each column's neighbourhood in i
  // and its complement. Column candidates mirror this. Each candidate is
  // paired with its exact best partner on the other side.
  auto prefixes = [&](const std::vector<Vertex>& side, const std::vector<std::size_t>& deg, std::size_t min_size) {
    std::vector<std::size_t> order(side.size());
    std::iota(order.begin(), order.end(), std::size_t{0});
    std::stable_sort(order.begin(), order.end(), [&](std::size_t l, std::size_t r) { return deg[l] > deg[r]; });
    std::vector<VertexSet> out;
    for (int dir = 0; dir < 2; ++dir) {
      VertexSet prefix(n);
      for (std::size_t t = 0; t < side.size(); ++t) {
        prefix.insert(side[dir == 0 ? order[t] : order[side.size() - 1 - t]]);
        if (t + 1 >= min_size)
          out.push_back(prefix);
      }
    }
    return out;
  };
  auto neighbourhoods = [&](const std::vector<Vertex>& seeds, const VertexSet& within, std::size_t min_size) {
    std::vector<VertexSet> out;
    for (Vertex u : seeds) {
      VertexSet near = g.neighbours(u) & within;
      VertexSet far = within - near;
      for (VertexSet* c : {&near, &far})
        if (c->size() >= min_size)
          out.push_back(std::move(*c));
    }
    return out;
  };

  std::vector<std::size_t> col_degree(b);
  for (std::size_t v = 0; v < b; ++v)
    col_degree[v] = g.neighbours(cols[v]).intersection_size(i);

  std::vector<VertexSet> row_candidates{x_high, x_low};
  for (auto& c : prefixes(rows, degree, x_min))
    row_candidates.push_back(std::move(c));
  for (auto& c : neighbourhoods(cols, i, x_min))
    row_candidates.push_back(std::move(c));
  for (const VertexSet& x : row_candidates) {
    if (x.size() < x_min)
      continue;
    if (auto y = best_partner(g, x, cols, d_ij, eps))
      if (auto w = try_pair(x, *y))
        return PairClassification::irregular(std::move(*w));
  }

  std::vector<VertexSet> col_candidates = prefixes(cols, col_degree, y_min);
  for (auto& c : neighbourhoods(rows, j, y_min))
    col_candidates.push_back(std::move(c));
  for (const VertexSet& y : col_candidates) {
    if (auto x = best_partner(g, y, rows, d_ij, eps))
      if (auto w = try_pair(*x, y))
        return PairClassification::irregular(std::move(*w));
  }
  return PairClassification::unknown();
}

std::size_t RegularityReport::irregular_pair_count() const {
  return static_cast<std::size_t>(std::count_if(classifications.begin(), classifications.end(),
                                                [](const auto& c) { return c.irregular(); }));
}

std::size_t RegularityReport::unknown_pair_count() const {
  return static_cast<std::size_t>(std::count_if(classifications.begin(), classifications.end(), [](const auto& c) {
    return c.status == PairStatus::UnknownTreatedAsRegular;
  }));
}

RegularityReport check_partition(const Graph& g, const Partition& p, const Rational& eps,
                                 const CheckOptions& options) {
  require_positive_epsilon(eps);
  if (p.ground_size() != g.vertex_count())
    throw Error(ErrorCode::InvalidPartition, "partition ground size " + std::to_string(p.ground_size()) +
                                                 " differs from graph order " +
                                                 std::to_string(g.vertex_count()));
  const std::size_t k = p.size();
  RegularityReport report;
  report.num_classes = k;
  report.classifications.resize(k * k);
  for (const auto& c : p.classes())
    report.class_sizes.push_back(c.size());

  for (std::size_t a = 0; a < k; ++a) {
    for (std::size_t b = a; b < k; ++b) {
      const bool small = p[a].size() + p[b].size() <= options.cutoff;
      const bool exhaustive = options.strategy == Strategy::Exhaustive ||
                              (options.strategy == Strategy::Auto && small);
      PairClassification c = exhaustive ? check_pair_exhaustive(g, p[a], p[b], eps, options.cutoff)
                                        : find_witness_heuristic(g, p[a], p[b], eps);
      if (a != b) {
        PairClassification mirror = c;
        if (mirror.witness)
          mirror.witness = mirror.witness->transposed();
        report.classifications[b * k + a] = std::move(mirror);
      }
      report.classifications[a * k + b] = std::move(c);
    }
  }

  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = 0; b < k; ++b)
      if (report.at(a, b).irregular())
        report.irregular_mass += static_cast<std::uint64_t>(report.class_sizes[a]) * report.class_sizes[b];

  const auto n = static_cast<std::int64_t>(g.vertex_count());
  report.threshold = eps * Rational(n * n);
  if (Rational(static_cast<std::int64_t>(report.irregular_mass)) > report.threshold)
    report.verdict = Verdict::Irregular;
  else if (report.unknown_pair_count() > 0)
    report.verdict = Verdict::HeuristicallyRegular;
  else
    report.verdict = Verdict::Regular;
  return report;
}

} // namespace szreg
