#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "szreg/graph.hpp"
#include "szreg/partition.hpp"
#include "szreg/rational.hpp"

namespace szreg {

/// Sub-pair (x, y) of a class pair (I, J) certifying ε-irregularity:
/// |x| > ε|I|, |y| > ε|J| and |d(x,y) − d(I,J)| > ε.
struct PairWitness {
  VertexSet x;
  VertexSet y;
  Rational d_xy;
  Rational d_ij;

  /// The same witness read for the transposed pair (J, I).
  PairWitness transposed() const { return {y, x, d_xy, d_ij}; }
};

/// Re-checks all witness conditions with exact arithmetic, including that the
/// recorded densities match the graph. Returns an explanation on failure.
std::optional<std::string> witness_defect(const Graph& g, const VertexSet& i, const VertexSet& j,
                                          const Rational& eps, const PairWitness& w);

/// |x||y| (d(x,y) − d(I,J))², the squared norm of the projection increment a
/// witness contributes on its block.
Rational witness_increment(const PairWitness& w);

enum class PairStatus { RegularCertified, IrregularWitnessed, UnknownTreatedAsRegular };

struct PairClassification {
  PairStatus status = PairStatus::RegularCertified;
  std::optional<PairWitness> witness; // set iff status == IrregularWitnessed

  static PairClassification regular() { return {PairStatus::RegularCertified, std::nullopt}; }
  static PairClassification unknown() { return {PairStatus::UnknownTreatedAsRegular, std::nullopt}; }
  static PairClassification irregular(PairWitness w) { return {PairStatus::IrregularWitnessed, std::move(w)}; }

  bool irregular() const noexcept { return status == PairStatus::IrregularWitnessed; }
};

enum class Strategy { Exhaustive, Heuristic, Auto };
enum class Verdict { Regular, Irregular, HeuristicallyRegular };

const char* to_string(PairStatus s) noexcept;
const char* to_string(Strategy s) noexcept;
const char* to_string(Verdict v) noexcept;
Strategy parse_strategy(std::string_view text);

inline constexpr std::size_t default_exhaustive_cutoff = 26;

/// Decides ε-regularity of (i, j) by enumerating every admissible X ⊆ i.
///
/// X runs over subsets with |X| > ε|i| by size descending, then
/// lexicographically. For each X the admissible Y are searched exactly: for a
/// fixed size k the extreme values of d(X,Y) are attained by the k columns with
/// most (fewest) neighbours in X, so the search decides existence without
/// enumerating Y, then extracts the lexicographically first violating Y of the
/// largest violating size. The returned witness is therefore the first one in
/// (size desc, lex) order over X then Y.
///
/// Throws TooLarge when |i| + |j| > cutoff, EmptySet, BadEpsilon (ε ≤ 0).
PairClassification check_pair_exhaustive(const Graph& g, const VertexSet& i, const VertexSet& j,
                                         const Rational& eps,
                                         std::size_t cutoff = default_exhaustive_cutoff);

/// Sound but incomplete search built on degree deviation. Never returns
/// RegularCertified; returns UnknownTreatedAsRegular when no candidate
/// validates. Throws EmptySet, BadEpsilon.
PairClassification find_witness_heuristic(const Graph& g, const VertexSet& i, const VertexSet& j,
                                          const Rational& eps);

struct RegularityReport {
  std::size_t num_classes = 0;
  std::vector<std::size_t> class_sizes;
  /// Row-major over ordered class pairs: entry a * num_classes + b is (P[a], P[b]).
  std::vector<PairClassification> classifications;
  std::uint64_t irregular_mass = 0;
  Rational threshold; // ε n²
  Verdict verdict = Verdict::Regular;

  const PairClassification& at(std::size_t a, std::size_t b) const {
    return classifications[a * num_classes + b];
  }
  std::size_t irregular_pair_count() const;
  std::size_t unknown_pair_count() const;
};

struct CheckOptions {
  Strategy strategy = Strategy::Auto;
  std::size_t cutoff = default_exhaustive_cutoff;
};

/// Classifies every ordered class pair of p (diagonal included) and compares
/// the witnessed mass Σ|I||J| against ε n². Pair (b, a) is reported as the
/// transpose of (a, b). Throws InvalidPartition, BadEpsilon.
RegularityReport check_partition(const Graph& g, const Partition& p, const Rational& eps,
                                 const CheckOptions& options = {});

void require_positive_epsilon(const Rational& eps);

} // namespace szreg
