#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "szreg/graph.hpp"
#include "szreg/partition.hpp"
#include "szreg/rational.hpp"
#include "szreg/regularity.hpp"

namespace szreg {

/// Splits each class into consecutive chunks of ⌈t⌉ vertices, t = ε n / |P|,
/// in ascending vertex order; the last chunk of a class holds the remainder
/// (< t vertices) and is dropped when empty. Classes smaller than ⌈t⌉ stay
/// whole. Throws BadEpsilon.
Partition balance_refine(const Partition& p, const Rational& eps);

/// The common chunk size ⌈ε n / |P|⌉ used by balance_refine.
std::size_t balance_chunk_size(const Partition& p, const Rational& eps);

struct BalanceCertificate {
  bool balanced = false;
  std::size_t class_size = 0;        // common size of the subcollection C
  std::vector<std::size_t> classes;  // indices into the partition
  std::uint64_t leftover = 0;        // |V \ ∪C|
};

/// Finds the equal-size subcollection covering the most vertices (ties go to
/// the smaller class size) and reports whether its leftover is ≤ ε n.
BalanceCertificate is_balanced(const Partition& p, const Rational& eps);

/// Splits s into atoms: two vertices share an atom iff they lie in exactly
/// the same members of c. Atoms come back in ascending order of their
/// smallest vertex. Duplicate members of c are ignored. Throws NotSubset.
std::vector<VertexSet> atom_partition(const VertexSet& s, const std::vector<VertexSet>& c);

/// Ordered class-index pair (a, b) standing for (P[a], P[b]).
using ClassPair = std::pair<std::size_t, std::size_t>;
using WitnessMap = std::map<ClassPair, PairWitness>;

/// Collects the witnesses of every irregular pair of a report.
WitnessMap witnesses_of(const RegularityReport& report);

/// Σ |I||J| over the witnessed pairs.
std::uint64_t witnessed_mass(const Partition& p, const WitnessMap& witnesses);

/// Refines every class K into the atoms of the witness sets that live in K
/// (x of pairs (K, ·) and y of pairs (·, K)).
///
/// Every witness is re-validated exactly first (InvalidWitness). On return the
/// following have been checked, and a violation is reported as
/// std::logic_error: the output refines p, every witness set is a union of
/// output classes, |Q| ≤ |P|·4^|P|, energy does not decrease, and when the
/// witnessed mass exceeds ε n² the energy rises by more than ε⁵ n².
Partition irregularity_refine(const Graph& g, const Partition& p, const Rational& eps,
                              const WitnessMap& witnesses);

/// |P| 4^|P|, saturating at UINT64_MAX.
std::uint64_t atom_refinement_size_bound(std::size_t classes);

} // namespace szreg
