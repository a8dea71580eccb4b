#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "szreg/graph.hpp"
#include "szreg/partition.hpp"
#include "szreg/rational.hpp"
#include "szreg/refinement.hpp"
#include "szreg/regularity.hpp"

namespace szreg {

struct RunConfig {
  Strategy strategy = Strategy::Auto;
  std::size_t cutoff = default_exhaustive_cutoff;
  std::size_t max_classes = 4096;
  std::uint64_t seed = 0; // recorded only; the iteration itself is deterministic
};

enum class Phase { Balance, Refine };
enum class RunStatus { Regular, HeuristicallyRegular, ClassBudgetExceeded };

const char* to_string(Phase p) noexcept;
const char* to_string(RunStatus s) noexcept;

/// One row of the trace.
///
/// A balance row describes the balanced partition and the regularity check run
/// on it. A refine row describes the partition produced by the atom refinement;
/// its irregular and witnessed masses are those of the check that triggered it.
struct TraceStep {
  Phase phase = Phase::Balance;
  std::size_t num_classes = 0;
  Rational energy;
  std::uint64_t irregular_mass = 0;
  std::uint64_t witnessed_mass = 0;
  Verdict verdict = Verdict::Regular;
};

/// Bound on the number s of irregular ordered pairs inside an equal-size
/// subcollection C of a regular partition: s ≤ ε (1−ε)⁻² |C|².
struct IrregularPairBound {
  std::uint64_t s = 0;
  Rational bound;           // ε (1−ε)⁻² |C|²
  bool holds = false;       // s ≤ bound
  Rational mass;            // s t²
  Rational mass_threshold;  // ε n²
  bool mass_holds = false;  // s t² ≤ ε n²
};

struct RunTrace {
  std::size_t vertex_count = 0;
  Rational epsilon;
  RunConfig config;
  std::vector<TraceStep> steps;
  std::size_t refine_count = 0;
  Partition final_partition;
  RunStatus status = RunStatus::Regular;
  /// Report of the last completed check (on final_partition unless the class
  /// budget cut the run short after a balance step).
  std::optional<RegularityReport> final_report;
  /// Balance certificate of final_partition and, for ε < 1 on a terminating
  /// run, the irregular-pair bound over its subcollection.
  BalanceCertificate final_balance;
  std::optional<IrregularPairBound> closing_bound;
};

/// Alternates balancing, check_partition and irregularity_refine until
/// the current partition is ε-balanced and passes the check, or until a step
/// would exceed config.max_classes. Throws InvalidPartition, BadEpsilon.
/// The returned trace has already passed verify_trace, and on a terminating
/// run with ε < 1 the closing bound has been checked to hold.
///
/// The balancing step keeps the current partition when it is already
/// ε-balanced and applies balance_refine otherwise.
RunTrace regularize(const Graph& g, const Partition& p0, const Rational& eps, const RunConfig& config = {});

/// ⌊ε⁻⁵⌋, the maximum number of refine steps that each add more than ε⁵ n².
mpz_class refine_step_limit(const Rational& eps);

/// Post-hoc checks of a trace: energy never decreases and never exceeds n²;
/// refine steps whose witnessed mass exceeds ε n² raise energy by more than
/// ε⁵ n²; if every refine step had such mass then refine_count ≤ ⌊ε⁻⁵⌋.
/// Returns one message per violated property (empty when the trace is sound).
std::vector<std::string> verify_trace(const RunTrace& trace);

/// Upper bound f_ε^m((1+ε⁻¹)|P0|) with f_ε(x) = (1+ε⁻¹) x 4^x and m = ⌊ε⁻⁵⌋.
///
/// Fractional x uses 4^⌈x⌉ so the result stays an upper bound; the final value
/// is rounded up. Once any 4^x would need more than digit_cap decimal digits
/// the bound is marked astronomical.
struct TowerBound {
  std::optional<mpz_class> value; // empty = astronomical
  mpz_class iterations;           // m
  bool astronomical() const noexcept { return !value.has_value(); }
};

TowerBound tower_bound(const Rational& eps, std::uint64_t p0_size, std::size_t digit_cap = 10000);

/// Direct evaluation from the counts. Throws BadEpsilon unless 0 < ε < 1.
IrregularPairBound irregular_pair_bound(std::uint64_t s, std::size_t class_size, std::size_t subcollection_size,
                                        std::size_t n, const Rational& eps);

/// Counts the witnessed pairs of report inside C² and evaluates the bound.
/// Throws UnequalSizes if the classes of c differ in size, BadEpsilon unless
/// 0 < ε < 1.
IrregularPairBound balanced_irregularity_bound(const RegularityReport& report, const std::vector<std::size_t>& c,
                                               std::size_t n, const Rational& eps);

} // namespace szreg
