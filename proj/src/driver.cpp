#include "szreg/driver.hpp"

#include <stdexcept>
#include <string>

#include "szreg/error.hpp"

namespace szreg {

const char* to_string(Phase p) noexcept { return p == Phase::Balance ? "balance" : "refine"; }

const char* to_string(RunStatus s) noexcept {
  switch (s) {
  case RunStatus::Regular: return "regular";
  case RunStatus::HeuristicallyRegular: return "heuristically_regular";
  case RunStatus::ClassBudgetExceeded: return "class_budget_exceeded";
  }
  return "?";
}

mpz_class refine_step_limit(const Rational& eps) {
  require_positive_epsilon(eps);
  return eps.pow(5).inverse().floor();
}

RunTrace regularize(const Graph& g, const Partition& p0, const Rational& eps, const RunConfig& config) {
  require_positive_epsilon(eps);
  if (p0.ground_size() != g.vertex_count())
    throw Error(ErrorCode::InvalidPartition, "initial partition ground size " + std::to_string(p0.ground_size()) +
                                                 " differs from graph order " + std::to_string(g.vertex_count()));

  RunTrace trace;
  trace.vertex_count = g.vertex_count();
  trace.epsilon = eps;
  trace.config = config;
  const CheckOptions options{config.strategy, config.cutoff};

  Partition current = p0;
  trace.final_partition = current;
  while (true) {
    // An already balanced partition is its own balanced refinement.
    Partition balanced = is_balanced(current, eps).balanced ? current : balance_refine(current, eps);
    if (balanced.size() > config.max_classes) {
      trace.status = RunStatus::ClassBudgetExceeded;
      break;
    }
    RegularityReport report = check_partition(g, balanced, eps, options);
    const BalanceCertificate cert = is_balanced(balanced, eps);
    trace.steps.push_back({Phase::Balance, balanced.size(), energy(g, balanced), report.irregular_mass, 0,
                           report.verdict});
    trace.final_partition = balanced;

    if (report.verdict != Verdict::Irregular) {
      if (!cert.balanced)
        throw std::logic_error("balancing refinement produced an unbalanced partition");
      trace.status = report.verdict == Verdict::Regular ? RunStatus::Regular : RunStatus::HeuristicallyRegular;
      trace.final_report = std::move(report);
      break;
    }

    const WitnessMap witnesses = witnesses_of(report);
    Partition refined = irregularity_refine(g, balanced, eps, witnesses);
    if (refined.size() > config.max_classes) {
      trace.status = RunStatus::ClassBudgetExceeded;
      trace.final_report = std::move(report);
      break;
    }
    trace.steps.push_back({Phase::Refine, refined.size(), energy(g, refined), report.irregular_mass,
                           witnessed_mass(balanced, witnesses), report.verdict});
    ++trace.refine_count;
    current = std::move(refined);
    trace.final_partition = current;
  }

  trace.final_balance = is_balanced(trace.final_partition, eps);
  if (trace.status != RunStatus::ClassBudgetExceeded && eps < Rational(1) && trace.final_balance.balanced) {
    trace.closing_bound =
        balanced_irregularity_bound(*trace.final_report, trace.final_balance.classes, g.vertex_count(), eps);
    if (!trace.closing_bound->holds)
      throw std::logic_error("irregular pairs inside the balanced subcollection exceed eps (1-eps)^-2 |C|^2");
  }

  if (auto problems = verify_trace(trace); !problems.empty())
    throw std::logic_error("trace invariant violated: " + problems.front());
  return trace;
}

std::vector<std::string> verify_trace(const RunTrace& trace) {
  std::vector<std::string> problems;
  const auto n = static_cast<std::int64_t>(trace.vertex_count);
  const Rational n2(n * n);
  const Rational mass_threshold = trace.epsilon * n2;
  const Rational increment = trace.epsilon.pow(5) * n2;

  bool all_heavy = true;
  std::size_t refines = 0;
  for (std::size_t s = 0; s < trace.steps.size(); ++s) {
    const TraceStep& step = trace.steps[s];
    const std::string where = "step " + std::to_string(s);
    if (step.energy > n2)
      problems.push_back(where + ": energy exceeds n^2");
    if (step.energy.sign() < 0)
      problems.push_back(where + ": negative energy");
    if (s > 0 && step.energy < trace.steps[s - 1].energy)
      problems.push_back(where + ": energy decreased");
    if (step.phase != Phase::Refine)
      continue;
    ++refines;
    const bool heavy = Rational(static_cast<std::int64_t>(step.witnessed_mass)) > mass_threshold;
    all_heavy = all_heavy && heavy;
    if (heavy && (s == 0 || !(step.energy - trace.steps[s - 1].energy > increment)))
      problems.push_back(where + ": refine increment not above eps^5 n^2");
  }
  if (refines != trace.refine_count)
    problems.push_back("refine_count disagrees with the recorded steps");
  if (all_heavy && mpz_class(static_cast<unsigned long>(trace.refine_count)) > refine_step_limit(trace.epsilon))
    problems.push_back("refine_count exceeds floor(eps^-5)");
  return problems;
}

TowerBound tower_bound(const Rational& eps, std::uint64_t p0_size, std::size_t digit_cap) {
  require_positive_epsilon(eps);
  if (p0_size == 0)
    throw Error(ErrorCode::BadParams, "initial partition size must be at least 1");

  TowerBound out;
  out.iterations = refine_step_limit(eps);
  const Rational factor = Rational(1) + eps.inverse();
  Rational x = factor * Rational(static_cast<std::int64_t>(p0_size));
  // log10(4) < 0.60206; 4^e has at most floor(0.60206 e) + 1 digits.
  const mpz_class exponent_cap = mpz_class(static_cast<unsigned long>(digit_cap)) * 100000 / 60206;
  for (mpz_class iter = 0; iter < out.iterations; ++iter) {
    const mpz_class e = x.ceil();
    if (e > exponent_cap)
      return out;
    mpz_class pow4;
    mpz_ui_pow_ui(pow4.get_mpz_t(), 4, e.get_ui());
    x = factor * x * Rational(pow4, 1);
    if (x.ceil().get_str().size() > digit_cap)
      return out;
  }
  out.value = x.ceil();
  return out;
}

IrregularPairBound irregular_pair_bound(std::uint64_t s, std::size_t class_size, std::size_t subcollection_size,
                                        std::size_t n, const Rational& eps) {
  if (eps.sign() <= 0 || eps >= Rational(1))
    throw Error(ErrorCode::BadEpsilon, "bound needs 0 < eps < 1, got " + eps.to_string());
  IrregularPairBound out;
  out.s = s;
  const Rational one_minus = Rational(1) - eps;
  const auto c = static_cast<std::int64_t>(subcollection_size);
  out.bound = eps / (one_minus * one_minus) * Rational(c * c);
  out.holds = Rational(static_cast<std::int64_t>(s)) <= out.bound;
  const auto t = static_cast<std::int64_t>(class_size);
  out.mass = Rational(static_cast<std::int64_t>(s) * t * t);
  out.mass_threshold = eps * Rational(static_cast<std::int64_t>(n * n));
  out.mass_holds = out.mass <= out.mass_threshold;
  return out;
}

IrregularPairBound balanced_irregularity_bound(const RegularityReport& report, const std::vector<std::size_t>& c,
                                               std::size_t n, const Rational& eps) {
  std::size_t t = 0;
  for (std::size_t k : c) {
    if (k >= report.num_classes)
      throw Error(ErrorCode::BadParams, "class index " + std::to_string(k) + " outside the report");
    if (t != 0 && report.class_sizes[k] != t)
      throw Error(ErrorCode::UnequalSizes, "subcollection classes differ in size");
    t = report.class_sizes[k];
  }
  std::uint64_t s = 0;
  for (std::size_t a : c)
    for (std::size_t b : c)
      if (report.at(a, b).irregular())
        ++s;
  return irregular_pair_bound(s, t, c.size(), n, eps);
}

} // namespace szreg
