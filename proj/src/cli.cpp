#include "szreg/cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <optional>
#include <ostream>

#include "szreg/driver.hpp"
#include "szreg/error.hpp"
#include "szreg/generators.hpp"
#include "szreg/io.hpp"
#include "szreg/serialize.hpp"

namespace szreg::cli {

namespace {

struct GenArgs {
  std::string model;
  std::size_t n = 0;
  std::string p;
  std::size_t blocks = 0;
  std::size_t block_size = 0;
  std::string p_in;
  std::string p_out;
  std::uint64_t seed = 0;
  std::string out;
};

struct RegularizeArgs {
  std::string graph;
  std::string epsilon;
  std::string partition;
  std::string strategy = "auto";
  std::size_t max_classes = 4096;
  std::size_t cutoff = default_exhaustive_cutoff;
  std::uint64_t seed = 0;
  std::string trace;
  std::string out;
};

struct CheckArgs {
  std::string graph;
  std::string partition;
  std::string epsilon;
  std::string strategy = "auto";
  std::size_t cutoff = default_exhaustive_cutoff;
};

Rational parse_epsilon(const std::string& text) {
  Rational eps = Rational::parse(text);
  require_positive_epsilon(eps);
  return eps;
}

Rational parse_probability(const std::string& text, const char* flag) {
  if (text.empty())
    throw Error(ErrorCode::BadParams, std::string(flag) + " is required for this model");
  return Rational::parse(text);
}

int cmd_gen(const GenArgs& a, std::ostream& out, std::ostream& log) {
  Graph g;
  if (a.model == "gnp") {
    g = gen::gnp(a.n, parse_probability(a.p, "--p"), a.seed);
  } else if (a.model == "planted") {
    g = gen::planted(a.blocks, a.block_size, parse_probability(a.p_in, "--p-in"),
                     parse_probability(a.p_out, "--p-out"), a.seed);
  } else {
    throw Error(ErrorCode::BadParams, "unknown model '" + a.model + "' (expected gnp or planted)");
  }
  io::save_graph(a.out, g);
  log << "wrote " << g.vertex_count() << " vertices, " << g.edge_count() << " edges to " << a.out << '\n';
  out << serialize::json{{"vertices", g.vertex_count()}, {"edges", g.edge_count()}, {"out", a.out}}.dump() << '\n';
  return exit_code::ok;
}

int cmd_regularize(const RegularizeArgs& a, std::ostream& out, std::ostream& log) {
  const Graph g = io::load_graph(a.graph);
  const Rational eps = parse_epsilon(a.epsilon);
  const Partition p0 = a.partition.empty() ? Partition::trivial(g.vertex_count())
                                           : io::load_partition(a.partition, g.vertex_count());
  RunConfig config;
  config.strategy = parse_strategy(a.strategy);
  config.cutoff = a.cutoff;
  config.max_classes = a.max_classes;
  config.seed = a.seed;

  log << "regularizing n=" << g.vertex_count() << " |E|=" << g.edge_count() << " eps=" << eps
      << " strategy=" << a.strategy << '\n';
  const RunTrace trace = regularize(g, p0, eps, config);
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& s = trace.steps[k];
    log << "  [" << k << "] " << to_string(s.phase) << " classes=" << s.num_classes
        << " energy~" << s.energy.to_double() << " irregular_mass=" << s.irregular_mass << '\n';
  }
  log << "status: " << to_string(trace.status) << " after " << trace.refine_count << " refine step(s)\n";

  io::save_partition(a.out, trace.final_partition);
  if (!a.trace.empty()) {
    if (std::filesystem::path(a.trace).extension() == ".json")
      io::save_text(a.trace, serialize::trace_json(trace).dump(2) + "\n");
    else
      io::save_text(a.trace, serialize::trace_csv(trace));
  }

  serialize::json summary{{"status", to_string(trace.status)},
                          {"refine_count", trace.refine_count},
                          {"refine_step_limit", refine_step_limit(eps).get_str()},
                          {"num_classes", trace.final_partition.size()},
                          {"energy", trace.steps.empty() ? "0/1" : trace.steps.back().energy.to_string()},
                          {"balance", serialize::balance(trace.final_balance)},
                          {"tower_bound", serialize::tower(tower_bound(eps, std::max<std::size_t>(1, p0.size())))},
                          {"out", a.out}};
  summary["irregularity_bound"] =
      trace.closing_bound ? serialize::irregularity_bound(*trace.closing_bound) : serialize::json(nullptr);
  out << summary.dump() << '\n';

  switch (trace.status) {
  case RunStatus::Regular: return exit_code::ok;
  case RunStatus::HeuristicallyRegular: return exit_code::heuristically_regular;
  case RunStatus::ClassBudgetExceeded: return exit_code::class_budget_exceeded;
  }
  return exit_code::malformed;
}

int cmd_check(const CheckArgs& a, std::ostream& out, std::ostream& log) {
  const Graph g = io::load_graph(a.graph);
  const Partition p = io::load_partition(a.partition, g.vertex_count());
  const Rational eps = parse_epsilon(a.epsilon);
  const RegularityReport report = check_partition(g, p, eps, {parse_strategy(a.strategy), a.cutoff});
  const BalanceCertificate cert = is_balanced(p, eps);

  serialize::json doc{{"report", serialize::report(report, eps)}, {"balance", serialize::balance(cert)}};
  doc["irregularity_bound"] = nullptr;
  if (cert.balanced && eps < Rational(1))
    doc["irregularity_bound"] = serialize::irregularity_bound(
        balanced_irregularity_bound(report, cert.classes, g.vertex_count(), eps));
  out << doc.dump(2) << '\n';

  log << "verdict: " << to_string(report.verdict) << ", irregular mass " << report.irregular_mass << " vs threshold "
      << report.threshold << ", " << (cert.balanced ? "balanced" : "unbalanced") << '\n';
  if (report.verdict == Verdict::Irregular || !cert.balanced)
    return exit_code::irregular_or_unbalanced;
  return report.verdict == Verdict::Regular ? exit_code::ok : exit_code::heuristically_regular;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& log) {
  CLI::App app{"Energy-increment regularity partitions of finite graphs"};
  app.require_subcommand(1);

  GenArgs gen_args;
  auto* gen = app.add_subcommand("gen", "generate a random graph as an edge list");
  gen->add_option("--model", gen_args.model, "gnp or planted")->required();
  gen->add_option("--n", gen_args.n, "vertex count (gnp)");
  gen->add_option("--p", gen_args.p, "edge probability (gnp), p/q or decimal");
  gen->add_option("--blocks", gen_args.blocks, "number of blocks (planted)");
  gen->add_option("--block-size", gen_args.block_size, "vertices per block (planted)");
  gen->add_option("--p-in", gen_args.p_in, "edge probability inside a block (planted)");
  gen->add_option("--p-out", gen_args.p_out, "edge probability across blocks (planted)");
  gen->add_option("--seed", gen_args.seed, "PRNG seed")->required();
  gen->add_option("--out", gen_args.out, "output edge list")->required();

  RegularizeArgs reg_args;
  auto* reg = app.add_subcommand("regularize", "compute an eps-balanced eps-regular refinement");
  reg->add_option("--graph", reg_args.graph, "input edge list")->required();
  reg->add_option("--epsilon", reg_args.epsilon, "eps as p/q or decimal")->required();
  reg->add_option("--partition", reg_args.partition, "initial partition (default: one class)");
  reg->add_option("--strategy", reg_args.strategy, "exhaustive, heuristic or auto");
  reg->add_option("--max-classes", reg_args.max_classes, "class budget");
  reg->add_option("--cutoff", reg_args.cutoff, "exhaustive search cutoff on |I|+|J|");
  reg->add_option("--seed", reg_args.seed, "recorded in the trace");
  reg->add_option("--trace", reg_args.trace, "trace output (.json for JSON, CSV otherwise)");
  reg->add_option("--out", reg_args.out, "final partition output")->required();

  CheckArgs check_args;
  auto* chk = app.add_subcommand("check", "check a partition for eps-regularity and eps-balance");
  chk->add_option("--graph", check_args.graph, "input edge list")->required();
  chk->add_option("--partition", check_args.partition, "partition to check")->required();
  chk->add_option("--epsilon", check_args.epsilon, "eps as p/q or decimal")->required();
  chk->add_option("--strategy", check_args.strategy, "exhaustive, heuristic or auto");
  chk->add_option("--cutoff", check_args.cutoff, "exhaustive search cutoff on |I|+|J|");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return exit_code::ok;
  } catch (const CLI::ParseError& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::malformed;
  }

  try {
    if (gen->parsed())
      return cmd_gen(gen_args, out, log);
    if (reg->parsed())
      return cmd_regularize(reg_args, out, log);
    return cmd_check(check_args, out, log);
  } catch (const Error& e) {
    log << "error: " << e.what() << '\n';
    return exit_code::malformed;
  }
}

} // namespace szreg::cli
