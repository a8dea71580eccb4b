#include "szreg/serialize.hpp"

#include <sstream>

namespace szreg::serialize {

json vertex_list(const VertexSet& s) { return json(s.members()); }

json witness_certificate(std::size_t a, std::size_t b, const PairWitness& w) {
  return json{{"pair", {a, b}},
              {"x", vertex_list(w.x)},
              {"y", vertex_list(w.y)},
              {"d_xy", w.d_xy.to_string()},
              {"d_ij", w.d_ij.to_string()}};
}

json report(const RegularityReport& r, const Rational& eps) {
  json pairs = json::array();
  json witnesses = json::array();
  for (std::size_t a = 0; a < r.num_classes; ++a) {
    for (std::size_t b = 0; b < r.num_classes; ++b) {
      const PairClassification& c = r.at(a, b);
      pairs.push_back({{"pair", {a, b}}, {"status", to_string(c.status)}});
      if (c.witness)
        witnesses.push_back(witness_certificate(a, b, *c.witness));
    }
  }
  return json{{"epsilon", eps.to_string()},
              {"num_classes", r.num_classes},
              {"class_sizes", r.class_sizes},
              {"irregular_mass", r.irregular_mass},
              {"threshold", r.threshold.to_string()},
              {"irregular_pairs", r.irregular_pair_count()},
              {"unknown_pairs", r.unknown_pair_count()},
              {"verdict", to_string(r.verdict)},
              {"pairs", pairs},
              {"witnesses", witnesses}};
}

json balance(const BalanceCertificate& cert) {
  return json{{"balanced", cert.balanced},
              {"class_size", cert.class_size},
              {"classes", cert.classes},
              {"leftover", cert.leftover}};
}

json irregularity_bound(const IrregularPairBound& b) {
  return json{{"s", b.s},
              {"bound", b.bound.to_string()},
              {"holds", b.holds},
              {"mass", b.mass.to_string()},
              {"mass_threshold", b.mass_threshold.to_string()},
              {"mass_holds", b.mass_holds}};
}

json tower(const TowerBound& t) {
  return json{{"iterations", t.iterations.get_str()},
              {"astronomical", t.astronomical()},
              {"value", t.value ? json(t.value->get_str()) : json(nullptr)}};
}

std::string trace_csv(const RunTrace& trace) {
  std::ostringstream os;
  os << "iter,phase,num_classes,energy_num,energy_den,irregular_mass,witnessed_mass,verdict\n";
  for (std::size_t k = 0; k < trace.steps.size(); ++k) {
    const TraceStep& s = trace.steps[k];
    os << k << ',' << to_string(s.phase) << ',' << s.num_classes << ',' << s.energy.numerator().get_str() << ','
       << s.energy.denominator().get_str() << ',' << s.irregular_mass << ',' << s.witnessed_mass << ','
       << to_string(s.verdict) << '\n';
  }
  return os.str();
}

json trace_json(const RunTrace& trace) {
  json steps = json::array();
  for (const TraceStep& s : trace.steps)
    steps.push_back({{"phase", to_string(s.phase)},
                     {"num_classes", s.num_classes},
                     {"energy", s.energy.to_string()},
                     {"irregular_mass", s.irregular_mass},
                     {"witnessed_mass", s.witnessed_mass},
                     {"verdict", to_string(s.verdict)}});
  json final_classes = json::array();
  for (const VertexSet& c : trace.final_partition.classes())
    final_classes.push_back(vertex_list(c));
  return json{{"vertex_count", trace.vertex_count},
              {"epsilon", trace.epsilon.to_string()},
              {"strategy", to_string(trace.config.strategy)},
              {"cutoff", trace.config.cutoff},
              {"max_classes", trace.config.max_classes},
              {"seed", trace.config.seed},
              {"steps", steps},
              {"refine_count", trace.refine_count},
              {"status", to_string(trace.status)},
              {"final", final_classes}};
}

} // namespace szreg::serialize
