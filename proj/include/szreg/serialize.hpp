#pragma once

#include <string>

#include <json.hpp>

#include "szreg/driver.hpp"
#include "szreg/refinement.hpp"
#include "szreg/regularity.hpp"

namespace szreg::serialize {

using nlohmann::json;

json vertex_list(const VertexSet& s);

/// {pair: [a, b], x: [...], y: [...], d_xy: "p/q", d_ij: "p/q"}
json witness_certificate(std::size_t a, std::size_t b, const PairWitness& w);

json report(const RegularityReport& report, const Rational& eps);
json balance(const BalanceCertificate& cert);
json irregularity_bound(const IrregularPairBound& bound);
json tower(const TowerBound& bound);

/// Header "iter,phase,num_classes,energy_num,energy_den,irregular_mass,
/// witnessed_mass,verdict", one row per step, '\n' line endings.
std::string trace_csv(const RunTrace& trace);
json trace_json(const RunTrace& trace);

} // namespace szreg::serialize
