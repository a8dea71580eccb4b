#include "szreg/refinement.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <string>
#include <unordered_map>

#include "szreg/error.hpp"

namespace szreg {

std::size_t balance_chunk_size(const Partition& p, const Rational& eps) {
  require_positive_epsilon(eps);
  if (p.size() == 0)
    return 1;
  const Rational t = eps * Rational(static_cast<std::int64_t>(p.ground_size())) /
                     Rational(static_cast<std::int64_t>(p.size()));
  const mpz_class chunk = t.ceil();
  if (!chunk.fits_slong_p())
    return std::numeric_limits<std::size_t>::max();
  return std::max<std::size_t>(1, static_cast<std::size_t>(chunk.get_si()));
}

Partition balance_refine(const Partition& p, const Rational& eps) {
  const std::size_t chunk = balance_chunk_size(p, eps);
  const std::size_t n = p.ground_size();
  std::vector<VertexSet> out;
  for (const VertexSet& cls : p.classes()) {
    const auto members = cls.members();
    for (std::size_t start = 0; start < members.size(); start += chunk) {
      const std::size_t stop = std::min(members.size(), start + std::min(chunk, members.size()));
      out.emplace_back(n, std::span<const Vertex>(members.data() + start, stop - start));
      if (stop == members.size())
        break;
    }
  }
  return Partition(n, std::move(out));
}

BalanceCertificate is_balanced(const Partition& p, const Rational& eps) {
  std::map<std::size_t, std::vector<std::size_t>> by_size;
  for (std::size_t k = 0; k < p.size(); ++k)
    by_size[p[k].size()].push_back(k);

  BalanceCertificate best;
  std::uint64_t best_mass = 0;
  for (const auto& [size, indices] : by_size) {
    const std::uint64_t mass = static_cast<std::uint64_t>(size) * indices.size();
    // Ascending size iteration with strict '>' keeps the smaller size on ties.
    if (mass > best_mass || best.classes.empty()) {
      best_mass = mass;
      best.class_size = size;
      best.classes = indices;
    }
  }
  best.leftover = p.ground_size() - best_mass;
  best.balanced = Rational(static_cast<std::int64_t>(best.leftover)) <=
                  eps * Rational(static_cast<std::int64_t>(p.ground_size()));
  return best;
}

std::vector<VertexSet> atom_partition(const VertexSet& s, const std::vector<VertexSet>& c) {
  std::vector<VertexSet> unique;
  for (std::size_t m = 0; m < c.size(); ++m) {
    if (!c[m].is_subset_of(s))
      throw Error(ErrorCode::NotSubset, "member " + std::to_string(m) + " is not a subset of the ground set");
    if (std::find(unique.begin(), unique.end(), c[m]) == unique.end())
      unique.push_back(c[m]);
  }

  // Signature of a vertex: which members contain it, packed into words.
  const std::size_t words = (unique.size() + 63) / 64;
  struct SignatureHash {
    std::size_t operator()(const std::vector<std::uint64_t>& sig) const noexcept {
      std::size_t h = 1469598103934665603ULL;
      for (auto w : sig)
        h = (h ^ static_cast<std::size_t>(w)) * 1099511628211ULL;
      return h;
    }
  };
  std::unordered_map<std::vector<std::uint64_t>, std::size_t, SignatureHash> atom_of;
  std::vector<VertexSet> atoms;
  std::vector<std::uint64_t> sig(words);
  for (Vertex v : s.members()) {
    std::fill(sig.begin(), sig.end(), 0);
    for (std::size_t m = 0; m < unique.size(); ++m)
      if (unique[m].contains(v))
        sig[m / 64] |= std::uint64_t{1} << (m % 64);
    auto [it, inserted] = atom_of.try_emplace(sig, atoms.size());
    if (inserted)
      atoms.emplace_back(s.capacity());
    atoms[it->second].insert(v);
  }
  // Vertices are visited ascending, so atoms are already ordered by minimum.
  return atoms;
}

WitnessMap witnesses_of(const RegularityReport& report) {
  WitnessMap out;
  for (std::size_t a = 0; a < report.num_classes; ++a)
    for (std::size_t b = 0; b < report.num_classes; ++b)
      if (const auto& c = report.at(a, b); c.irregular())
        out.emplace(ClassPair{a, b}, *c.witness);
  return out;
}

std::uint64_t witnessed_mass(const Partition& p, const WitnessMap& witnesses) {
  std::uint64_t total = 0;
  for (const auto& [pair, _] : witnesses)
    total += static_cast<std::uint64_t>(p[pair.first].size()) * p[pair.second].size();
  return total;
}

std::uint64_t atom_refinement_size_bound(std::size_t classes) {
  constexpr auto cap = std::numeric_limits<std::uint64_t>::max();
  if (classes >= 31)
    return cap;
  const std::uint64_t pow4 = std::uint64_t{1} << (2 * classes);
  if (pow4 > cap / std::max<std::uint64_t>(classes, 1))
    return cap;
  return classes * pow4;
}

Partition irregularity_refine(const Graph& g, const Partition& p, const Rational& eps,
                              const WitnessMap& witnesses) {
  require_positive_epsilon(eps);
  const std::size_t n = g.vertex_count();
  if (p.ground_size() != n)
    throw Error(ErrorCode::InvalidPartition, "partition ground size differs from graph order");

  std::vector<std::vector<VertexSet>> members_in(p.size());
  for (const auto& [pair, w] : witnesses) {
    const auto [a, b] = pair;
    if (a >= p.size() || b >= p.size())
      throw Error(ErrorCode::InvalidWitness, "witness keyed to a class index outside the partition");
    if (auto defect = witness_defect(g, p[a], p[b], eps, w))
      throw Error(ErrorCode::InvalidWitness,
                  "pair (" + std::to_string(a) + ", " + std::to_string(b) + "): " + *defect);
    members_in[a].push_back(w.x);
    members_in[b].push_back(w.y);
  }

  std::vector<VertexSet> classes;
  for (std::size_t k = 0; k < p.size(); ++k)
    for (VertexSet& atom : atom_partition(p[k], members_in[k]))
      classes.push_back(std::move(atom));
  Partition q(n, std::move(classes));

  if (!q.refines(p))
    throw std::logic_error("atom refinement does not refine its input");
  if (q.size() > atom_refinement_size_bound(p.size()))
    throw std::logic_error("atom refinement exceeds |P| 4^|P| classes");
  for (const auto& [pair, w] : witnesses) {
    for (const VertexSet* set : {&w.x, &w.y}) {
      for (const VertexSet& cls : q.classes())
        if (cls.intersects(*set) && !cls.is_subset_of(*set))
          throw std::logic_error("witness set is not a union of refined classes");
    }
  }

  const Rational before = energy(g, p);
  const Rational after = energy(g, q);
  if (after < before)
    throw std::logic_error("energy decreased under refinement");
  const auto n2 = Rational(static_cast<std::int64_t>(n * n));
  if (Rational(static_cast<std::int64_t>(witnessed_mass(p, witnesses))) > eps * n2 &&
      !(after - before > eps.pow(5) * n2))
    throw std::logic_error("energy increment does not exceed eps^5 n^2 on an irregular partition");
  return q;
}

} // namespace szreg
