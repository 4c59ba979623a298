#include "rodier/constituents.hpp"

#include <algorithm>

#include "rodier/errors.hpp"

namespace rodier {

namespace {

std::vector<QVec> s_vectors(const LeviDatum& ld, const WallSet& s) {
  std::vector<QVec> out;
  for (int a : s.roots) out.push_back(ld.relative_roots[static_cast<std::size_t>(a)].vector);
  return out;
}

}  // namespace

DecompositionReport decompose_gps(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                  const std::vector<Chamber>& chambers, const WallSet& s,
                                  const InducingDatum& datum) {
  if (!datum.assume_regular) {
    throw InputError("assume_regular is not set: the decomposition holds only for regular inducing data "
                     "(trivial W_M-stabilizer), which cannot be verified from combinatorial input");
  }
  require_dominant(ld, datum.omega);
  // Re-validates membership in (Phi_M^0)^+.
  const WallSet checked = make_wall_set(ld, s.roots);

  DecompositionReport report;
  report.s = checked;
  report.omega = datum.omega;
  if (ld.is_full()) {
    report.no_induction = true;
    report.notes.push_back("no induction performed (M = G)");
  }
  report.components = components(ld, chambers, checked);
  report.s_independent = verify_linear_independence(ld, checked).independent;

  std::vector<int> component_of_chamber(chambers.size(), -1);
  for (const Component& c : report.components) {
    for (std::size_t ch : c.chambers) component_of_chamber[ch] = c.id;
  }
  report.constituents.resize(report.components.size());
  for (const Component& c : report.components) {
    auto& k = report.constituents[static_cast<std::size_t>(c.id)];
    k.component = c.id;
    k.sign_vector = c.sign_vector;
    k.chamber_count = c.chambers.size();
  }
  for (std::size_t e = 0; e < rwg.size(); ++e) {
    const int id = component_of_chamber[chamber_of(rwg, e)];
    report.constituents[static_cast<std::size_t>(id)].jacquet.push_back(e);
  }
  report.length = report.constituents.size();
  report.irreducible = report.length == 1;
  return report;
}

void flag_square_integrable(const LeviDatum& ld, DecompositionReport& report) {
  if (report.no_induction) return;
  const auto vs = s_vectors(ld, report.s);
  // span S = °a_M^* = a_M^*; S lies inside °a_M^* so a rank count suffices.
  if (ld.iota == 0 || rank_of<Rational>(vs, ld.rs->ambient_dim()) != ld.iota) return;
  report.constituents.front().flags.square_integrable = true;
}

void flag_tempered(const LeviDatum& ld, DecompositionReport& report) {
  if (report.no_induction) return;
  auto vs = s_vectors(ld, report.s);
  const int r = rank_of<Rational>(vs, ld.rs->ambient_dim());
  vs.push_back(report.omega);
  if (rank_of<Rational>(vs, ld.rs->ambient_dim()) != r) return;
  report.constituents.front().flags.tempered = true;
}

void flag_generic(const RelativeWeylGroup& rwg, DecompositionReport& report, bool assume_generic) {
  if (report.no_induction) return;
  if (!assume_generic) {
    report.notes.push_back("generic flag skipped: assume_generic not set");
    return;
  }
  auto& plus = report.constituents.front();
  plus.flags.generic = true;
  plus.flags.subrepresentation_witness = std::binary_search(plus.jacquet.begin(), plus.jacquet.end(), rwg.identity);
}

void aubert_pairing(DecompositionReport& report) {
  for (auto& k : report.constituents) {
    std::vector<Sign> negated(k.sign_vector.size());
    std::transform(k.sign_vector.begin(), k.sign_vector.end(), negated.begin(), [](Sign x) { return static_cast<Sign>(-x); });
    const auto it = std::find_if(report.constituents.begin(), report.constituents.end(),
                                 [&](const Constituent& o) { return o.sign_vector == negated; });
    if (it == report.constituents.end()) throw InvariantViolation("negated sign vector is not realized");
    k.aubert_dual = it->component;
  }
}

DecompositionReport full_report(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                const std::vector<Chamber>& chambers, const WallSet& s,
                                const InducingDatum& datum) {
  auto report = decompose_gps(ld, rwg, chambers, s, datum);
  flag_square_integrable(ld, report);
  flag_tempered(ld, report);
  flag_generic(rwg, report, datum.assume_generic);
  aubert_pairing(report);
  return report;
}

std::vector<int> smallest_levi_containing(const LeviDatum& ld, const WallSet& s) {
  const RootSystem& rs = *ld.rs;
  std::vector<bool> used(static_cast<std::size_t>(rs.rank()), false);
  for (int t : ld.theta) used[static_cast<std::size_t>(t)] = true;
  for (int b = 0; b < rs.size(); ++b) {
    const int r = ld.rel_of_root[static_cast<std::size_t>(b)];
    if (r < 0) continue;
    const int pos = ld.relative_roots[static_cast<std::size_t>(r)].positive() ? r : ld.relative_roots[static_cast<std::size_t>(r)].negation;
    if (!std::binary_search(s.roots.begin(), s.roots.end(), pos)) continue;
    const auto& c = rs.coefficients(b);
    for (std::size_t j = 0; j < c.size(); ++j) {
      if (c[j] != 0) used[j] = true;
    }
  }
  std::vector<int> out;
  for (int j = 0; j < rs.rank(); ++j) {
    if (used[static_cast<std::size_t>(j)]) out.push_back(j);
  }
  return out;
}

bool universal_irreducibility_check(const LeviDatum& ld, const WallSet& s, std::vector<int> theta_prime) {
  std::sort(theta_prime.begin(), theta_prime.end());
  for (int t : ld.theta) {
    if (!std::binary_search(theta_prime.begin(), theta_prime.end(), t)) {
      throw InputError("theta' must contain theta (label " + std::to_string(t) + " missing)");
    }
  }
  const auto needed = smallest_levi_containing(ld, s);
  return std::includes(theta_prime.begin(), theta_prime.end(), needed.begin(), needed.end());
}

}  // namespace rodier
