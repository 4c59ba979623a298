#include "rodier/report_io.hpp"

#include <algorithm>
#include <iomanip>
#include <sstream>

namespace rodier {

using nlohmann::ordered_json;

namespace {

ordered_json rationals(const QVec& v) {
  ordered_json out = ordered_json::array();
  for (Eigen::Index i = 0; i < v.size(); ++i) out.push_back(v(i).str());
  return out;
}

ordered_json primitive(const LeviDatum& ld, int rel) {
  return primitive_integral(ld.coordinates(ld.relative_roots[static_cast<std::size_t>(rel)].vector));
}

std::string primitive_string(const LeviDatum& ld, int rel) {
  const auto p = primitive_integral(ld.coordinates(ld.relative_roots[static_cast<std::size_t>(rel)].vector));
  std::string s = "(";
  for (std::size_t i = 0; i < p.size(); ++i) s += (i ? "," : "") + std::to_string(p[i]);
  return s + ")";
}

std::string small_word_string(const std::vector<int>& w) {
  if (w.empty()) return "1";
  std::string s;
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? " " : "") + std::string("r") + std::to_string(w[i]);
  return s;
}

ordered_json flags_json(const Flags& f) {
  ordered_json j;
  j["square_integrable"] = f.square_integrable;
  j["tempered"] = f.tempered;
  j["generic"] = f.generic;
  j["subrepresentation_witness"] = f.subrepresentation_witness;
  return j;
}

}  // namespace

std::string sign_string(const std::vector<Sign>& v) {
  std::string s;
  for (Sign x : v) s.push_back(x > 0 ? '+' : '-');
  return s;
}

ordered_json report_json(const Problem& p, const DecompositionReport& r, std::optional<double> seconds) {
  const LeviDatum& ld = p.ld;
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["tool"] = {{"name", "rodier"}, {"version", kToolVersion}};
  j["input"] = emit_spec(p.spec);

  ordered_json levi;
  levi["cartan"] = ld.rs->type().name();
  levi["theta"] = ld.theta;
  levi["iota"] = ld.iota;
  ordered_json basis = ordered_json::array();
  for (const QVec& b : ld.a_M_basis) basis.push_back(rationals(b));
  levi["basis"] = basis;
  ordered_json roots = ordered_json::array();
  for (std::size_t i = 0; i < ld.rel_count(); ++i) {
    const int rel = static_cast<int>(i);
    ordered_json e;
    e["index"] = rel;
    e["coordinates"] = rationals(ld.coordinates(ld.relative_roots[i].vector));
    e["primitive"] = primitive(ld, rel);
    e["positive"] = ld.relative_roots[i].positive();
    e["in_phi_M0"] = ld.in_phi_M0(rel);
    roots.push_back(e);
  }
  levi["relative_roots"] = roots;
  auto primitive_list = [&](const std::vector<int>& rels) {
    std::vector<int> sorted = rels;
    std::sort(sorted.begin(), sorted.end());
    ordered_json out = ordered_json::array();
    for (int a : sorted) out.push_back(primitive(ld, a));
    return out;
  };
  std::vector<int> all(ld.rel_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  levi["phi_M"] = primitive_list(all);
  levi["delta_M"] = primitive_list(ld.delta_M);
  levi["phi_M0"] = primitive_list(ld.phi_M0);
  levi["delta_M0"] = primitive_list(ld.delta_M0);
  ordered_json orbits = ordered_json::object();
  for (std::size_t o = 0; o < p.orbits.count(); ++o) orbits[orbit_key(static_cast<int>(o))] = p.orbits.members[o];
  levi["orbits"] = orbits;
  levi["W_M"] = p.rwg.size();
  levi["W_M0"] = p.rwg.small.size();
  levi["W_M1"] = p.rwg.complement.size();
  j["levi"] = levi;

  j["omega"] = rationals(ld.coordinates(r.omega));
  ordered_json s = ordered_json::array();
  for (int a : r.s.roots) {
    ordered_json e;
    e["root"] = a;
    e["coroot"] = rationals(ld.coordinates(ld.coroot(a)));
    s.push_back(e);
  }
  j["S"] = s;
  j["S_independent"] = r.s_independent;
  j["length"] = r.length;
  j["irreducible"] = r.irreducible;
  j["no_induction"] = r.no_induction;

  ordered_json cons = ordered_json::array();
  for (const Constituent& k : r.constituents) {
    ordered_json e;
    e["id"] = k.component;
    e["sign_vector"] = sign_string(k.sign_vector);
    e["chambers"] = k.chamber_count;
    e["jacquet_size"] = k.jacquet.size();
    ordered_json words = ordered_json::array();
    for (std::size_t el : k.jacquet) words.push_back(p.rwg.words[el]);
    e["jacquet"] = words;
    e["flags"] = flags_json(k.flags);
    e["aubert_dual"] = k.aubert_dual;
    cons.push_back(e);
  }
  j["constituents"] = cons;
  j["notes"] = r.notes;
  if (seconds) j["timing"] = {{"seconds", *seconds}};
  return j;
}

std::string report_text(const Problem& p, const DecompositionReport& r) {
  const LeviDatum& ld = p.ld;
  std::ostringstream out;
  out << "type " << ld.rs->type().name() << ", theta {";
  for (std::size_t i = 0; i < ld.theta.size(); ++i) out << (i ? "," : "") << ld.theta[i];
  out << "}, iota " << ld.iota << "\n";
  auto list = [&](const char* name, std::vector<int> rels) {
    std::sort(rels.begin(), rels.end());
    out << "  " << std::left << std::setw(9) << name;
    for (int a : rels) out << ' ' << primitive_string(ld, a);
    out << "\n";
  };
  std::vector<int> all(ld.rel_count());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = static_cast<int>(i);
  list("Phi_M", all);
  list("Delta_M", ld.delta_M);
  list("Phi_M0", ld.phi_M0);
  list("Delta_M0", ld.delta_M0);
  out << "  |W_M| = " << p.rwg.size() << " = " << p.rwg.small.size() << " x " << p.rwg.complement.size() << "\n";
  out << "S:";
  for (int a : r.s.roots) out << ' ' << primitive_string(ld, a);
  out << (r.s.empty() ? " (empty)" : "") << "\n";
  out << "length " << r.length << ", irreducible: " << (r.irreducible ? "true" : "false") << "\n";
  out << std::left << std::setw(4) << "id" << std::setw(10) << "signs" << std::setw(10) << "|jacquet|" << std::setw(8)
      << "aubert"
      << "flags\n";
  for (const Constituent& k : r.constituents) {
    std::string flags;
    if (k.flags.square_integrable) flags += "square-integrable ";
    if (k.flags.tempered) flags += "tempered ";
    if (k.flags.generic) flags += "generic ";
    if (k.flags.subrepresentation_witness) flags += "subrepresentation ";
    if (!flags.empty()) flags.pop_back();
    const std::string signs = k.sign_vector.empty() ? "." : sign_string(k.sign_vector);
    out << std::setw(4) << k.component << std::setw(10) << signs << std::setw(10) << k.jacquet.size() << std::setw(8)
        << k.aubert_dual << flags << "\n";
  }
  for (const auto& n : r.notes) out << "note: " << n << "\n";
  return out.str();
}

std::string report_dot(const Problem& p, const DecompositionReport& r) {
  const LeviDatum& ld = p.ld;
  const RelativeWeylGroup& rwg = p.rwg;
  std::ostringstream out;
  out << "graph chambers {\n";
  out << "  label=\"" << ld.rs->type().name() << " relative chambers\";\n";
  out << "  node [shape=box, fontname=\"monospace\"];\n";
  for (const Component& c : r.components) {
    out << "  subgraph cluster_" << c.id << " {\n";
    out << "    label=\"component " << c.id << " [" << sign_string(c.sign_vector) << "]\";\n";
    for (std::size_t ch : c.chambers) out << "    c" << ch << " [label=\"" << small_word_string(rwg.small_words[ch]) << "\"];\n";
    out << "  }\n";
  }
  for (std::size_t i = 0; i < p.chambers.size(); ++i) {
    const WeylElement& owner = rwg.elements[rwg.small[i]];
    for (std::size_t g = 0; g < ld.delta_M0.size(); ++g) {
      const int d = ld.delta_M0[g];
      const std::size_t j = static_cast<std::size_t>(rwg.small_index[rwg.index_of(owner * *ld.relative_reflections[static_cast<std::size_t>(d)])]);
      if (j <= i) continue;
      int wall = ld.act(owner, d);
      if (!ld.relative_roots[static_cast<std::size_t>(wall)].positive()) wall = ld.relative_roots[static_cast<std::size_t>(wall)].negation;
      const bool in_s = std::binary_search(r.s.roots.begin(), r.s.roots.end(), wall);
      out << "  c" << i << " -- c" << j << " [label=\"" << primitive_string(ld, wall) << "\"";
      if (in_s) out << ", color=red, penwidth=2.5";
      out << "];\n";
    }
  }
  out << "}\n";
  return out.str();
}

}  // namespace rodier
