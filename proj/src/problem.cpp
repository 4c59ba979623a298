#include "rodier/problem.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "rodier/errors.hpp"
#include "rodier/weyl_cache.hpp"

namespace rodier {

using nlohmann::json;
using nlohmann::ordered_json;

namespace {

void only_keys(const json& j, const std::set<std::string>& allowed, const std::string& where) {
  if (!j.is_object()) throw InputError(where + " must be a JSON object");
  for (const auto& [key, value] : j.items()) {
    if (!allowed.count(key)) throw InputError("unknown field \"" + key + "\" in " + where);
  }
}

const json& required(const json& j, const std::string& key, const std::string& where) {
  const auto it = j.find(key);
  if (it == j.end()) throw InputError("missing field \"" + key + "\" in " + where);
  return *it;
}

std::vector<Rational> rational_vector(const json& j, const std::string& where) {
  if (!j.is_array()) throw InputError(where + " must be an array of rationals");
  std::vector<Rational> out;
  for (std::size_t i = 0; i < j.size(); ++i) out.push_back(rational_from_json(j[i], where + "[" + std::to_string(i) + "]"));
  return out;
}

ordered_json rationals_json(const std::vector<Rational>& v) {
  ordered_json out = ordered_json::array();
  for (const auto& x : v) out.push_back(x.str());
  return out;
}

bool boolean(const json& j, const std::string& key) {
  const auto it = j.find(key);
  if (it == j.end()) return false;
  if (!it->is_boolean()) throw InputError("field \"" + key + "\" must be a boolean");
  return it->get<bool>();
}

QVec coordinates_vector(const std::vector<Rational>& c) {
  QVec v(static_cast<Eigen::Index>(c.size()));
  for (std::size_t i = 0; i < c.size(); ++i) v(static_cast<Eigen::Index>(i)) = c[i];
  return v;
}

}  // namespace

Rational rational_from_json(const json& j, const std::string& where) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_string()) {
    try {
      return Rational::parse(j.get<std::string>());
    } catch (const InputError& e) {
      throw InputError(where + ": " + e.what());
    }
  }
  throw InputError(where + " must be a rational string \"p/q\"");
}

ProblemSpec parse_spec(const json& j) {
  only_keys(j, {"schema", "cartan", "levi", "inducing", "assume_regular", "assume_generic"}, "spec");
  const json& schema = required(j, "schema", "spec");
  if (!schema.is_number_integer() || schema.get<int>() != kSchemaVersion) {
    throw InputError("unsupported schema version (expected " + std::to_string(kSchemaVersion) + ")");
  }
  ProblemSpec spec;
  const json& cartan = required(j, "cartan", "spec");
  if (!cartan.is_string()) throw InputError("field \"cartan\" must be a string such as \"D6\"");
  spec.cartan = cartan.get<std::string>();
  const json& levi = required(j, "levi", "spec");
  if (!levi.is_array()) throw InputError("field \"levi\" must be an array of simple-root indices");
  for (const auto& x : levi) {
    if (!x.is_number_integer()) throw InputError("field \"levi\" must contain integers");
    spec.levi.push_back(x.get<int>());
  }
  const json& inducing = required(j, "inducing", "spec");
  only_keys(inducing, {"omega", "poles", "S"}, "inducing");
  if (inducing.contains("poles") == inducing.contains("S")) {
    throw InputError("inducing must give exactly one of \"poles\" (with \"omega\") or \"S\"");
  }
  if (inducing.contains("omega")) spec.omega = rational_vector(inducing["omega"], "inducing.omega");
  if (inducing.contains("poles")) {
    if (!spec.omega) throw InputError("inducing.poles requires inducing.omega");
    const json& poles = inducing["poles"];
    if (!poles.is_object()) throw InputError("inducing.poles must be an object mapping orbit keys to rationals");
    spec.poles.emplace();
    for (const auto& [key, value] : poles.items()) (*spec.poles)[key] = rational_from_json(value, "inducing.poles." + key);
  }
  if (inducing.contains("S")) {
    const json& s = inducing["S"];
    if (!s.is_array()) throw InputError("inducing.S must be an array of coordinate vectors");
    spec.s.emplace();
    for (std::size_t i = 0; i < s.size(); ++i) spec.s->push_back(rational_vector(s[i], "inducing.S[" + std::to_string(i) + "]"));
  }
  spec.assume_regular = boolean(j, "assume_regular");
  spec.assume_generic = boolean(j, "assume_generic");
  return spec;
}

ProblemSpec parse_spec_text(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InputError(std::string("spec is not valid JSON: ") + e.what());
  }
  return parse_spec(j);
}

ProblemSpec read_spec_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot read spec file " + path.string());
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_spec_text(buffer.str());
}

ordered_json emit_spec(const ProblemSpec& spec) {
  ordered_json j;
  j["schema"] = kSchemaVersion;
  j["cartan"] = spec.cartan;
  j["levi"] = spec.levi;
  ordered_json inducing = ordered_json::object();
  if (spec.omega) inducing["omega"] = rationals_json(*spec.omega);
  if (spec.poles) {
    ordered_json poles = ordered_json::object();
    for (const auto& [k, v] : *spec.poles) poles[k] = v.str();
    inducing["poles"] = poles;
  }
  if (spec.s) {
    ordered_json s = ordered_json::array();
    for (const auto& v : *spec.s) s.push_back(rationals_json(v));
    inducing["S"] = s;
  }
  j["inducing"] = inducing;
  j["assume_regular"] = spec.assume_regular;
  j["assume_generic"] = spec.assume_generic;
  return j;
}

Problem resolve(const ProblemSpec& spec, const std::optional<std::filesystem::path>& cache_dir) {
  Problem p;
  p.spec = spec;
  p.rs = build_root_system(CartanType::parse(spec.cartan));
  p.ld = make_levi(p.rs, spec.levi);
  const WeylGroup wg = cached_weyl(p.rs, cache_dir);
  p.rwg = relative_weyl_group(p.ld, wg);
  p.orbits = pole_orbits(p.ld, p.rwg);
  p.chambers = enumerate_chambers(p.ld, p.rwg);

  p.datum.assume_regular = spec.assume_regular;
  p.datum.assume_generic = spec.assume_generic;
  const std::size_t iota = static_cast<std::size_t>(p.ld.iota);
  if (spec.omega) {
    if (spec.omega->size() != iota) {
      throw InputError("inducing.omega has " + std::to_string(spec.omega->size()) + " coordinates but a_M^* has dimension " +
                       std::to_string(iota));
    }
    p.datum.omega = p.ld.from_coordinates(coordinates_vector(*spec.omega));
  } else {
    p.datum.omega = QVec::Zero(p.rs->ambient_dim());
  }
  if (spec.poles) {
    for (const auto& [key, value] : *spec.poles) p.datum.poles[parse_orbit_key(key, p.orbits)] = value;
    p.s = derive_S(p.ld, p.orbits, p.datum);
  } else {
    std::vector<int> roots;
    for (std::size_t i = 0; i < spec.s->size(); ++i) {
      const auto& c = (*spec.s)[i];
      const std::string where = "inducing.S[" + std::to_string(i) + "]";
      if (c.size() != iota) throw InputError(where + " has the wrong number of coordinates");
      const QVec v = p.ld.from_coordinates(coordinates_vector(c));
      if (v.isZero()) throw InputError(where + " is the zero vector");
      const auto ray = p.ld.find_ray(v);
      if (!ray || !p.ld.in_phi_M0(*ray) || !p.ld.relative_roots[static_cast<std::size_t>(*ray)].positive()) {
        throw InputError(where + " is not a positive coroot of Phi_M^0 (reducibility only occurs on (Phi_M^0)^+)");
      }
      roots.push_back(*ray);
    }
    p.s = make_wall_set(p.ld, roots);
    p.datum.explicit_S = p.s;
  }
  return p;
}

}  // namespace rodier
