#ifndef RODIER_PROBLEM_HPP
#define RODIER_PROBLEM_HPP

#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "rodier/arrangement.hpp"
#include "rodier/cartan.hpp"
#include "rodier/levi.hpp"
#include "rodier/poles.hpp"

namespace rodier {

inline constexpr int kSchemaVersion = 1;

/// Problem specification as read from JSON. Vectors are coordinates in a_M^* against the
/// emitted basis (see LeviDatum::coordinates).
struct ProblemSpec {
  std::string cartan;
  std::vector<int> levi;
  std::optional<std::vector<Rational>> omega;
  std::optional<std::map<std::string, Rational>> poles;
  std::optional<std::vector<std::vector<Rational>>> s;
  bool assume_regular = false;
  bool assume_generic = false;

  friend bool operator==(const ProblemSpec&, const ProblemSpec&) = default;
};

/// Throws InputError naming the offending field; unknown fields are rejected.
ProblemSpec parse_spec(const nlohmann::json& j);
ProblemSpec parse_spec_text(const std::string& text);
ProblemSpec read_spec_file(const std::filesystem::path& path);
nlohmann::ordered_json emit_spec(const ProblemSpec& spec);

/// Everything derived from a spec, ready for decomposition.
struct Problem {
  ProblemSpec spec;
  RootSystemPtr rs;
  LeviDatum ld;
  RelativeWeylGroup rwg;
  Orbits orbits;
  std::vector<Chamber> chambers;
  InducingDatum datum;
  WallSet s;
};

/// Builds the Levi data and S. Uses the Weyl-group cache when `cache_dir` is given.
/// Throws InputError (bad spec) or EnumerationTooLarge.
Problem resolve(const ProblemSpec& spec, const std::optional<std::filesystem::path>& cache_dir);

/// Rational from a JSON string "p/q", "p", or an integer.
Rational rational_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace rodier

#endif  // RODIER_PROBLEM_HPP
