#ifndef RODIER_POLES_HPP
#define RODIER_POLES_HPP

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rodier/arrangement.hpp"
#include "rodier/levi.hpp"

namespace rodier {

/// W_M-orbits on Phi_M^0, numbered by their smallest member. These are the keys of a
/// pole assignment ("orbit0", "orbit1", ...).
struct Orbits {
  std::vector<int> orbit_of;              // per relative root; -1 outside Phi_M^0
  std::vector<std::vector<int>> members;  // ascending
  std::size_t count() const { return members.size(); }
};

Orbits pole_orbits(const LeviDatum& ld, const RelativeWeylGroup& rwg);
std::string orbit_key(int orbit);
/// Inverse of orbit_key; throws InputError.
int parse_orbit_key(const std::string& key, const Orbits& orbits);

/// The character data. omega is an ambient vector of a_M^*. Either `poles` (orbit form) or
/// `explicit_S` is used.
struct InducingDatum {
  QVec omega;
  std::map<int, Rational> poles;
  std::optional<WallSet> explicit_S;
  bool assume_regular = false;
  bool assume_generic = false;
};

/// Throws InputError unless omega lies in a_M^* and pairs non-negatively with Delta_M.
void require_dominant(const LeviDatum& ld, const QVec& omega);

/// S = { alpha in (Phi_M^0)^+ : |<omega, alpha^vee>| = pole(orbit(alpha)) }.
WallSet derive_S(const LeviDatum& ld, const Orbits& orbits, const InducingDatum& datum);

/// Phi_S: the W_S-saturation of +-S, where W_S is generated by the reflections in S.
std::vector<int> generate_phi_S(const LeviDatum& ld, const WallSet& s);

/// True iff <omega, beta^vee> != 0 for every beta in phi_S.
bool check_regularity_CC(const LeviDatum& ld, const QVec& omega, const std::vector<int>& phi_S);

struct IndependenceCertificate {
  bool independent = true;
  int rank = 0;
  std::vector<QVec> echelon_basis;     // when independent
  std::vector<long long> dependency;   // primitive, first nonzero entry positive, when dependent
};

IndependenceCertificate verify_linear_independence(const std::vector<QVec>& vectors);
/// On the coroots of S.
IndependenceCertificate verify_linear_independence(const LeviDatum& ld, const WallSet& s);

/// S oriented by omega: each alpha^vee in S replaced by the sign making <omega, .> positive.
struct SPlus {
  std::vector<int> roots;  // relative roots (possibly negative ones)
  std::vector<int> orbit;  // W_M-orbit of each member
};

/// Requires <omega, alpha^vee> != 0 on S.
SPlus s_plus(const LeviDatum& ld, const Orbits& orbits, const QVec& omega, const WallSet& s);

/// <alpha, beta^vee> <= 0 for every pair of distinct equal-length members.
bool obtuseness_check(const LeviDatum& ld, const SPlus& splus);

/// W_S-orbits on phi_S (each ascending, ordered by smallest member).
std::vector<std::vector<int>> ws_orbits(const LeviDatum& ld, const WallSet& s, const std::vector<int>& phi_S);

/// Within each irreducible component of phi_S, two roots share a W_S-orbit iff they have the
/// same length.
bool orbits_match_lengths(const LeviDatum& ld, const std::vector<int>& phi_S,
                          const std::vector<std::vector<int>>& orbits);

struct StressViolation {
  std::string kind;
  std::uint64_t trial = 0;
  QVec omega;
  std::map<int, Rational> poles;
  WallSet s;
  std::string detail;
};

/// A CC-regular draw kept for downstream checks, one per distinct S.
struct StressSample {
  InducingDatum datum;
  WallSet s;
};

struct StressReport {
  std::string type;
  std::vector<int> theta;
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  std::size_t regular = 0;     // draws passing (CC)
  std::size_t independent = 0; // of those, S independent
  std::size_t max_s = 0;
  std::vector<StressViolation> violations;
  std::vector<StressSample> samples;
  double elapsed = 0.0;
};

struct StressOptions {
  std::size_t trials = 0;
  std::uint64_t seed = 0;
  int bound = 64;  // numerator and denominator bound
};

/// Random dominant omega and orbit poles; whenever (CC) holds, S must be independent,
/// |S| <= iota, S^+ obtuse, and W_S-orbits must follow root lengths.
StressReport independence_stress_test(const LeviDatum& ld, const RelativeWeylGroup& rwg, const StressOptions& options);

}  // namespace rodier

#endif  // RODIER_POLES_HPP
