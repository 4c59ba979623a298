#ifndef RODIER_CONSTITUENTS_HPP
#define RODIER_CONSTITUENTS_HPP

#include <cstddef>
#include <string>
#include <vector>

#include "rodier/arrangement.hpp"
#include "rodier/levi.hpp"
#include "rodier/poles.hpp"

namespace rodier {

struct Flags {
  bool square_integrable = false;
  bool tempered = false;
  bool generic = false;
  bool subrepresentation_witness = false;  // identity element lies in this Jacquet set
};

struct Constituent {
  int component = 0;
  std::vector<Sign> sign_vector;
  std::vector<std::size_t> jacquet;  // positions in rwg.elements, ascending
  std::size_t chamber_count = 0;
  Flags flags;
  int aubert_dual = -1;
};

struct DecompositionReport {
  WallSet s;
  QVec omega;
  std::vector<Component> components;
  std::vector<Constituent> constituents;
  std::size_t length = 0;
  bool irreducible = true;
  bool no_induction = false;  // theta = Delta
  bool s_independent = true;
  std::vector<std::string> notes;
};

/// One constituent per component of the S-arrangement, with its Jacquet set read off
/// from the chambers of the W_M^0 parts. Requires assume_regular and dominant omega.
DecompositionReport decompose_gps(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                  const std::vector<Chamber>& chambers, const WallSet& s,
                                  const InducingDatum& datum);

void flag_square_integrable(const LeviDatum& ld, DecompositionReport& report);
void flag_tempered(const LeviDatum& ld, DecompositionReport& report);
void flag_generic(const RelativeWeylGroup& rwg, DecompositionReport& report, bool assume_generic);
void aubert_pairing(DecompositionReport& report);

/// decompose_gps followed by every flag pass and the Aubert pairing.
DecompositionReport full_report(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                const std::vector<Chamber>& chambers, const WallSet& s,
                                const InducingDatum& datum);

/// Smallest theta' containing theta and every absolute root lying over a member of S.
std::vector<int> smallest_levi_containing(const LeviDatum& ld, const WallSet& s);

/// Whether every absolute root lying over a member of S (with Phi_theta) lies in Phi_{theta'}.
/// Throws InputError unless theta is contained in theta'.
bool universal_irreducibility_check(const LeviDatum& ld, const WallSet& s, std::vector<int> theta_prime);

}  // namespace rodier

#endif  // RODIER_CONSTITUENTS_HPP
