#ifndef RODIER_LEVI_HPP
#define RODIER_LEVI_HPP

#include <cstddef>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "rodier/cartan.hpp"
#include "rodier/linalg.hpp"

namespace rodier {

/// A reduced relative root: the orthogonal projection of an absolute root onto
/// a_M^* = theta^perp within span(Phi), kept only when indivisible.
struct RelativeRoot {
  QVec vector;               // ambient coordinates
  std::vector<int> support;  // coefficients on the simple roots outside theta (Delta_M coordinates)
  int height = 0;
  int representative = -1;   // an absolute root projecting exactly onto `vector`
  int negation = -1;
  bool positive() const { return height > 0; }
};

/// Everything derived from a standard Levi, given by a subset theta of simple roots.
///
/// Relative roots are indexed in canonical order (relative height, then
/// lexicographic ambient coordinates). Index lists such as delta_M or phi_M0
/// refer to positions in `relative_roots`.
struct LeviDatum {
  RootSystemPtr rs;
  std::vector<int> theta;               // Bourbaki labels, ascending
  std::vector<int> complement;          // labels not in theta, ascending; indexes `support`
  std::vector<bool> in_phi_theta;       // per absolute root
  std::vector<QVec> a_M_basis;          // RREF basis of a_M^*
  QMat projector;                       // orthogonal projector onto a_M^*
  int iota = 0;                         // dim a_M^*

  std::vector<RelativeRoot> relative_roots;
  std::vector<int> rel_of_root;         // per absolute root; -1 on Phi_theta
  std::vector<int> multiplier_of_root;  // proj(beta) = multiplier * relative root

  std::vector<int> delta_M;
  std::vector<std::optional<WeylElement>> relative_reflections;  // omega_alpha when it normalizes M
  std::vector<WeylElement> reflection_candidates;                 // omega_alpha = w0^{M_alpha} w0^M
  std::vector<int> phi_M0;              // all of Phi_M^0
  std::vector<int> phi_M0_positive;
  std::vector<int> delta_M0;
  std::vector<int> small_position;      // position in phi_M0_positive, or -1
  std::vector<QVec> small_space;        // basis of the span of Phi_M^0

  const RootSystem& root_system() const { return *rs; }
  std::size_t rel_count() const { return relative_roots.size(); }
  bool in_phi_M0(int rel) const { return relative_reflections[static_cast<std::size_t>(rel)].has_value(); }
  bool is_full() const { return static_cast<int>(theta.size()) == rs->rank(); }

  /// alpha^vee = 2 alpha / (alpha, alpha).
  QVec coroot(int rel) const;
  /// Image of a relative root under an element of W_M.
  int act(const WeylElement& w, int rel) const;
  /// Relative root whose ray contains v (v != 0), if any.
  std::optional<int> find_ray(const QVec& v) const;
  /// Coordinates of v against the emitted basis: ((v, b_1), ..., (v, b_iota)).
  QVec coordinates(const QVec& v) const;
  /// Inverse of `coordinates` on a_M^*.
  QVec from_coordinates(const QVec& c) const;
  /// Does w stabilize theta as a set of simple roots?
  bool stabilizes_theta(const WeylElement& w) const;
};

LeviDatum make_levi(RootSystemPtr rs, std::vector<int> theta);

/// omega_alpha if it lies in W_M, nullopt otherwise. Throws InputError for an invalid index.
std::optional<WeylElement> relative_reflection(const LeviDatum& ld, int rel);

/// W_M as the setwise stabilizer of theta in W, split as W_M^0 and W_M^1.
struct RelativeWeylGroup {
  RootSystemPtr rs;
  std::vector<WeylElement> elements;                   // canonical order: order of appearance in W
  std::vector<std::vector<std::uint8_t>> words;        // reduced words in the absolute simple reflections
  std::size_t identity = 0;

  std::vector<std::size_t> small;                      // W_M^0, breadth-first over Delta_M^0 reflections
  std::vector<std::vector<int>> small_words;           // reduced words in Delta_M^0 (positions in delta_M0)
  std::vector<std::size_t> complement;                 // W_M^1
  std::vector<int> small_index;                        // per element: position in `small` or -1
  std::vector<int> complement_index;                   // per element: position in `complement` or -1
  std::vector<std::pair<std::size_t, std::size_t>> decomposition;  // w = small[first] * complement[second]

  std::size_t size() const { return elements.size(); }
  std::optional<std::size_t> find(const WeylElement& w) const;
  std::size_t index_of(const WeylElement& w) const;

  std::unordered_map<std::uint64_t, std::size_t> index;
};

/// Throws EnumerationTooLarge (propagated from the ambient enumeration) when W is too large.
RelativeWeylGroup relative_weyl_group(const LeviDatum& ld, const WeylGroup& weyl);

/// The pair (w^0, w^1) with w = w^0 w^1, found by peeling simple relative reflections
/// off the left until no simple root of Phi_M^0 is made negative by w^{-1}.
std::pair<WeylElement, WeylElement> decompose_element(const LeviDatum& ld, const WeylElement& w);

/// decompose_element over all of W_M, as positions (into rwg.small, into rwg.complement).
std::vector<std::pair<std::size_t, std::size_t>> decompose_W_M(const LeviDatum& ld, const RelativeWeylGroup& rwg);

}  // namespace rodier

#endif  // RODIER_LEVI_HPP
