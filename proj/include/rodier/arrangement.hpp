#ifndef RODIER_ARRANGEMENT_HPP
#define RODIER_ARRANGEMENT_HPP

#include <cstddef>
#include <cstdint>
#include <vector>

#include "rodier/levi.hpp"

namespace rodier {

using Sign = std::int8_t;  // +1 or -1

/// A relative Weyl chamber of Phi_M^0, owned by an element of W_M^0.
/// Chamber i is owned by rwg.small[i].
struct Chamber {
  std::size_t owner = 0;          // position in rwg.elements
  QVec interior_point;            // owner . p0
  std::vector<Sign> sign_profile; // per member of ld.phi_M0_positive
};

/// S: positive relative coroots, stored by their relative root (ascending index).
struct WallSet {
  std::vector<int> roots;
  std::size_t size() const { return roots.size(); }
  bool empty() const { return roots.empty(); }
};

/// Rejects members outside (Phi_M^0)^+; sorts and deduplicates.
WallSet make_wall_set(const LeviDatum& ld, std::vector<int> roots);

struct Component {
  int id = 0;
  std::vector<Sign> sign_vector;     // per member of S
  std::vector<std::size_t> chambers; // ascending chamber indices
};

/// p0 = sum of (Phi_M^0)^+; zero when Phi_M^0 is empty.
QVec dominant_point(const LeviDatum& ld);

/// One chamber per element of W_M^0, in the order of rwg.small.
std::vector<Chamber> enumerate_chambers(const LeviDatum& ld, const RelativeWeylGroup& rwg);

/// Sign of chamber c on the wall of alpha in (Phi_M^0)^+.
inline Sign chamber_sign(const LeviDatum& ld, const Chamber& c, int alpha) {
  return c.sign_profile[static_cast<std::size_t>(ld.small_position[static_cast<std::size_t>(alpha)])];
}

/// Groups chambers by their sign vector on S. Ids follow lexicographic order of the sign
/// vectors with + before -, so the all-plus component has id 0.
std::vector<Component> components(const LeviDatum& ld, const std::vector<Chamber>& chambers, const WallSet& s);

const Component& gamma_plus(const std::vector<Component>& comps);

/// Positive roots of Phi_M^0 made negative by w^{-1} w' (arguments are chamber indices).
std::vector<int> inversion_set(const LeviDatum& ld, const RelativeWeylGroup& rwg, std::size_t w, std::size_t w_prime);

enum class DescentChoice { kFirst, kLast };

/// Reduced word for w^{-1} w' in Delta_M^0 (entries are positions in ld.delta_M0),
/// built by repeatedly stripping a right descent; `choice` picks which one.
std::vector<int> minimal_gallery(const LeviDatum& ld, const RelativeWeylGroup& rwg, std::size_t w, std::size_t w_prime,
                                 DescentChoice choice = DescentChoice::kFirst);

/// Positive walls crossed, in order, by the gallery from chamber w along `word`.
std::vector<int> gallery_walls(const LeviDatum& ld, const RelativeWeylGroup& rwg, std::size_t w,
                               const std::vector<int>& word);

struct KernelImage {
  std::vector<std::size_t> jer;  // positions in rwg.elements, ascending
  std::vector<std::size_t> jim;
};

/// Closed form: an element lies in Jer when some S-wall separating w from w' has it on
/// the side of w. Chamber arguments are indices into `chambers`.
KernelImage kernel_image_partition(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                   const std::vector<Chamber>& chambers, std::size_t w, std::size_t w_prime,
                                   const WallSet& s);

/// Jim as the intersection of the one-step images along a gallery from w; a step across a
/// wall outside S is an isomorphism and keeps everything.
std::vector<std::size_t> gallery_image(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                       const std::vector<Chamber>& chambers, std::size_t w,
                                       const std::vector<int>& word, const WallSet& s);

/// Chamber of an arbitrary element of W_M (its W_M^0 part).
inline std::size_t chamber_of(const RelativeWeylGroup& rwg, std::size_t element) {
  return rwg.decomposition[element].first;
}

}  // namespace rodier

#endif  // RODIER_ARRANGEMENT_HPP
