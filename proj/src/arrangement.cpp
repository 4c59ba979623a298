#include "rodier/arrangement.hpp"

#include <algorithm>
#include <map>

#include "rodier/errors.hpp"

namespace rodier {

namespace {

const WeylElement& omega_of(const LeviDatum& ld, int g) {
  return *ld.relative_reflections[static_cast<std::size_t>(ld.delta_M0[static_cast<std::size_t>(g)])];
}

int positive_side(const LeviDatum& ld, int rel) {
  const auto& r = ld.relative_roots[static_cast<std::size_t>(rel)];
  return r.positive() ? rel : r.negation;
}

// + sorts before -
int sign_rank(Sign s) { return s > 0 ? 0 : 1; }

}  // namespace

WallSet make_wall_set(const LeviDatum& ld, std::vector<int> roots) {
  for (int r : roots) {
    if (r < 0 || static_cast<std::size_t>(r) >= ld.rel_count()) {
      throw InputError("S member " + std::to_string(r) + " is not a relative root");
    }
    if (!ld.in_phi_M0(r) || !ld.relative_roots[static_cast<std::size_t>(r)].positive()) {
      throw InputError("S member is not a positive coroot of Phi_M^0 (reducibility only occurs on (Phi_M^0)^+)");
    }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return WallSet{std::move(roots)};
}

QVec dominant_point(const LeviDatum& ld) {
  QVec p = QVec::Zero(ld.rs->ambient_dim());
  for (int a : ld.phi_M0_positive) p += ld.relative_roots[static_cast<std::size_t>(a)].vector;
  return p;
}

std::vector<Chamber> enumerate_chambers(const LeviDatum& ld, const RelativeWeylGroup& rwg) {
  const QVec p0 = dominant_point(ld);
  std::vector<Chamber> out;
  out.reserve(rwg.small.size());
  for (std::size_t owner : rwg.small) {
    Chamber c;
    c.owner = owner;
    c.interior_point = apply(*ld.rs, rwg.elements[owner], p0);
    c.sign_profile.reserve(ld.phi_M0_positive.size());
    for (int a : ld.phi_M0_positive) {
      const Rational v = c.interior_point.dot(ld.relative_roots[static_cast<std::size_t>(a)].vector);
      if (v.is_zero()) throw InvariantViolation("chamber interior point lies on a wall");
      c.sign_profile.push_back(static_cast<Sign>(v.sign()));
    }
    out.push_back(std::move(c));
  }
  return out;
}

std::vector<Component> components(const LeviDatum& ld, const std::vector<Chamber>& chambers, const WallSet& s) {
  for (int a : s.roots) {
    if (a < 0 || static_cast<std::size_t>(a) >= ld.rel_count() || ld.small_position[static_cast<std::size_t>(a)] < 0) {
      throw InputError("S member is not a positive coroot of Phi_M^0");
    }
  }
  std::map<std::vector<int>, std::vector<std::size_t>> groups;
  for (std::size_t i = 0; i < chambers.size(); ++i) {
    std::vector<int> key;
    key.reserve(s.size());
    for (int a : s.roots) key.push_back(sign_rank(chamber_sign(ld, chambers[i], a)));
    groups[key].push_back(i);
  }
  std::vector<Component> out;
  for (auto& [key, members] : groups) {
    Component c;
    c.id = static_cast<int>(out.size());
    for (int k : key) c.sign_vector.push_back(k == 0 ? Sign{1} : Sign{-1});
    c.chambers = std::move(members);
    out.push_back(std::move(c));
  }
  return out;
}

const Component& gamma_plus(const std::vector<Component>& comps) {
  if (comps.empty()) throw InvariantViolation("no components");
  const Component& c = comps.front();
  if (!std::all_of(c.sign_vector.begin(), c.sign_vector.end(), [](Sign x) { return x > 0; })) {
    throw InvariantViolation("the all-plus sign vector is not realized");
  }
  return c;
}

std::vector<int> inversion_set(const LeviDatum& ld, const RelativeWeylGroup& rwg, std::size_t w, std::size_t w_prime) {
  const WeylElement u = rwg.elements[rwg.small[w]].inverse() * rwg.elements[rwg.small[w_prime]];
  std::vector<int> out;
  for (int a : ld.phi_M0_positive) {
    if (!ld.relative_roots[static_cast<std::size_t>(ld.act(u, a))].positive()) out.push_back(a);
  }
  return out;
}

std::vector<int> minimal_gallery(const LeviDatum& ld, const RelativeWeylGroup& rwg, std::size_t w, std::size_t w_prime,
                                 DescentChoice choice) {
  WeylElement u = rwg.elements[rwg.small[w]].inverse() * rwg.elements[rwg.small[w_prime]];
  std::vector<int> reversed;
  while (!u.is_identity()) {
    if (reversed.size() > ld.phi_M0_positive.size()) throw InvariantViolation("gallery longer than |(Phi_M^0)^+|");
    int pick = -1;
    for (int g = 0; g < static_cast<int>(ld.delta_M0.size()); ++g) {
      const int d = ld.delta_M0[static_cast<std::size_t>(g)];
      if (ld.relative_roots[static_cast<std::size_t>(ld.act(u, d))].positive()) continue;
      pick = g;
      if (choice == DescentChoice::kFirst) break;
    }
    if (pick < 0) throw InvariantViolation("element of W_M^0 without right descent");
    u = u * omega_of(ld, pick);
    reversed.push_back(pick);
  }
  return {reversed.rbegin(), reversed.rend()};
}

std::vector<int> gallery_walls(const LeviDatum& ld, const RelativeWeylGroup& rwg, std::size_t w,
                               const std::vector<int>& word) {
  WeylElement c = rwg.elements[rwg.small[w]];
  std::vector<int> walls;
  for (int g : word) {
    walls.push_back(positive_side(ld, ld.act(c, ld.delta_M0[static_cast<std::size_t>(g)])));
    c = c * omega_of(ld, g);
  }
  return walls;
}

KernelImage kernel_image_partition(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                   const std::vector<Chamber>& chambers, std::size_t w, std::size_t w_prime,
                                   const WallSet& s) {
  std::vector<int> separating;
  for (int a : s.roots) {
    if (chamber_sign(ld, chambers[w], a) != chamber_sign(ld, chambers[w_prime], a)) separating.push_back(a);
  }
  KernelImage out;
  for (std::size_t e = 0; e < rwg.size(); ++e) {
    const Chamber& c = chambers[chamber_of(rwg, e)];
    const bool same_side = std::any_of(separating.begin(), separating.end(), [&](int a) {
      return chamber_sign(ld, c, a) == chamber_sign(ld, chambers[w], a);
    });
    (same_side ? out.jer : out.jim).push_back(e);
  }
  return out;
}

std::vector<std::size_t> gallery_image(const LeviDatum& ld, const RelativeWeylGroup& rwg,
                                       const std::vector<Chamber>& chambers, std::size_t w,
                                       const std::vector<int>& word, const WallSet& s) {
  std::vector<bool> alive(rwg.size(), true);
  WeylElement c = rwg.elements[rwg.small[w]];
  for (int g : word) {
    const int wall = positive_side(ld, ld.act(c, ld.delta_M0[static_cast<std::size_t>(g)]));
    c = c * omega_of(ld, g);
    if (!std::binary_search(s.roots.begin(), s.roots.end(), wall)) continue;
    const std::size_t next = static_cast<std::size_t>(rwg.small_index[rwg.index_of(c)]);
    const Sign target = chamber_sign(ld, chambers[next], wall);
    for (std::size_t e = 0; e < rwg.size(); ++e) {
      if (alive[e] && chamber_sign(ld, chambers[chamber_of(rwg, e)], wall) != target) alive[e] = false;
    }
  }
  std::vector<std::size_t> out;
  for (std::size_t e = 0; e < rwg.size(); ++e) {
    if (alive[e]) out.push_back(e);
  }
  return out;
}

}  // namespace rodier
