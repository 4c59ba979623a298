#include "doctest.h"

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "rodier/cartan.hpp"
#include "rodier/errors.hpp"
#include "rodier/levi.hpp"

using namespace rodier;

namespace {

std::vector<std::vector<int>> subsets(int n) {
  std::vector<std::vector<int>> out;
  for (int mask = 0; mask < (1 << n); ++mask) {
    std::vector<int> s;
    for (int j = 0; j < n; ++j) {
      if (mask & (1 << j)) s.push_back(j);
    }
    out.push_back(s);
  }
  return out;
}

std::set<std::vector<long long>> primitive_coords(const LeviDatum& ld, const std::vector<int>& rels) {
  std::set<std::vector<long long>> out;
  for (int r : rels) out.insert(primitive_integral(ld.coordinates(ld.relative_roots[static_cast<std::size_t>(r)].vector)));
  return out;
}

std::vector<int> all_rel(const LeviDatum& ld) {
  std::vector<int> v(ld.rel_count());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = static_cast<int>(i);
  return v;
}

// Oracle for |W_M|: count w with w(alpha) in theta for every alpha in theta, tested on the
// linear action of w on the simple root vectors rather than on the root permutation.
std::size_t stabilizer_oracle(const RootSystem& rs, const WeylGroup& w, const std::vector<int>& theta) {
  std::set<std::vector<std::string>> theta_vectors;
  std::vector<QVec> simple;
  for (int j : theta) simple.push_back(rs.root(rs.simple_root(j)));
  std::size_t count = 0;
  for (const auto& el : w.elements()) {
    bool ok = true;
    for (const QVec& v : simple) {
      const QVec image = apply(rs, el, v);
      ok = ok && std::any_of(simple.begin(), simple.end(), [&](const QVec& u) { return u == image; });
    }
    if (ok) ++count;
  }
  return count;
}

// Oracle for Phi_M: orthogonal projections, deduplicated, keeping only members with no
// proper integral divisor among them (G2 with a long Levi yields p, 2p and 3p).
std::size_t projection_oracle(const LeviDatum& ld) {
  const RootSystem& rs = *ld.rs;
  std::vector<QVec> proj;
  for (int b = 0; b < rs.size(); ++b) {
    const QVec p = ld.projector * rs.root(b);
    if (p.isZero()) continue;
    if (std::none_of(proj.begin(), proj.end(), [&](const QVec& q) { return q == p; })) proj.push_back(p);
  }
  std::size_t reduced = 0;
  for (const QVec& p : proj) {
    bool divisible = false;
    for (int k = 2; k <= 3; ++k) {
      const QVec part = p / Rational(k);
      divisible = divisible || std::any_of(proj.begin(), proj.end(), [&](const QVec& q) { return q == part; });
    }
    if (!divisible) ++reduced;
  }
  return reduced;
}

}  // namespace

TEST_CASE("degenerate Levis") {
  const auto rs = build_root_system(CartanType::parse("B3"));
  const auto wg = generate_weyl(rs);

  const auto full = make_levi(rs, {0, 1, 2});
  CHECK(full.iota == 0);
  CHECK(full.rel_count() == 0);
  CHECK(relative_weyl_group(full, wg).size() == 1);

  const auto split = make_levi(rs, {});
  CHECK(split.iota == 3);
  CHECK(split.rel_count() == static_cast<std::size_t>(rs->size()));
  CHECK(split.delta_M.size() == 3);
  CHECK(split.phi_M0.size() == split.rel_count());
  CHECK(std::set<int>(split.delta_M0.begin(), split.delta_M0.end()) ==
        std::set<int>(split.delta_M.begin(), split.delta_M.end()));
  const auto rwg = relative_weyl_group(split, wg);
  CHECK(rwg.size() == wg.size());
  CHECK(rwg.small.size() == wg.size());
  CHECK(rwg.complement.size() == 1);
  for (int r = 0; r < static_cast<int>(split.rel_count()); ++r) {
    CHECK(*relative_reflection(split, r) == reflection(*rs, split.relative_roots[static_cast<std::size_t>(r)].representative));
  }
}

TEST_CASE("invalid Levi input is rejected") {
  const auto rs = build_root_system(CartanType::parse("A2"));
  CHECK_THROWS_AS(make_levi(rs, {2}), InputError);
  CHECK_THROWS_AS(make_levi(rs, {0, 0}), InputError);
  const auto ld = make_levi(rs, {});
  CHECK_THROWS_AS(relative_reflection(ld, 17), InputError);
}

TEST_CASE("D4: a GL1 x GL3 Levi has W_M of order 2 and no relative reflections") {
  const auto rs = build_root_system(CartanType::parse("D4"));
  const auto wg = generate_weyl(rs);
  std::vector<std::vector<int>> found;
  for (const auto& theta : subsets(4)) {
    if (theta.size() != 2) continue;
    const auto ld = make_levi(rs, theta);
    // GL1 x GL3: theta is an A2 subdiagram
    if (rs->cartan_integer(rs->simple_root(theta[0]), rs->simple_root(theta[1])) != -1) continue;
    const auto rwg = relative_weyl_group(ld, wg);
    CHECK(rwg.size() == stabilizer_oracle(*rs, wg, theta));
    if (rwg.size() == 2 && ld.phi_M0.empty()) found.push_back(theta);
  }
  REQUIRE_FALSE(found.empty());
  CHECK(found.front() == std::vector<int>{0, 1});

  const auto ld = make_levi(rs, {0, 1});
  const auto rwg = relative_weyl_group(ld, wg);
  for (int r = 0; r < static_cast<int>(ld.rel_count()); ++r) CHECK_FALSE(relative_reflection(ld, r).has_value());
  CHECK(rwg.small.size() == 1);
  CHECK(rwg.complement.size() == 2);
  const std::size_t other = rwg.identity == 0 ? 1 : 0;
  CHECK(rwg.decomposition[other] == std::make_pair(std::size_t{0}, static_cast<std::size_t>(rwg.complement_index[other])));
  // The nontrivial element acts as -1 on a_M^*.
  for (int r = 0; r < static_cast<int>(ld.rel_count()); ++r) {
    CHECK(ld.act(rwg.elements[other], r) == ld.relative_roots[static_cast<std::size_t>(r)].negation);
  }
}

TEST_CASE("D6: the GL2 x GL4 Levi") {
  const auto rs = build_root_system(CartanType::parse("D6"));
  const std::set<std::vector<long long>> want_delta{{1, -1}, {0, 1}};
  const std::set<std::vector<long long>> want_phi{{1, -1}, {-1, 1}, {1, 1}, {-1, -1}, {1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  const std::set<std::vector<long long>> want_delta0{{1, 0}, {0, 1}};
  const std::set<std::vector<long long>> want_phi0{{1, 0}, {-1, 0}, {0, 1}, {0, -1}};
  std::vector<std::vector<int>> found;
  for (const auto& theta : subsets(6)) {
    if (theta.size() != 4) continue;
    // GL2 x GL4 shape: A1 + A3 inside one of the two A5 chains of the diagram
    const bool fork = std::count(theta.begin(), theta.end(), 4) + std::count(theta.begin(), theta.end(), 5) == 2;
    const auto ld = make_levi(rs, theta);
    std::size_t theta_positive = 0;
    for (int b = 0; b < rs->size(); ++b) theta_positive += rs->is_positive(b) && ld.in_phi_theta[static_cast<std::size_t>(b)];
    if (fork || theta_positive != 7) continue;
    if (primitive_coords(ld, ld.delta_M) == want_delta && primitive_coords(ld, all_rel(ld)) == want_phi) {
      found.push_back(theta);
      CHECK(primitive_coords(ld, ld.delta_M0) == want_delta0);
      CHECK(primitive_coords(ld, ld.phi_M0) == want_phi0);
    }
  }
  REQUIRE_FALSE(found.empty());
  CHECK(std::find(found.begin(), found.end(), std::vector<int>{0, 2, 3, 4}) != found.end());

  const auto ld = make_levi(rs, {0, 2, 3, 4});
  const auto wg = generate_weyl(rs);
  const auto rwg = relative_weyl_group(ld, wg);
  CHECK(rwg.size() == stabilizer_oracle(*rs, wg, ld.theta));
  CHECK(rwg.small.size() == 4);
  // omega_{e1} is an involution in W_M fixing e2
  const QVec e1 = ld.from_coordinates((QVec(2) << 1, 0).finished());
  const QVec e2 = ld.from_coordinates((QVec(2) << 0, 1).finished());
  const auto r1 = ld.find_ray(e1);
  const auto r2 = ld.find_ray(e2);
  REQUIRE(r1);
  REQUIRE(r2);
  const auto omega = relative_reflection(ld, *r1);
  REQUIRE(omega);
  CHECK((*omega * *omega).is_identity());
  CHECK(ld.act(*omega, *r2) == *r2);
  CHECK(ld.act(*omega, *r1) == ld.relative_roots[static_cast<std::size_t>(*r1)].negation);
}

TEST_CASE("Levi invariants over all subsets of small types") {
  for (const char* label : {"A3", "B3", "C3", "D4", "G2", "B4", "F4"}) {
    const auto rs = build_root_system(CartanType::parse(label));
    const auto wg = generate_weyl(rs);
    for (const auto& theta : subsets(rs->rank())) {
      const auto ld = make_levi(rs, theta);
      const std::string name = label;
      CAPTURE(name);
      CAPTURE(theta);
      CAPTURE(theta.size());
      CHECK(ld.iota == rs->rank() - static_cast<int>(theta.size()));
      CHECK(ld.rel_count() == projection_oracle(ld));
      const auto rwg = relative_weyl_group(ld, wg);
      CHECK(rwg.size() == stabilizer_oracle(*rs, wg, theta));
      CHECK(rwg.small.size() * rwg.complement.size() == rwg.size());

      // Phi_M^0 closed under its reflections; W_M preserves Phi_M and Phi_M^0.
      for (int a : ld.phi_M0) {
        for (int b : ld.phi_M0) CHECK(ld.in_phi_M0(ld.act(*ld.relative_reflections[static_cast<std::size_t>(a)], b)));
      }
      for (const auto& w : rwg.elements) {
        for (int a : ld.phi_M0) {
          const int wa = ld.act(w, a);
          REQUIRE(ld.in_phi_M0(wa));
          // omega_{w.a} = w omega_a w^{-1}
          CHECK(*ld.relative_reflections[static_cast<std::size_t>(wa)] ==
                w * *ld.relative_reflections[static_cast<std::size_t>(a)] * w.inverse());
        }
      }
      // Semidirect law and bijectivity.
      std::set<std::pair<std::size_t, std::size_t>> pairs(rwg.decomposition.begin(), rwg.decomposition.end());
      CHECK(pairs.size() == rwg.size());
      for (std::size_t i = 0; i < rwg.size(); ++i) {
        const auto [s, c] = rwg.decomposition[i];
        CHECK(rwg.elements[rwg.small[s]] * rwg.elements[rwg.complement[c]] == rwg.elements[i]);
      }
      for (std::size_t c : rwg.complement) {
        const auto& v = rwg.elements[c];
        for (std::size_t s : rwg.small) CHECK(rwg.small_index[rwg.index_of(v * rwg.elements[s] * v.inverse())] >= 0);
      }
    }
  }
}
