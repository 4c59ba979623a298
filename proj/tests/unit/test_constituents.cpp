#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "rodier/constituents.hpp"
#include "rodier/errors.hpp"

using namespace rodier;

namespace {

struct Setup {
  RootSystemPtr rs;
  LeviDatum ld;
  RelativeWeylGroup rwg;
  std::vector<Chamber> chambers;
};

Setup make(const char* label, std::vector<int> theta = {}) {
  auto rs = build_root_system(CartanType::parse(label));
  auto wg = generate_weyl(rs);
  auto ld = make_levi(rs, std::move(theta));
  auto rwg = relative_weyl_group(ld, wg);
  auto ch = enumerate_chambers(ld, rwg);
  return {rs, std::move(ld), std::move(rwg), std::move(ch)};
}

InducingDatum datum(const QVec& omega, bool generic = false) {
  InducingDatum d;
  d.omega = omega;
  d.assume_regular = true;
  d.assume_generic = generic;
  return d;
}

std::vector<int> sorted(std::vector<int> v) {
  std::sort(v.begin(), v.end());
  return v;
}

int count_flag(const DecompositionReport& r, bool Flags::*f) {
  return static_cast<int>(std::count_if(r.constituents.begin(), r.constituents.end(),
                                        [&](const Constituent& k) { return k.flags.*f; }));
}

}  // namespace

TEST_CASE("empty S is irreducible") {
  auto b2 = make("B2");
  const auto r = full_report(b2.ld, b2.rwg, b2.chambers, WallSet{}, datum(QVec::Zero(2), true));
  CHECK(r.length == 1);
  CHECK(r.irreducible);
  CHECK(r.constituents[0].jacquet.size() == b2.rwg.size());
  CHECK(r.constituents[0].aubert_dual == 0);
  CHECK_FALSE(r.constituents[0].flags.square_integrable);
  CHECK(r.constituents[0].flags.tempered);  // omega = 0
  CHECK(r.constituents[0].flags.generic);
}

TEST_CASE("regularity hypothesis is enforced") {
  auto a1 = make("A1");
  auto d = datum(QVec::Zero(2));
  d.assume_regular = false;
  CHECK_THROWS_WITH_AS(decompose_gps(a1.ld, a1.rwg, a1.chambers, WallSet{}, d), doctest::Contains("regular"),
                       InputError);
}

TEST_CASE("A1 with S = {alpha}") {
  auto a1 = make("A1");
  const QVec omega = a1.ld.relative_roots[static_cast<std::size_t>(a1.ld.phi_M0_positive[0])].vector * Rational(3, 4);
  const auto r = full_report(a1.ld, a1.rwg, a1.chambers, make_wall_set(a1.ld, a1.ld.phi_M0_positive), datum(omega, true));
  REQUIRE(r.length == 2);
  CHECK(r.constituents[0].jacquet == std::vector<std::size_t>{a1.rwg.identity});
  CHECK(r.constituents[1].jacquet.size() == 1);
  CHECK(r.constituents[0].flags.square_integrable);
  CHECK(r.constituents[0].flags.tempered);
  CHECK(r.constituents[0].flags.generic);
  CHECK(r.constituents[0].flags.subrepresentation_witness);
  CHECK(r.constituents[0].aubert_dual == 1);
  CHECK(r.constituents[1].aubert_dual == 0);
}

TEST_CASE("B2 with both simple coroots") {
  auto b2 = make("B2");
  const auto s = make_wall_set(b2.ld, sorted(b2.ld.delta_M0));
  // omega = 2 e1 + e2 pairs to 1 with e1 - e2 and 2 with e2
  const QVec omega = (QVec(2) << 2, 1).finished();
  const auto r = full_report(b2.ld, b2.rwg, b2.chambers, s, datum(omega));
  REQUIRE(r.length == 4);
  std::vector<std::size_t> sizes;
  for (const auto& k : r.constituents) sizes.push_back(k.jacquet.size());
  // chamber counts 1, 3, 3, 1 (see the arrangement tests), |W_M^1| = 1
  CHECK(sizes == std::vector<std::size_t>{1, 3, 3, 1});
  CHECK(count_flag(r, &Flags::square_integrable) == 1);
  CHECK(r.constituents[0].flags.square_integrable);
  CHECK(r.constituents[0].flags.tempered);
  CHECK(r.constituents[0].aubert_dual == 3);
  CHECK(r.constituents[1].aubert_dual == 2);
  CHECK(count_flag(r, &Flags::generic) == 0);
  CHECK(std::find(r.notes.begin(), r.notes.end(), "generic flag skipped: assume_generic not set") != r.notes.end());
}

TEST_CASE("B2 with one simple coroot and omega off its span") {
  auto b2 = make("B2");
  const auto s = make_wall_set(b2.ld, {sorted(b2.ld.delta_M0)[0]});
  const QVec omega = (QVec(2) << 2, 1).finished();
  const auto r = full_report(b2.ld, b2.rwg, b2.chambers, s, datum(omega));
  CHECK(r.length == 2);
  CHECK(count_flag(r, &Flags::tempered) == 0);
  CHECK(count_flag(r, &Flags::square_integrable) == 0);
}

TEST_CASE("M = G") {
  auto g2 = make("G2", {0, 1});
  const auto r = full_report(g2.ld, g2.rwg, g2.chambers, WallSet{}, datum(QVec::Zero(3), true));
  CHECK(r.no_induction);
  CHECK(r.length == 1);
  CHECK(count_flag(r, &Flags::generic) == 0);
  CHECK(count_flag(r, &Flags::tempered) == 0);
}

TEST_CASE("partition and cardinality laws on D6 GL2 x GL4") {
  auto d6 = make("D6", {0, 2, 3, 4});
  for (const auto& roots : std::vector<std::vector<int>>{{}, {d6.ld.delta_M0[0]}, sorted(d6.ld.delta_M0)}) {
    const auto s = make_wall_set(d6.ld, roots);
    const auto r = full_report(d6.ld, d6.rwg, d6.chambers, s, datum(QVec::Zero(6), true));
    CHECK(r.length == (std::size_t{1} << s.size()));
    std::set<std::size_t> all;
    for (const auto& k : r.constituents) {
      CHECK(k.jacquet.size() == d6.rwg.complement.size() * k.chamber_count);
      all.insert(k.jacquet.begin(), k.jacquet.end());
    }
    CHECK(all.size() == d6.rwg.size());
  }
}

TEST_CASE("universal irreducibility diagnostic") {
  auto d6 = make("D6", {0, 2, 3, 4});
  const auto e1 = d6.ld.find_ray(d6.ld.from_coordinates((QVec(2) << 1, 0).finished()));
  REQUIRE(e1);
  const auto s = make_wall_set(d6.ld, {*e1});
  const auto theta_prime = smallest_levi_containing(d6.ld, s);
  CHECK(universal_irreducibility_check(d6.ld, s, theta_prime));
  CHECK(universal_irreducibility_check(d6.ld, s, {0, 1, 2, 3, 4, 5}));
  CHECK(universal_irreducibility_check(d6.ld, WallSet{}, d6.ld.theta));
  CHECK_FALSE(universal_irreducibility_check(d6.ld, s, d6.ld.theta));
  CHECK_THROWS_AS(universal_irreducibility_check(d6.ld, s, {1}), InputError);
}
