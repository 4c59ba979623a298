#include "doctest.h"

#include <algorithm>
#include <set>
#include <vector>

#include "rodier/cartan.hpp"
#include "rodier/errors.hpp"

using namespace rodier;

namespace {

// Oracle: closure of the simple coefficient vectors under s_i(v) = v - <v, a_i^vee> a_i,
// computed from a hand-entered Cartan matrix only.
std::size_t closure_count(const std::vector<std::vector<int>>& cartan) {
  const std::size_t n = cartan.size();
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> frontier;
  for (std::size_t i = 0; i < n; ++i) {
    std::vector<int> e(n, 0);
    e[i] = 1;
    seen.insert(e);
    frontier.push_back(e);
  }
  while (!frontier.empty()) {
    auto v = frontier.back();
    frontier.pop_back();
    for (std::size_t i = 0; i < n; ++i) {
      int p = 0;  // <v, a_i^vee> = sum_j v_j A_{j i}
      for (std::size_t j = 0; j < n; ++j) p += v[j] * cartan[j][i];
      auto w = v;
      w[i] -= p;
      if (seen.insert(w).second) frontier.push_back(w);
    }
  }
  return seen.size();
}

}  // namespace

TEST_CASE("rank bounds are enforced with the bound named") {
  CHECK_THROWS_WITH_AS(CartanType::parse("B1"), doctest::Contains("rank >= 2"), InputError);
  CHECK_THROWS_AS(CartanType::parse("E5"), InputError);
  CHECK_THROWS_AS(CartanType::parse("F3"), InputError);
  CHECK_THROWS_AS(CartanType::parse("Q2"), InputError);
  CHECK(CartanType::parse("D6").name() == "D6");
}

TEST_CASE("root counts agree with an independent Cartan-matrix closure") {
  // A_{ij} = <a_i, a_j^vee>; G2 with a1 short.
  const std::vector<std::vector<int>> g2{{2, -1}, {-3, 2}};
  CHECK(closure_count(g2) == 12);
  CHECK(build_root_system(CartanType::parse("G2"))->size() == 12);

  const std::vector<std::vector<int>> f4{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}};
  CHECK(closure_count(f4) == 48);
  CHECK(build_root_system(CartanType::parse("F4"))->size() == 48);

  CHECK(build_root_system(CartanType::parse("A1"))->size() == 2);
  const auto d6 = build_root_system(CartanType::parse("D6"));
  CHECK(d6->size() == 60);
  for (const char* label : {"A5", "B4", "C3", "D5", "E6", "E7", "E8"}) {
    const auto t = CartanType::parse(label);
    CHECK(build_root_system(t)->size() == t.root_count());
  }
}

TEST_CASE("D6 contains every +-e_i +- e_j") {
  const auto rs = build_root_system(CartanType::parse("D6"));
  for (int i = 0; i < 6; ++i) {
    for (int j = i + 1; j < 6; ++j) {
      for (int si : {1, -1}) {
        for (int sj : {1, -1}) {
          QVec v = QVec::Zero(6);
          v(i) = si;
          v(j) = sj;
          CHECK(rs->find(v).has_value());
        }
      }
    }
  }
}

TEST_CASE("root system invariants") {
  for (const char* label : {"A3", "B3", "C3", "D4", "G2", "F4", "E6"}) {
    const auto rs = build_root_system(CartanType::parse(label));
    for (int a = 0; a < rs->size(); ++a) {
      const auto refl = rs->reflection_action(a);
      for (int b = 0; b < rs->size(); ++b) {
        CHECK(pairing(rs->root(b), rs->root(a)).is_integer());
        const QVec image = rs->root(b) - Rational(rs->cartan_integer(b, a)) * rs->root(a);
        CHECK(rs->root(refl[static_cast<std::size_t>(b)]) == image);
      }
      if (rs->is_positive(a)) {
        for (int c : rs->coefficients(a)) CHECK(c >= 0);
      }
    }
  }
}

TEST_CASE("reflections") {
  const auto a1 = build_root_system(CartanType::parse("A1"));
  const auto s = reflection(*a1, a1->simple_root(0));
  CHECK(s(a1->simple_root(0)) == a1->negative_of(a1->simple_root(0)));
  CHECK((s * s).is_identity());

  const auto a2 = build_root_system(CartanType::parse("A2"));
  const auto s1 = reflection(*a2, a2->simple_root(0));
  const QVec expected = a2->root(a2->simple_root(0)) + a2->root(a2->simple_root(1));
  CHECK(a2->root(s1(a2->simple_root(1))) == expected);

  // Fixes Ker(alpha^vee) pointwise: test on a basis of the orthogonal complement in span(Phi).
  const auto b3 = build_root_system(CartanType::parse("B3"));
  for (int a = 0; a < b3->size(); ++a) {
    const auto w = reflection(*b3, a);
    CHECK((w * w).is_identity());
    QMat row(1, 3);
    row.row(0) = b3->root(a).transpose();
    for (const QVec& x : nullspace<Rational>(row)) CHECK(apply(*b3, w, x) == x);
  }
}

TEST_CASE("Weyl group orders, independent of generator order") {
  for (const char* label : {"A1", "A3", "B3", "D4", "G2", "F4"}) {
    const auto rs = build_root_system(CartanType::parse(label));
    const auto fwd = generate_weyl(rs);
    const auto rev = generate_weyl(rs, kDefaultEnumerationCap, GeneratorOrder::kReverse);
    CHECK(fwd.size() == rev.size());
    CHECK(fwd.size() == rs->type().weyl_order());
    for (std::size_t i = 0; i < fwd.size(); i += 7) {
      CHECK(rev.find(fwd[i]).has_value());
      CHECK(evaluate_word(*rs, fwd.word(i)) == fwd[i]);
    }
  }
  CHECK(generate_weyl(build_root_system(CartanType::parse("F4"))).size() == 1152);
  CHECK(generate_weyl(build_root_system(CartanType::parse("D4"))).size() == 192);
}

TEST_CASE("elements are isometries and the group axioms hold on samples") {
  const auto rs = build_root_system(CartanType::parse("B3"));
  const auto w = generate_weyl(rs);
  for (std::size_t i = 0; i < w.size(); i += 5) {
    for (int b = 0; b < rs->size(); b += 3) {
      for (int c = 0; c < rs->size(); c += 4) CHECK(rs->inner(w[i](b), w[i](c)) == rs->inner(b, c));
    }
    CHECK((w[i] * w[i].inverse()).is_identity());
    const auto& x = w[(i * 7) % w.size()];
    const auto& y = w[(i * 13 + 3) % w.size()];
    CHECK((w[i] * x) * y == w[i] * (x * y));
  }
}

TEST_CASE("enumeration cap") {
  CHECK_THROWS_AS(generate_weyl(build_root_system(CartanType::parse("E7"))), EnumerationTooLarge);
  CHECK_THROWS_WITH(generate_weyl(build_root_system(CartanType::parse("B3")), 10), doctest::Contains("cap 10"));
}

TEST_CASE("longest elements") {
  const auto a2 = build_root_system(CartanType::parse("A2"));
  CHECK(longest_element(*a2, std::vector<int>{}).is_identity());
  const std::vector<int> all{0, 1};
  const auto w0 = longest_element(*a2, all);
  CHECK(w0(a2->simple_root(0)) == a2->negative_of(a2->simple_root(1)));
  CHECK((w0 * w0).is_identity());

  const auto a1 = build_root_system(CartanType::parse("A1"));
  CHECK(longest_element(*a1, std::vector<int>{0}) == reflection(*a1, a1->simple_root(0)));

  for (const char* label : {"A4", "B3", "D5", "E6", "F4", "G2"}) {
    const auto rs = build_root_system(CartanType::parse(label));
    std::vector<int> delta(static_cast<std::size_t>(rs->rank()));
    for (int j = 0; j < rs->rank(); ++j) delta[static_cast<std::size_t>(j)] = j;
    const auto w = longest_element(*rs, delta);
    std::set<int> image, negs;
    for (int j = 0; j < rs->rank(); ++j) {
      image.insert(w(rs->simple_root(j)));
      negs.insert(rs->negative_of(rs->simple_root(j)));
    }
    CHECK(image == negs);
  }
}

TEST_CASE("pairings") {
  const auto a2 = build_root_system(CartanType::parse("A2"));
  const int a1 = a2->simple_root(0), a2i = a2->simple_root(1);
  CHECK(pairing(*a2, a2->root(a1), a1) == Rational(2));
  CHECK(pairing(*a2, a2->root(a1), a2i) == Rational(-1));
  CHECK(pairing(*a2, QVec::Zero(3), a1) == Rational(0));
  CHECK_THROWS_AS(pairing(a2->root(a1), QVec::Zero(3)), InputError);
}
