#include "rodier/poles.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <random>
#include <set>

#include "rodier/errors.hpp"

namespace rodier {

namespace {

const QVec& vec(const LeviDatum& ld, int rel) { return ld.relative_roots[static_cast<std::size_t>(rel)].vector; }

Rational rel_pairing(const LeviDatum& ld, const QVec& omega, int rel) { return pairing(omega, vec(ld, rel)); }

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[static_cast<std::size_t>(x)] != x) x = parent[static_cast<std::size_t>(x)] = parent[static_cast<std::size_t>(parent[static_cast<std::size_t>(x)])];
    return x;
  }
  void join(int a, int b) {
    a = find(a);
    b = find(b);
    if (a != b) parent[static_cast<std::size_t>(std::max(a, b))] = std::min(a, b);
  }
};

// Groups `items` by union-find representative, each group ascending, groups by smallest member.
std::vector<std::vector<int>> classes(UnionFind& uf, const std::vector<int>& items) {
  std::map<int, std::vector<int>> by_root;
  for (int x : items) by_root[uf.find(x)].push_back(x);
  std::vector<std::vector<int>> out;
  for (auto& [root, members] : by_root) {
    std::sort(members.begin(), members.end());
    out.push_back(std::move(members));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.front() < b.front(); });
  return out;
}

}  // namespace

Orbits pole_orbits(const LeviDatum& ld, const RelativeWeylGroup& rwg) {
  UnionFind uf(ld.rel_count());
  for (const WeylElement& w : rwg.elements) {
    for (int a : ld.phi_M0) uf.join(a, ld.act(w, a));
  }
  Orbits o;
  o.orbit_of.assign(ld.rel_count(), -1);
  o.members = classes(uf, ld.phi_M0);
  for (std::size_t i = 0; i < o.members.size(); ++i) {
    for (int a : o.members[i]) o.orbit_of[static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
  return o;
}

std::string orbit_key(int orbit) { return "orbit" + std::to_string(orbit); }

int parse_orbit_key(const std::string& key, const Orbits& orbits) {
  for (std::size_t i = 0; i < orbits.count(); ++i) {
    if (orbit_key(static_cast<int>(i)) == key) return static_cast<int>(i);
  }
  throw InputError("unknown pole key \"" + key + "\": Phi_M^0 has " + std::to_string(orbits.count()) +
                   " W_M-orbit(s), keys orbit0..orbit" + std::to_string(static_cast<int>(orbits.count()) - 1));
}

void require_dominant(const LeviDatum& ld, const QVec& omega) {
  if (omega.size() != ld.rs->ambient_dim()) throw InputError("omega has the wrong dimension");
  for (int t : ld.theta) {
    if (!omega.dot(ld.rs->root(ld.rs->simple_root(t))).is_zero()) throw InputError("omega is not orthogonal to theta");
  }
  if (!ld.rs->simple_coordinates(omega)) throw InputError("omega does not lie in span(Phi)");
  for (int d : ld.delta_M) {
    if (rel_pairing(ld, omega, d).sign() < 0) {
      throw InputError("omega is not dominant (negative pairing with a simple relative coroot); conjugate it into the closed positive chamber of a_M^* first");
    }
  }
}

WallSet derive_S(const LeviDatum& ld, const Orbits& orbits, const InducingDatum& datum) {
  require_dominant(ld, datum.omega);
  for (const auto& [orbit, pole] : datum.poles) {
    if (orbit < 0 || static_cast<std::size_t>(orbit) >= orbits.count()) throw InputError("pole given for an unknown orbit");
    if (pole.sign() <= 0) throw InputError("pole locations must be strictly positive");
  }
  std::vector<int> s;
  for (int a : ld.phi_M0_positive) {
    const auto it = datum.poles.find(orbits.orbit_of[static_cast<std::size_t>(a)]);
    if (it == datum.poles.end()) continue;
    if (abs(rel_pairing(ld, datum.omega, a)) == it->second) s.push_back(a);
  }
  return make_wall_set(ld, std::move(s));
}

std::vector<int> generate_phi_S(const LeviDatum& ld, const WallSet& s) {
  std::vector<bool> seen(ld.rel_count(), false);
  std::vector<int> queue;
  for (int a : s.roots) {
    for (int b : {a, ld.relative_roots[static_cast<std::size_t>(a)].negation}) {
      if (!seen[static_cast<std::size_t>(b)]) {
        seen[static_cast<std::size_t>(b)] = true;
        queue.push_back(b);
      }
    }
  }
  for (std::size_t head = 0; head < queue.size(); ++head) {
    for (int a : s.roots) {
      const int image = ld.act(*ld.relative_reflections[static_cast<std::size_t>(a)], queue[head]);
      if (!seen[static_cast<std::size_t>(image)]) {
        seen[static_cast<std::size_t>(image)] = true;
        queue.push_back(image);
      }
    }
  }
  std::sort(queue.begin(), queue.end());
  return queue;
}

bool check_regularity_CC(const LeviDatum& ld, const QVec& omega, const std::vector<int>& phi_S) {
  return std::none_of(phi_S.begin(), phi_S.end(), [&](int b) { return omega.dot(vec(ld, b)).is_zero(); });
}

IndependenceCertificate verify_linear_independence(const std::vector<QVec>& vectors) {
  IndependenceCertificate cert;
  if (vectors.empty()) return cert;
  const Eigen::Index dim = vectors.front().size();
  const QMat columns = stack_rows<Rational>(vectors, dim).transpose();
  const auto kernel = nullspace<Rational>(columns);
  cert.rank = static_cast<int>(vectors.size() - kernel.size());
  if (kernel.empty()) {
    cert.echelon_basis = row_space_basis<Rational>(vectors, dim);
    return cert;
  }
  cert.independent = false;
  cert.dependency = primitive_integral(kernel.front());
  const auto first = std::find_if(cert.dependency.begin(), cert.dependency.end(), [](long long x) { return x != 0; });
  if (*first < 0) {
    for (auto& x : cert.dependency) x = -x;
  }
  return cert;
}

IndependenceCertificate verify_linear_independence(const LeviDatum& ld, const WallSet& s) {
  std::vector<QVec> coroots;
  for (int a : s.roots) coroots.push_back(ld.coroot(a));
  return verify_linear_independence(coroots);
}

SPlus s_plus(const LeviDatum& ld, const Orbits& orbits, const QVec& omega, const WallSet& s) {
  SPlus out;
  for (int a : s.roots) {
    const int sign = rel_pairing(ld, omega, a).sign();
    if (sign == 0) throw InputError("S^+ is undefined: omega is orthogonal to a member of S");
    out.roots.push_back(sign > 0 ? a : ld.relative_roots[static_cast<std::size_t>(a)].negation);
    out.orbit.push_back(orbits.orbit_of[static_cast<std::size_t>(a)]);
  }
  return out;
}

bool obtuseness_check(const LeviDatum& ld, const SPlus& splus) {
  for (std::size_t i = 0; i < splus.roots.size(); ++i) {
    for (std::size_t j = 0; j < splus.roots.size(); ++j) {
      if (i == j) continue;
      const QVec& a = vec(ld, splus.roots[i]);
      const QVec& b = vec(ld, splus.roots[j]);
      if (a.dot(a) != b.dot(b)) continue;
      if (pairing(a, b).sign() > 0) return false;
    }
  }
  return true;
}

std::vector<std::vector<int>> ws_orbits(const LeviDatum& ld, const WallSet& s, const std::vector<int>& phi_S) {
  UnionFind uf(ld.rel_count());
  for (int b : phi_S) {
    for (int a : s.roots) uf.join(b, ld.act(*ld.relative_reflections[static_cast<std::size_t>(a)], b));
  }
  return classes(uf, phi_S);
}

bool orbits_match_lengths(const LeviDatum& ld, const std::vector<int>& phi_S,
                          const std::vector<std::vector<int>>& orbits) {
  UnionFind component(ld.rel_count());
  for (int a : phi_S) {
    for (int b : phi_S) {
      if (!vec(ld, a).dot(vec(ld, b)).is_zero()) component.join(a, b);
    }
  }
  std::vector<int> orbit_of(ld.rel_count(), -1);
  for (std::size_t i = 0; i < orbits.size(); ++i) {
    for (int a : orbits[i]) orbit_of[static_cast<std::size_t>(a)] = static_cast<int>(i);
  }
  for (int a : phi_S) {
    for (int b : phi_S) {
      if (component.find(a) != component.find(b)) continue;
      const bool same_length = vec(ld, a).dot(vec(ld, a)) == vec(ld, b).dot(vec(ld, b));
      const bool same_orbit = orbit_of[static_cast<std::size_t>(a)] == orbit_of[static_cast<std::size_t>(b)];
      if (same_length != same_orbit) return false;
    }
  }
  return true;
}

StressReport independence_stress_test(const LeviDatum& ld, const RelativeWeylGroup& rwg, const StressOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  StressReport report;
  report.type = ld.rs->type().name();
  report.theta = ld.theta;
  report.trials = options.trials;
  report.seed = options.seed;
  if (options.trials == 0 || ld.phi_M0.empty()) return report;
  if (options.bound < 1) throw InputError("stress-test bound must be positive");

  const Orbits orbits = pole_orbits(ld, rwg);

  // Fundamental weights dual to the simple relative coroots, so that any non-negative
  // combination is dominant.
  std::vector<QVec> fundamental;
  {
    const int n = ld.iota;
    QMat g(n, n);
    for (int k = 0; k < n; ++k) {
      const QVec cor = ld.coroot(ld.delta_M[static_cast<std::size_t>(k)]);
      for (int i = 0; i < n; ++i) g(k, i) = ld.a_M_basis[static_cast<std::size_t>(i)].dot(cor);
    }
    for (int j = 0; j < n; ++j) {
      QVec e = QVec::Zero(n);
      e(j) = Rational(1);
      const auto y = solve<Rational>(g, e);
      QVec w = QVec::Zero(ld.rs->ambient_dim());
      for (int i = 0; i < n; ++i) w += (*y)(i) * ld.a_M_basis[static_cast<std::size_t>(i)];
      fundamental.push_back(w);
    }
  }

  std::mt19937_64 rng(options.seed);
  auto uniform = [&](int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); };
  // Small values dominate so that coincidences (the interesting cases) are frequent.
  auto draw_coefficient = [&]() -> Rational {
    const int mode = uniform(0, 9);
    if (mode < 3) return Rational(0);
    if (mode < 7) return Rational(uniform(1, 2));
    return Rational(uniform(0, options.bound), uniform(1, options.bound));
  };

  std::set<std::vector<int>> seen_s;
  for (std::size_t trial = 0; trial < options.trials; ++trial) {
    InducingDatum datum;
    datum.omega = QVec::Zero(ld.rs->ambient_dim());
    for (const QVec& f : fundamental) datum.omega += draw_coefficient() * f;
    for (std::size_t o = 0; o < orbits.count(); ++o) {
      const auto& members = orbits.members[o];
      Rational pole;
      if (uniform(0, 4) > 0) {
        const int a = members[static_cast<std::size_t>(uniform(0, static_cast<int>(members.size()) - 1))];
        pole = abs(rel_pairing(ld, datum.omega, a));
      }
      if (pole.is_zero()) pole = Rational(uniform(1, options.bound), uniform(1, options.bound));
      datum.poles[static_cast<int>(o)] = pole;
    }
    datum.assume_regular = true;

    const WallSet s = derive_S(ld, orbits, datum);
    const auto phi_S = generate_phi_S(ld, s);
    if (!check_regularity_CC(ld, datum.omega, phi_S)) continue;
    ++report.regular;
    report.max_s = std::max(report.max_s, s.size());

    auto violation = [&](std::string kind, std::string detail) {
      report.violations.push_back({std::move(kind), trial, datum.omega, datum.poles, s, std::move(detail)});
    };
    const auto cert = verify_linear_independence(ld, s);
    if (cert.independent) {
      ++report.independent;
    } else {
      std::string d = "dependency";
      for (long long x : cert.dependency) d += " " + std::to_string(x);
      violation("linear_dependence", d);
    }
    if (static_cast<int>(s.size()) > ld.iota) violation("s_exceeds_iota", "|S| = " + std::to_string(s.size()));
    if (!obtuseness_check(ld, s_plus(ld, orbits, datum.omega, s))) violation("obtuseness", "S^+ not obtuse");
    if (!orbits_match_lengths(ld, phi_S, ws_orbits(ld, s, phi_S))) {
      violation("orbit_lengths", "W_S-orbits on Phi_S do not follow root lengths");
    }
    if (seen_s.insert(s.roots).second) report.samples.push_back({datum, s});
  }
  report.elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace rodier
