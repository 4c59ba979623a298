#include "rodier/levi.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rodier/errors.hpp"

namespace rodier {

namespace {

int gcd_of(const std::vector<int>& v) {
  int g = 0;
  for (int x : v) g = std::gcd(g, x);
  return g;
}

// Indecomposable members of a positive system (those not a sum of two members).
std::vector<int> indecomposables(const RootSystem& rs, const std::vector<int>& positive) {
  std::vector<bool> member(static_cast<std::size_t>(rs.size()), false);
  for (int b : positive) member[static_cast<std::size_t>(b)] = true;
  std::vector<int> out;
  for (int b : positive) {
    bool decomposable = false;
    for (int g : positive) {
      if (g == b) continue;
      std::vector<int> diff = rs.coefficients(b);
      const auto& cg = rs.coefficients(g);
      for (std::size_t t = 0; t < diff.size(); ++t) diff[t] -= cg[t];
      const auto d = rs.find_coefficients(diff);
      if (d && member[static_cast<std::size_t>(*d)]) {
        decomposable = true;
        break;
      }
    }
    if (!decomposable) out.push_back(b);
  }
  return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// LeviDatum helpers

QVec LeviDatum::coroot(int rel) const {
  const QVec& a = relative_roots.at(static_cast<std::size_t>(rel)).vector;
  return a * (Rational(2) / a.dot(a));
}

int LeviDatum::act(const WeylElement& w, int rel) const {
  const int beta = w(relative_roots[static_cast<std::size_t>(rel)].representative);
  const int r = rel_of_root[static_cast<std::size_t>(beta)];
  if (r < 0 || multiplier_of_root[static_cast<std::size_t>(beta)] != 1) {
    throw InvariantViolation("element does not normalize the Levi: relative root not preserved");
  }
  return r;
}

std::optional<int> LeviDatum::find_ray(const QVec& v) const {
  for (std::size_t i = 0; i < relative_roots.size(); ++i) {
    if (positive_ratio<Rational>(v, relative_roots[i].vector)) return static_cast<int>(i);
  }
  return std::nullopt;
}

QVec LeviDatum::coordinates(const QVec& v) const {
  QVec c(iota);
  for (int i = 0; i < iota; ++i) c(i) = v.dot(a_M_basis[static_cast<std::size_t>(i)]);
  return c;
}

QVec LeviDatum::from_coordinates(const QVec& c) const {
  if (c.size() != iota) {
    throw InputError("expected " + std::to_string(iota) + " coordinates in a_M^*, got " + std::to_string(c.size()));
  }
  QVec out = QVec::Zero(rs->ambient_dim());
  if (iota == 0) return out;
  const QMat b = stack_rows<Rational>(a_M_basis, rs->ambient_dim());
  const QMat gram = b * b.transpose();
  const auto y = solve<Rational>(gram, c);
  for (int i = 0; i < iota; ++i) out += (*y)(i) * a_M_basis[static_cast<std::size_t>(i)];
  return out;
}

bool LeviDatum::stabilizes_theta(const WeylElement& w) const {
  for (int j : theta) {
    const int image = w(rs->simple_root(j));
    const auto& c = rs->coefficients(image);
    // must be a simple root whose label lies in theta
    int label = -1;
    for (std::size_t t = 0; t < c.size(); ++t) {
      if (c[t] == 0) continue;
      if (c[t] != 1 || label >= 0) return false;
      label = static_cast<int>(t);
    }
    if (label < 0 || !std::binary_search(theta.begin(), theta.end(), label)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// make_levi

LeviDatum make_levi(RootSystemPtr rs_ptr, std::vector<int> theta) {
  const RootSystem& rs = *rs_ptr;
  std::sort(theta.begin(), theta.end());
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i] < 0 || theta[i] >= rs.rank()) {
      throw InputError("Levi label " + std::to_string(theta[i]) + " is not a simple-root index of " +
                       rs.type().name() + " (valid: 0.." + std::to_string(rs.rank() - 1) + ")");
    }
    if (i > 0 && theta[i] == theta[i - 1]) throw InputError("Levi label " + std::to_string(theta[i]) + " repeated");
  }

  LeviDatum ld;
  ld.rs = rs_ptr;
  ld.theta = theta;
  for (int j = 0; j < rs.rank(); ++j) {
    if (!std::binary_search(theta.begin(), theta.end(), j)) ld.complement.push_back(j);
  }
  const int n = rs.size();
  const int dim = rs.ambient_dim();

  auto support_of = [&](int beta) {
    std::vector<int> s;
    for (int j : ld.complement) s.push_back(rs.coefficients(beta)[static_cast<std::size_t>(j)]);
    return s;
  };

  ld.in_phi_theta.resize(static_cast<std::size_t>(n));
  for (int b = 0; b < n; ++b) {
    const auto s = support_of(b);
    ld.in_phi_theta[static_cast<std::size_t>(b)] = std::all_of(s.begin(), s.end(), [](int x) { return x == 0; });
  }

  // a_M^*: vectors sum_j c_j alpha_j orthogonal to every alpha_i, i in theta.
  {
    std::vector<QVec> spanning;
    if (theta.empty()) {
      for (int j = 0; j < rs.rank(); ++j) spanning.push_back(rs.root(rs.simple_root(j)));
    } else {
      QMat g(static_cast<Eigen::Index>(theta.size()), rs.rank());
      for (std::size_t i = 0; i < theta.size(); ++i) {
        for (int j = 0; j < rs.rank(); ++j) g(static_cast<Eigen::Index>(i), j) = rs.inner(rs.simple_root(theta[i]), rs.simple_root(j));
      }
      for (const QVec& c : nullspace<Rational>(g)) {
        QVec v = QVec::Zero(dim);
        for (int j = 0; j < rs.rank(); ++j) v += c(j) * rs.root(rs.simple_root(j));
        spanning.push_back(v);
      }
    }
    ld.a_M_basis = row_space_basis<Rational>(spanning, dim);
  }
  ld.iota = static_cast<int>(ld.a_M_basis.size());
  ld.projector = orthogonal_projector<Rational>(ld.a_M_basis, dim);

  // Group roots outside Phi_theta by ray of their support; keep the indivisible member of each ray.
  struct RayInfo {
    int min_scale = 0;
    std::vector<int> min_support;
    int representative = -1;
  };
  std::map<std::vector<int>, RayInfo> rays;  // key: primitive support
  for (int b = 0; b < n; ++b) {
    if (ld.in_phi_theta[static_cast<std::size_t>(b)]) continue;
    const auto s = support_of(b);
    const int g = gcd_of(s);
    std::vector<int> key = s;
    for (int& x : key) x /= g;
    auto& info = rays[key];
    if (info.representative < 0 || g < info.min_scale) {
      info.min_scale = g;
      info.min_support = s;
      info.representative = b;
    }
  }
  std::vector<RelativeRoot> rel;
  std::map<std::vector<int>, int> rel_by_key;
  for (const auto& [key, info] : rays) {
    RelativeRoot r;
    r.support = info.min_support;
    r.height = std::accumulate(r.support.begin(), r.support.end(), 0);
    r.representative = info.representative;
    r.vector = ld.projector * rs.root(info.representative);
    rel.push_back(std::move(r));
  }
  std::sort(rel.begin(), rel.end(), [](const RelativeRoot& a, const RelativeRoot& b) {
    if (a.height != b.height) return a.height < b.height;
    return lex_less(a.vector, b.vector);
  });
  for (std::size_t i = 0; i < rel.size(); ++i) {
    std::vector<int> key = rel[i].support;
    const int g = gcd_of(key);
    for (int& x : key) x /= g;
    rel_by_key[key] = static_cast<int>(i);
  }
  ld.rel_of_root.assign(static_cast<std::size_t>(n), -1);
  ld.multiplier_of_root.assign(static_cast<std::size_t>(n), 0);
  for (int b = 0; b < n; ++b) {
    if (ld.in_phi_theta[static_cast<std::size_t>(b)]) continue;
    const auto s = support_of(b);
    const int g = gcd_of(s);
    std::vector<int> key = s;
    for (int& x : key) x /= g;
    const int r = rel_by_key.at(key);
    const int base = gcd_of(rel[static_cast<std::size_t>(r)].support);
    if (g % base != 0) throw InvariantViolation("non-integral multiple of a reduced relative root");
    ld.rel_of_root[static_cast<std::size_t>(b)] = r;
    ld.multiplier_of_root[static_cast<std::size_t>(b)] = g / base;
  }
  for (auto& r : rel) {
    std::vector<int> key = r.support;
    const int g = gcd_of(key);
    for (int& x : key) x = -x / g;
    r.negation = rel_by_key.at(key);
  }
  ld.relative_roots = std::move(rel);

  for (int j : ld.complement) ld.delta_M.push_back(ld.rel_of_root[static_cast<std::size_t>(rs.simple_root(j))]);

  // Relative reflections omega_alpha = w0^{M_alpha} w0^M, with M_alpha the Levi whose roots
  // are the absolute roots projecting into Q alpha.
  const WeylElement w0_theta = longest_element(rs, ld.theta);
  const std::size_t m = ld.relative_roots.size();
  ld.reflection_candidates.resize(m);
  ld.relative_reflections.resize(m);
  for (std::size_t r = 0; r < m; ++r) {
    if (!ld.relative_roots[r].positive()) continue;
    std::vector<int> psi_positive;
    for (int b = 0; b < n; ++b) {
      if (!rs.is_positive(b)) continue;
      if (ld.in_phi_theta[static_cast<std::size_t>(b)] || ld.rel_of_root[static_cast<std::size_t>(b)] == static_cast<int>(r)) {
        psi_positive.push_back(b);
      }
    }
    const auto simples = indecomposables(rs, psi_positive);
    const WeylElement omega = longest_element_of_simple_system(rs, simples) * w0_theta;
    ld.reflection_candidates[r] = omega;
    ld.reflection_candidates[static_cast<std::size_t>(ld.relative_roots[r].negation)] = omega;
    if (ld.stabilizes_theta(omega)) {
      ld.relative_reflections[r] = omega;
      ld.relative_reflections[static_cast<std::size_t>(ld.relative_roots[r].negation)] = omega;
    }
  }

  ld.small_position.assign(m, -1);
  for (std::size_t r = 0; r < m; ++r) {
    if (!ld.relative_reflections[r]) continue;
    ld.phi_M0.push_back(static_cast<int>(r));
    if (ld.relative_roots[r].positive()) {
      ld.small_position[r] = static_cast<int>(ld.phi_M0_positive.size());
      ld.phi_M0_positive.push_back(static_cast<int>(r));
    }
  }
  // Simple roots of Phi_M^0: omega_alpha permutes the other positive roots of Phi_M^0.
  for (int a : ld.phi_M0_positive) {
    const WeylElement& omega = *ld.relative_reflections[static_cast<std::size_t>(a)];
    bool simple = true;
    for (int b : ld.phi_M0_positive) {
      if (b == a) continue;
      if (!ld.relative_roots[static_cast<std::size_t>(ld.act(omega, b))].positive()) {
        simple = false;
        break;
      }
    }
    if (simple) ld.delta_M0.push_back(a);
  }
  std::vector<QVec> small_vectors;
  for (int a : ld.phi_M0) small_vectors.push_back(ld.relative_roots[static_cast<std::size_t>(a)].vector);
  ld.small_space = row_space_basis<Rational>(small_vectors, dim);
  return ld;
}

std::optional<WeylElement> relative_reflection(const LeviDatum& ld, int rel) {
  if (rel < 0 || static_cast<std::size_t>(rel) >= ld.rel_count()) {
    throw InputError("relative root index " + std::to_string(rel) + " is not in Phi_M");
  }
  return ld.relative_reflections[static_cast<std::size_t>(rel)];
}

// ---------------------------------------------------------------------------
// RelativeWeylGroup

std::optional<std::size_t> RelativeWeylGroup::find(const WeylElement& w) const {
  auto it = index.find(element_key(*rs, w));
  if (it == index.end()) return std::nullopt;
  return it->second;
}

std::size_t RelativeWeylGroup::index_of(const WeylElement& w) const {
  auto i = find(w);
  if (!i) throw InvariantViolation("element is not in W_M");
  return *i;
}

std::pair<WeylElement, WeylElement> decompose_element(const LeviDatum& ld, const WeylElement& w) {
  WeylElement rest = w;
  WeylElement small = WeylElement::identity(w.degree());
  const std::size_t bound = ld.phi_M0_positive.size();
  for (std::size_t step = 0;; ++step) {
    const WeylElement inv = rest.inverse();
    int descent = -1;
    for (int d : ld.delta_M0) {
      if (!ld.relative_roots[static_cast<std::size_t>(ld.act(inv, d))].positive()) {
        descent = d;
        break;
      }
    }
    if (descent < 0) break;
    if (step >= bound) throw InvariantViolation("descent into W_M^0 x W_M^1 did not terminate");
    const WeylElement& omega = *ld.relative_reflections[static_cast<std::size_t>(descent)];
    rest = omega * rest;
    small = small * omega;
  }
  return {small, rest};
}

std::vector<std::pair<std::size_t, std::size_t>> decompose_W_M(const LeviDatum& ld, const RelativeWeylGroup& rwg) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  out.reserve(rwg.size());
  for (const WeylElement& w : rwg.elements) {
    const auto [w0, w1] = decompose_element(ld, w);
    const std::size_t i0 = rwg.index_of(w0);
    const std::size_t i1 = rwg.index_of(w1);
    const int s = rwg.small_index[i0];
    const int c = rwg.complement_index[i1];
    if (s < 0) throw InvariantViolation("descent produced a left factor outside W_M^0");
    if (c < 0) throw InvariantViolation("descent produced a right factor outside W_M^1");
    out.emplace_back(static_cast<std::size_t>(s), static_cast<std::size_t>(c));
  }
  return out;
}

RelativeWeylGroup relative_weyl_group(const LeviDatum& ld, const WeylGroup& weyl) {
  if (weyl.root_system().type() != ld.rs->type()) throw InputError("Weyl group and Levi datum of different types");
  RelativeWeylGroup rwg;
  rwg.rs = ld.rs;
  for (std::size_t i = 0; i < weyl.size(); ++i) {
    if (!ld.stabilizes_theta(weyl[i])) continue;
    rwg.index.emplace(element_key(*ld.rs, weyl[i]), rwg.elements.size());
    rwg.elements.push_back(weyl[i]);
    rwg.words.push_back(weyl.word(i));
  }
  rwg.identity = rwg.index_of(WeylElement::identity(static_cast<std::size_t>(ld.rs->size())));

  rwg.small_index.assign(rwg.size(), -1);
  rwg.complement_index.assign(rwg.size(), -1);

  // W_M^0: breadth-first closure over the simple relative reflections.
  rwg.small.push_back(rwg.identity);
  rwg.small_words.push_back({});
  rwg.small_index[rwg.identity] = 0;
  for (std::size_t head = 0; head < rwg.small.size(); ++head) {
    for (std::size_t g = 0; g < ld.delta_M0.size(); ++g) {
      const WeylElement next =
          rwg.elements[rwg.small[head]] * *ld.relative_reflections[static_cast<std::size_t>(ld.delta_M0[g])];
      const std::size_t pos = rwg.index_of(next);
      if (rwg.small_index[pos] >= 0) continue;
      rwg.small_index[pos] = static_cast<int>(rwg.small.size());
      rwg.small.push_back(pos);
      auto word = rwg.small_words[head];
      word.push_back(static_cast<int>(g));
      rwg.small_words.push_back(std::move(word));
    }
  }
  for (int a : ld.phi_M0) {
    if (rwg.small_index[rwg.index_of(*ld.relative_reflections[static_cast<std::size_t>(a)])] < 0) {
      throw InvariantViolation("relative reflection outside the group generated by simple relative reflections");
    }
  }

  for (std::size_t i = 0; i < rwg.size(); ++i) {
    bool keeps_positive = true;
    for (int a : ld.phi_M0_positive) {
      if (!ld.relative_roots[static_cast<std::size_t>(ld.act(rwg.elements[i], a))].positive()) {
        keeps_positive = false;
        break;
      }
    }
    if (keeps_positive) {
      rwg.complement_index[i] = static_cast<int>(rwg.complement.size());
      rwg.complement.push_back(i);
    }
  }
  rwg.decomposition = decompose_W_M(ld, rwg);
  return rwg;
}

}  // namespace rodier
