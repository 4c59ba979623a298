#include "rodier/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include "rodier/errors.hpp"

namespace rodier {

namespace {

QVec unit(int dim, int i, Rational c = Rational(1)) {
  QVec v = QVec::Zero(dim);
  v(i) = c;
  return v;
}

std::string coeff_key(const std::vector<int>& c) {
  std::string key;
  key.reserve(c.size() * 3);
  for (int x : c) {
    key += std::to_string(x);
    key += ',';
  }
  return key;
}

// Bourbaki realizations (planches). Returns the ambient dimension and the simple roots.
std::pair<int, std::vector<QVec>> bourbaki_simple_roots(const CartanType& t) {
  const int n = t.rank;
  std::vector<QVec> simple;
  switch (t.family) {
    case 'A': {
      for (int i = 0; i < n; ++i) simple.push_back(unit(n + 1, i) - unit(n + 1, i + 1));
      return {n + 1, simple};
    }
    case 'B':
    case 'C':
    case 'D': {
      for (int i = 0; i + 1 < n; ++i) simple.push_back(unit(n, i) - unit(n, i + 1));
      if (t.family == 'B') simple.push_back(unit(n, n - 1));
      if (t.family == 'C') simple.push_back(unit(n, n - 1, Rational(2)));
      if (t.family == 'D') simple.push_back(unit(n, n - 2) + unit(n, n - 1));
      return {n, simple};
    }
    case 'E': {
      const Rational h(1, 2);
      QVec a1 = QVec::Constant(8, -h);
      a1(0) = h;
      a1(7) = h;
      simple.push_back(a1);
      simple.push_back(unit(8, 0) + unit(8, 1));
      for (int i = 0; i + 2 < n; ++i) simple.push_back(unit(8, i + 1) - unit(8, i));
      return {8, simple};
    }
    case 'F': {
      const Rational h(1, 2);
      simple.push_back(unit(4, 1) - unit(4, 2));
      simple.push_back(unit(4, 2) - unit(4, 3));
      simple.push_back(unit(4, 3));
      QVec a4(4);
      a4 << h, -h, -h, -h;
      simple.push_back(a4);
      return {4, simple};
    }
    case 'G': {
      simple.push_back(unit(3, 0) - unit(3, 1));
      QVec a2(3);
      a2 << Rational(-2), Rational(1), Rational(1);
      simple.push_back(a2);
      return {3, simple};
    }
    default:
      break;
  }
  throw InputError("unknown Cartan family '" + std::string(1, t.family) + "'");
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

}  // namespace

// ---------------------------------------------------------------------------
// CartanType

CartanType CartanType::parse(std::string_view label) {
  if (label.size() < 2) throw InputError("malformed Cartan type \"" + std::string(label) + "\"");
  CartanType t;
  t.family = label[0];
  int r = 0;
  for (char c : label.substr(1)) {
    if (c < '0' || c > '9') throw InputError("malformed Cartan type \"" + std::string(label) + "\"");
    r = r * 10 + (c - '0');
    if (r > 1000) throw InputError("malformed Cartan type \"" + std::string(label) + "\"");
  }
  t.rank = r;
  t.validate();
  return t;
}

void CartanType::validate() const {
  auto fail = [&](const std::string& bound) {
    throw InputError("invalid rank " + std::to_string(rank) + " for family " + std::string(1, family) +
                     ": requires " + bound);
  };
  switch (family) {
    case 'A':
      if (rank < 1) fail("rank >= 1");
      return;
    case 'B':
    case 'C':
      if (rank < 2) fail("rank >= 2");
      return;
    case 'D':
      if (rank < 3) fail("rank >= 3");
      return;
    case 'E':
      if (rank < 6 || rank > 8) fail("rank in {6,7,8}");
      return;
    case 'F':
      if (rank != 4) fail("rank == 4");
      return;
    case 'G':
      if (rank != 2) fail("rank == 2");
      return;
    default:
      throw InputError("unknown Cartan family '" + std::string(1, family) + "' (expected one of A,B,C,D,E,F,G)");
  }
}

std::size_t CartanType::root_count() const {
  const auto n = static_cast<std::size_t>(rank);
  switch (family) {
    case 'A': return n * (n + 1);
    case 'B':
    case 'C': return 2 * n * n;
    case 'D': return 2 * n * (n - 1);
    case 'E': return rank == 6 ? 72 : rank == 7 ? 126 : 240;
    case 'F': return 48;
    case 'G': return 12;
    default: return 0;
  }
}

std::size_t CartanType::weyl_order() const {
  const auto n = static_cast<std::size_t>(rank);
  switch (family) {
    case 'A': return factorial(rank + 1);
    case 'B':
    case 'C': return (std::size_t{1} << n) * factorial(rank);
    case 'D': return (std::size_t{1} << (n - 1)) * factorial(rank);
    case 'E': return rank == 6 ? 51840 : rank == 7 ? 2903040 : 696729600;
    case 'F': return 1152;
    case 'G': return 12;
    default: return 0;
  }
}

// ---------------------------------------------------------------------------
// RootSystem

RootSystem::RootSystem(CartanType type) : type_(type) {
  type_.validate();
  auto [dim, simple_vecs] = bourbaki_simple_roots(type_);
  ambient_dim_ = dim;
  const int n = type_.rank;

  // Cartan matrix a(i, j) = <alpha_i, alpha_j^vee>.
  std::vector<std::vector<int>> a(static_cast<std::size_t>(n), std::vector<int>(static_cast<std::size_t>(n)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      const Rational c = pairing(simple_vecs[static_cast<std::size_t>(i)], simple_vecs[static_cast<std::size_t>(j)]);
      if (!c.is_integer()) throw InvariantViolation("non-integral Cartan matrix entry for " + type_.name());
      a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] = static_cast<int>(c.num());
    }
  }

  // Closure of the simple roots under simple reflections, on integer coefficient vectors.
  std::map<std::vector<int>, bool> seen;
  std::deque<std::vector<int>> queue;
  for (int i = 0; i < n; ++i) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i)] = 1;
    seen[c] = true;
    queue.push_back(c);
  }
  const std::size_t expected = type_.root_count();
  while (!queue.empty()) {
    const std::vector<int> beta = queue.front();
    queue.pop_front();
    for (int j = 0; j < n; ++j) {
      int pair = 0;
      for (int i = 0; i < n; ++i) pair += beta[static_cast<std::size_t>(i)] * a[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
      std::vector<int> image = beta;
      image[static_cast<std::size_t>(j)] -= pair;
      if (seen.emplace(image, true).second) queue.push_back(std::move(image));
    }
    if (seen.size() > 4 * expected + 16) throw InvariantViolation("root closure did not terminate for " + type_.name());
  }

  struct Entry {
    std::vector<int> coeffs;
    QVec ambient;
    int height;
  };
  std::vector<Entry> entries;
  for (const auto& [c, unused] : seen) {
    QVec v = QVec::Zero(dim);
    for (int i = 0; i < n; ++i) v += Rational(c[static_cast<std::size_t>(i)]) * simple_vecs[static_cast<std::size_t>(i)];
    entries.push_back({c, v, std::accumulate(c.begin(), c.end(), 0)});
  }
  std::sort(entries.begin(), entries.end(), [](const Entry& x, const Entry& y) {
    if (x.height != y.height) return x.height < y.height;
    return lex_less(x.ambient, y.ambient);
  });

  for (auto& e : entries) {
    by_coeffs_[coeff_key(e.coeffs)] = static_cast<int>(roots_.size());
    roots_.push_back(std::move(e.ambient));
    coeffs_.push_back(std::move(e.coeffs));
    heights_.push_back(e.height);
  }
  const std::size_t m = roots_.size();

  for (int i = 0; i < n; ++i) {
    std::vector<int> c(static_cast<std::size_t>(n), 0);
    c[static_cast<std::size_t>(i)] = 1;
    simple_.push_back(by_coeffs_.at(coeff_key(c)));
  }
  negation_.resize(m);
  for (std::size_t i = 0; i < m; ++i) {
    std::vector<int> neg = coeffs_[i];
    for (int& x : neg) x = -x;
    negation_[i] = by_coeffs_.at(coeff_key(neg));
  }

  inner_.resize(m * m);
  cartan_.resize(m * m);
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) inner_[i * m + j] = roots_[i].dot(roots_[j]);
  }
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      const Rational c = Rational(2) * inner_[i * m + j] / inner_[j * m + j];
      if (!c.is_integer()) throw InvariantViolation("non-integral pairing in " + type_.name());
      cartan_[i * m + j] = static_cast<int>(c.num());
    }
  }

  reflections_.resize(m * m);
  for (std::size_t alpha = 0; alpha < m; ++alpha) {
    for (std::size_t beta = 0; beta < m; ++beta) {
      const int k = cartan_[beta * m + alpha];
      std::vector<int> img = coeffs_[beta];
      for (std::size_t t = 0; t < img.size(); ++t) img[t] -= k * coeffs_[alpha][t];
      auto it = by_coeffs_.find(coeff_key(img));
      if (it == by_coeffs_.end()) throw InvariantViolation("root set not closed under reflections in " + type_.name());
      reflections_[alpha * m + beta] = static_cast<RootIndex>(it->second);
    }
  }

  simple_matrix_ = QMat(dim, n);
  for (int j = 0; j < n; ++j) simple_matrix_.col(j) = simple_vecs[static_cast<std::size_t>(j)];
  const QMat gram = simple_matrix_.transpose() * simple_matrix_;
  QMat gram_inv(n, n);
  for (int j = 0; j < n; ++j) gram_inv.col(j) = *solve<Rational>(gram, unit(n, j));
  coordinate_map_ = gram_inv * simple_matrix_.transpose();
}

std::vector<int> RootSystem::positive_roots() const {
  std::vector<int> out;
  for (int i = 0; i < size(); ++i) {
    if (is_positive(i)) out.push_back(i);
  }
  return out;
}

std::optional<QVec> RootSystem::simple_coordinates(const QVec& v) const {
  if (v.size() != ambient_dim_) return std::nullopt;
  QVec c = coordinate_map_ * v;
  if (simple_matrix_ * c != v) return std::nullopt;
  return c;
}

std::optional<int> RootSystem::find_coefficients(const std::vector<int>& c) const {
  auto it = by_coeffs_.find(coeff_key(c));
  if (it == by_coeffs_.end()) return std::nullopt;
  return it->second;
}

std::optional<int> RootSystem::find(const QVec& v) const {
  const auto c = simple_coordinates(v);
  if (!c) return std::nullopt;
  std::vector<int> ints;
  for (Eigen::Index i = 0; i < c->size(); ++i) {
    if (!(*c)(i).is_integer()) return std::nullopt;
    ints.push_back(static_cast<int>((*c)(i).num()));
  }
  return find_coefficients(ints);
}

RootSystemPtr build_root_system(CartanType type) { return std::make_shared<const RootSystem>(type); }

// ---------------------------------------------------------------------------
// WeylElement

WeylElement WeylElement::identity(std::size_t degree) {
  std::vector<RootIndex> p(degree);
  std::iota(p.begin(), p.end(), RootIndex{0});
  return WeylElement(std::move(p));
}

bool WeylElement::is_identity() const {
  for (std::size_t i = 0; i < perm_.size(); ++i) {
    if (perm_[i] != i) return false;
  }
  return true;
}

WeylElement WeylElement::inverse() const {
  std::vector<RootIndex> inv(perm_.size());
  for (std::size_t i = 0; i < perm_.size(); ++i) inv[perm_[i]] = static_cast<RootIndex>(i);
  return WeylElement(std::move(inv));
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
  std::vector<RootIndex> p(b.perm_.size());
  for (std::size_t i = 0; i < p.size(); ++i) p[i] = a.perm_[b.perm_[i]];
  return WeylElement(std::move(p));
}

std::uint64_t element_key(const RootSystem& rs, const WeylElement& w) {
  std::uint64_t key = 0;
  for (int j = 0; j < rs.rank(); ++j) key |= static_cast<std::uint64_t>(w(rs.simple_root(j))) << (8 * j);
  return key;
}

QVec apply(const RootSystem& rs, const WeylElement& w, const QVec& v) {
  const auto c = rs.simple_coordinates(v);
  if (!c) throw InputError("vector does not lie in the span of the roots");
  QVec out = QVec::Zero(rs.ambient_dim());
  for (int j = 0; j < rs.rank(); ++j) {
    if (!(*c)(j).is_zero()) out += (*c)(j) * rs.root(w(rs.simple_root(j)));
  }
  return out;
}

WeylElement reflection(const RootSystem& rs, int root_index) {
  if (root_index < 0 || root_index >= rs.size()) throw InputError("root index out of range");
  const auto act = rs.reflection_action(root_index);
  return WeylElement(std::vector<RootIndex>(act.begin(), act.end()));
}

WeylElement longest_element_of_simple_system(const RootSystem& rs, std::span<const int> simple_system) {
  WeylElement w = WeylElement::identity(static_cast<std::size_t>(rs.size()));
  // Right-multiplying by s_a whenever w(a) > 0 strictly increases the length inside the
  // subgroup; the process stops exactly at the element sending every simple root negative.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int a : simple_system) {
      if (rs.is_positive(w(a))) {
        w = w * reflection(rs, a);
        changed = true;
      }
    }
  }
  return w;
}

WeylElement longest_element(const RootSystem& rs, std::span<const int> theta) {
  std::vector<int> roots;
  for (int j : theta) {
    if (j < 0 || j >= rs.rank()) throw InputError("simple-root label " + std::to_string(j) + " out of range");
    roots.push_back(rs.simple_root(j));
  }
  return longest_element_of_simple_system(rs, roots);
}

Rational pairing(const QVec& beta, const QVec& alpha) {
  const Rational norm = alpha.dot(alpha);
  if (norm.is_zero()) throw InputError("pairing against the zero vector");
  if (beta.size() != alpha.size()) throw InputError("pairing of vectors with different dimensions");
  return Rational(2) * beta.dot(alpha) / norm;
}

Rational pairing(const RootSystem& rs, const QVec& beta, int alpha) {
  if (!rs.simple_coordinates(beta)) throw InputError("pairing argument does not lie in the span of the roots");
  return pairing(beta, rs.root(alpha));
}

// ---------------------------------------------------------------------------
// WeylGroup

WeylGroup::WeylGroup(RootSystemPtr rs, std::vector<WeylElement> elements,
                     std::vector<std::vector<std::uint8_t>> words)
    : rs_(std::move(rs)), elements_(std::move(elements)), words_(std::move(words)) {
  index_.reserve(elements_.size());
  for (std::size_t i = 0; i < elements_.size(); ++i) index_.emplace(element_key(*rs_, elements_[i]), i);
  if (index_.size() != elements_.size()) throw InvariantViolation("duplicate Weyl group elements");
}

std::optional<std::size_t> WeylGroup::find(const WeylElement& w) const {
  auto it = index_.find(element_key(*rs_, w));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t WeylGroup::index_of(const WeylElement& w) const {
  auto i = find(w);
  if (!i) throw InvariantViolation("element not found in the Weyl group");
  return *i;
}

WeylElement evaluate_word(const RootSystem& rs, std::span<const std::uint8_t> word) {
  WeylElement w = WeylElement::identity(static_cast<std::size_t>(rs.size()));
  for (auto j : word) w = w * reflection(rs, rs.simple_root(j));
  return w;
}

WeylGroup generate_weyl(RootSystemPtr rs, std::size_t cap, GeneratorOrder order) {
  const std::size_t expected = rs->type().weyl_order();
  if (expected > cap) throw EnumerationTooLarge(rs->type().name(), expected, cap);

  std::vector<int> gens(static_cast<std::size_t>(rs->rank()));
  std::iota(gens.begin(), gens.end(), 0);
  if (order == GeneratorOrder::kReverse) std::reverse(gens.begin(), gens.end());
  std::vector<WeylElement> simple;
  for (int j = 0; j < rs->rank(); ++j) simple.push_back(reflection(*rs, rs->simple_root(j)));

  std::vector<WeylElement> elements{WeylElement::identity(static_cast<std::size_t>(rs->size()))};
  std::vector<std::vector<std::uint8_t>> words{{}};
  std::unordered_map<std::uint64_t, std::size_t> seen{{element_key(*rs, elements[0]), 0}};
  for (std::size_t head = 0; head < elements.size(); ++head) {
    for (int j : gens) {
      WeylElement next = elements[head] * simple[static_cast<std::size_t>(j)];
      if (!seen.emplace(element_key(*rs, next), elements.size()).second) continue;
      if (elements.size() >= cap) throw EnumerationTooLarge(rs->type().name(), elements.size() + 1, cap);
      auto word = words[head];
      word.push_back(static_cast<std::uint8_t>(j));
      elements.push_back(std::move(next));
      words.push_back(std::move(word));
    }
  }
  return WeylGroup(std::move(rs), std::move(elements), std::move(words));
}

}  // namespace rodier
