#ifndef RODIER_CARTAN_HPP
#define RODIER_CARTAN_HPP

#include <compare>
#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "rodier/linalg.hpp"
#include "rodier/rational.hpp"

namespace rodier {

using RootIndex = std::uint16_t;

inline constexpr std::size_t kDefaultEnumerationCap = 60000;

/// Classification label of an irreducible reduced crystallographic root system.
struct CartanType {
  char family = 'A';
  int rank = 1;

  /// Parses labels such as "A1", "D6", "E6"; throws InputError on malformed or out-of-range labels.
  static CartanType parse(std::string_view label);

  std::string name() const { return std::string(1, family) + std::to_string(rank); }

  /// Throws InputError naming the violated rank bound.
  void validate() const;

  /// |Phi| from the classification tables.
  std::size_t root_count() const;
  /// |W| from the classification tables.
  std::size_t weyl_order() const;

  friend bool operator==(const CartanType&, const CartanType&) = default;
  friend auto operator<=>(const CartanType&, const CartanType&) = default;
};

/// Roots of an irreducible type in Bourbaki coordinates.
///
/// Roots are generated by closing the simple roots under simple reflections and
/// are stored in canonical order: ascending height, ties broken by
/// lexicographic order of the ambient coordinates. Simple roots are listed
/// separately in Bourbaki label order.
class RootSystem {
 public:
  explicit RootSystem(CartanType type);

  const CartanType& type() const { return type_; }
  int rank() const { return type_.rank; }
  int ambient_dim() const { return ambient_dim_; }
  int size() const { return static_cast<int>(roots_.size()); }

  const QVec& root(int i) const { return roots_[static_cast<std::size_t>(i)]; }
  const std::vector<int>& coefficients(int i) const { return coeffs_[static_cast<std::size_t>(i)]; }
  int height(int i) const { return heights_[static_cast<std::size_t>(i)]; }
  bool is_positive(int i) const { return heights_[static_cast<std::size_t>(i)] > 0; }
  int negative_of(int i) const { return negation_[static_cast<std::size_t>(i)]; }

  /// Root index of the j-th simple root, j in Bourbaki order.
  int simple_root(int j) const { return simple_[static_cast<std::size_t>(j)]; }
  const std::vector<int>& simple_roots() const { return simple_; }
  std::vector<int> positive_roots() const;

  std::optional<int> find(const QVec& v) const;
  std::optional<int> find_coefficients(const std::vector<int>& c) const;

  /// (beta_i, beta_j) in the ambient inner product.
  const Rational& inner(int i, int j) const { return inner_[index2(i, j)]; }
  /// <beta, alpha^vee> = 2 (beta, alpha) / (alpha, alpha); always an integer.
  int cartan_integer(int beta, int alpha) const { return cartan_[index2(beta, alpha)]; }
  /// Root permutation of the reflection w_alpha.
  std::span<const RootIndex> reflection_action(int alpha) const {
    return {reflections_.data() + static_cast<std::size_t>(alpha) * roots_.size(), roots_.size()};
  }

  /// Coefficients of v on the simple roots; nullopt when v is not in span(Phi).
  std::optional<QVec> simple_coordinates(const QVec& v) const;

 private:
  std::size_t index2(int i, int j) const {
    return static_cast<std::size_t>(i) * roots_.size() + static_cast<std::size_t>(j);
  }

  CartanType type_;
  int ambient_dim_ = 0;
  std::vector<QVec> roots_;
  std::vector<std::vector<int>> coeffs_;
  std::vector<int> heights_;
  std::vector<int> negation_;
  std::vector<int> simple_;
  std::vector<Rational> inner_;
  std::vector<int> cartan_;
  std::vector<RootIndex> reflections_;
  QMat simple_matrix_;   // ambient_dim x rank
  QMat coordinate_map_;  // rank x ambient_dim, left inverse of simple_matrix_
  std::unordered_map<std::string, int> by_coeffs_;
};

using RootSystemPtr = std::shared_ptr<const RootSystem>;

RootSystemPtr build_root_system(CartanType type);

/// Weyl group element, represented canonically by the permutation it induces on
/// the root list. Words are witnesses only; equality is permutation equality.
class WeylElement {
 public:
  WeylElement() = default;
  explicit WeylElement(std::vector<RootIndex> perm) : perm_(std::move(perm)) {}

  static WeylElement identity(std::size_t degree);

  std::size_t degree() const { return perm_.size(); }
  int operator()(int root) const { return perm_[static_cast<std::size_t>(root)]; }
  const std::vector<RootIndex>& perm() const { return perm_; }

  bool is_identity() const;
  WeylElement inverse() const;

  /// Composition: (a * b)(beta) = a(b(beta)).
  friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
  friend bool operator==(const WeylElement&, const WeylElement&) = default;
  friend auto operator<=>(const WeylElement&, const WeylElement&) = default;

 private:
  std::vector<RootIndex> perm_;
};

/// Packs the images of the simple roots; determines the element uniquely.
std::uint64_t element_key(const RootSystem& rs, const WeylElement& w);

/// Linear action of w on a vector of span(Phi).
QVec apply(const RootSystem& rs, const WeylElement& w, const QVec& v);

WeylElement reflection(const RootSystem& rs, int root_index);

/// Longest element of the parabolic subgroup W_theta; theta holds Bourbaki simple-root labels.
WeylElement longest_element(const RootSystem& rs, std::span<const int> theta);

/// Longest element of the reflection subgroup whose simple system is given by root indices.
WeylElement longest_element_of_simple_system(const RootSystem& rs, std::span<const int> simple_system);

/// <beta, alpha^vee> for a vector beta in span(Phi) and a root alpha.
Rational pairing(const RootSystem& rs, const QVec& beta, int alpha);
/// 2 (beta, alpha) / (alpha, alpha) for arbitrary vectors; alpha must be nonzero.
Rational pairing(const QVec& beta, const QVec& alpha);

enum class GeneratorOrder { kForward, kReverse };

/// Full element list of W, in breadth-first order from the identity, each with a
/// reduced word (sequence of Bourbaki simple-reflection labels).
class WeylGroup {
 public:
  WeylGroup(RootSystemPtr rs, std::vector<WeylElement> elements, std::vector<std::vector<std::uint8_t>> words);

  const RootSystem& root_system() const { return *rs_; }
  const RootSystemPtr& root_system_ptr() const { return rs_; }
  std::size_t size() const { return elements_.size(); }
  const WeylElement& operator[](std::size_t i) const { return elements_[i]; }
  const std::vector<WeylElement>& elements() const { return elements_; }
  const std::vector<std::uint8_t>& word(std::size_t i) const { return words_[i]; }
  std::optional<std::size_t> find(const WeylElement& w) const;
  std::size_t index_of(const WeylElement& w) const;

 private:
  RootSystemPtr rs_;
  std::vector<WeylElement> elements_;
  std::vector<std::vector<std::uint8_t>> words_;
  std::unordered_map<std::uint64_t, std::size_t> index_;
};

/// Enumerates W by breadth-first closure over the simple reflections.
/// Throws EnumerationTooLarge when |W| exceeds `cap`.
WeylGroup generate_weyl(RootSystemPtr rs, std::size_t cap = kDefaultEnumerationCap,
                        GeneratorOrder order = GeneratorOrder::kForward);

/// Word evaluation: s_{word[0]} * s_{word[1]} * ...
WeylElement evaluate_word(const RootSystem& rs, std::span<const std::uint8_t> word);

}  // namespace rodier

#endif  // RODIER_CARTAN_HPP
