#ifndef RODIER_RATIONAL_HPP
#define RODIER_RATIONAL_HPP

#include <compare>
#include <cstdint>
#include <functional>
#include <iosfwd>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <string>
#include <string_view>

#include <Eigen/Core>

namespace rodier {

/// Exact rational number on 64-bit numerator/denominator.
///
/// Always normalized (gcd 1, positive denominator). Every operation is computed
/// with 128-bit intermediates; a result that does not fit in 64 bits throws
/// std::overflow_error instead of wrapping, so values are either exact or absent.
class Rational {
 public:
  constexpr Rational() = default;
  constexpr Rational(long long n) : num_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(long long n, long long d) { assign(n, d); }

  long long num() const { return num_; }
  long long den() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_integer() const { return den_ == 1; }
  int sign() const { return (num_ > 0) - (num_ < 0); }

  Rational operator-() const {
    if (num_ == std::numeric_limits<long long>::min()) throw std::overflow_error("rational negation overflow");
    Rational r;
    r.num_ = -num_;
    r.den_ = den_;
    return r;
  }

  friend Rational operator+(const Rational& a, const Rational& b) {
    if (a.den_ == b.den_) return from_wide(static_cast<__int128>(a.num_) + b.num_, a.den_);
    const __int128 n = static_cast<__int128>(a.num_) * b.den_ + static_cast<__int128>(b.num_) * a.den_;
    const __int128 d = static_cast<__int128>(a.den_) * b.den_;
    return from_wide(n, d);
  }
  friend Rational operator-(const Rational& a, const Rational& b) { return a + (-b); }
  friend Rational operator*(const Rational& a, const Rational& b) {
    if (a.num_ == 0 || b.num_ == 0) return Rational();
    return from_wide(static_cast<__int128>(a.num_) * b.num_, static_cast<__int128>(a.den_) * b.den_);
  }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.num_ == 0) throw std::domain_error("rational division by zero");
    return from_wide(static_cast<__int128>(a.num_) * b.den_, static_cast<__int128>(a.den_) * b.num_);
  }

  Rational& operator+=(const Rational& o) { return *this = *this + o; }
  Rational& operator-=(const Rational& o) { return *this = *this - o; }
  Rational& operator*=(const Rational& o) { return *this = *this * o; }
  Rational& operator/=(const Rational& o) { return *this = *this / o; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.num_ == b.num_ && a.den_ == b.den_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const __int128 l = static_cast<__int128>(a.num_) * b.den_;
    const __int128 r = static_cast<__int128>(b.num_) * a.den_;
    return l <=> r;
  }

  /// "p/q" with q always present (canonical serialization).
  std::string str() const { return std::to_string(num_) + "/" + std::to_string(den_); }

  /// Accepts "p", "p/q", "-p/q"; whitespace is not allowed.
  static Rational parse(std::string_view text);

 private:
  static __int128 gcd_wide(__int128 a, __int128 b) {
    if (a < 0) a = -a;
    if (b < 0) b = -b;
    while (b != 0) {
      const __int128 t = a % b;
      a = b;
      b = t;
    }
    return a;
  }

  static Rational from_wide(__int128 n, __int128 d) {
    if (d == 0) throw std::domain_error("rational with zero denominator");
    if (d < 0) {
      n = -n;
      d = -d;
    }
    const __int128 g = gcd_wide(n, d);
    if (g > 1) {
      n /= g;
      d /= g;
    }
    constexpr __int128 lo = std::numeric_limits<long long>::min();
    constexpr __int128 hi = std::numeric_limits<long long>::max();
    if (n < lo || n > hi || d > hi) throw std::overflow_error("rational overflow beyond 64-bit range");
    Rational r;
    r.num_ = static_cast<long long>(n);
    r.den_ = static_cast<long long>(d);
    return r;
  }

  void assign(long long n, long long d) { *this = from_wide(n, d); }

  long long num_ = 0;
  long long den_ = 1;
};

inline Rational abs(const Rational& r) { return r.sign() < 0 ? -r : r; }

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace rodier

template <>
struct std::hash<rodier::Rational> {
  std::size_t operator()(const rodier::Rational& r) const noexcept {
    return std::hash<long long>{}(r.num()) * 1000003u ^ std::hash<long long>{}(r.den());
  }
};

namespace Eigen {

template <>
struct NumTraits<rodier::Rational> : GenericNumTraits<rodier::Rational> {
  using Real = rodier::Rational;
  using NonInteger = rodier::Rational;
  using Literal = rodier::Rational;
  using Nested = rodier::Rational;

  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 2,
    AddCost = 8,
    MulCost = 8
  };

  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline Real highest() { return Real(std::numeric_limits<long long>::max()); }
  static inline Real lowest() { return Real(std::numeric_limits<long long>::min() + 1); }
  static inline int digits10() { return 0; }
};

}  // namespace Eigen

#endif  // RODIER_RATIONAL_HPP
