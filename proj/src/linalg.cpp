#include "rodier/linalg.hpp"

#include <numeric>
#include <stdexcept>

namespace rodier {

std::vector<long long> primitive_integral(const QVec& v) {
  long long lcm = 1;
  for (Eigen::Index i = 0; i < v.size(); ++i) lcm = std::lcm(lcm, v(i).den());
  std::vector<long long> out(static_cast<std::size_t>(v.size()));
  long long g = 0;
  for (Eigen::Index i = 0; i < v.size(); ++i) {
    const Rational scaled = v(i) * Rational(lcm);
    out[static_cast<std::size_t>(i)] = scaled.num();
    g = std::gcd(g, scaled.num());
  }
  if (g == 0) throw std::invalid_argument("primitive_integral of the zero vector");
  for (auto& x : out) x /= g;
  return out;
}

bool lex_less(const QVec& a, const QVec& b) {
  const Eigen::Index n = std::min(a.size(), b.size());
  for (Eigen::Index i = 0; i < n; ++i) {
    if (a(i) != b(i)) return a(i) < b(i);
  }
  return a.size() < b.size();
}

}  // namespace rodier
