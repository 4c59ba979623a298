#include "rodier/rational.hpp"

#include <charconv>
#include <ostream>

#include "rodier/errors.hpp"

namespace rodier {

namespace {

long long parse_integer(std::string_view text, std::string_view whole) {
  long long value = 0;
  const char* first = text.data();
  const char* last = text.data() + text.size();
  if (first != last && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (first == last || ec != std::errc() || ptr != last) {
    throw InputError("malformed rational \"" + std::string(whole) + "\" (expected \"p/q\")");
  }
  return value;
}

}  // namespace

Rational Rational::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_integer(text, text));
  const long long n = parse_integer(text.substr(0, slash), text);
  const long long d = parse_integer(text.substr(slash + 1), text);
  if (d == 0) throw InputError("rational \"" + std::string(text) + "\" has zero denominator");
  return Rational(n, d);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
  os << r.num();
  if (r.den() != 1) os << '/' << r.den();
  return os;
}

}  // namespace rodier
