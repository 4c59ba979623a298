#ifndef RODIER_ERRORS_HPP
#define RODIER_ERRORS_HPP

#include <cstddef>
#include <stdexcept>
#include <string>

namespace rodier {

/// Invalid input data: a violated precondition or spec field. CLI exit code 2.
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Weyl group enumeration refused because it would exceed the configured cap. CLI exit code 3.
class EnumerationTooLarge : public std::runtime_error {
 public:
  EnumerationTooLarge(const std::string& type_name, std::size_t order, std::size_t cap)
      : std::runtime_error("enumeration too large: W(" + type_name + ") has order " + std::to_string(order) +
                           ", above the enumeration cap " + std::to_string(cap)),
        cap_(cap) {}
  std::size_t cap() const { return cap_; }

 private:
  std::size_t cap_;
};

/// An internal structural invariant failed. Never expected; signals a bug or a
/// counterexample to a structural claim the engine relies on.
class InvariantViolation : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

}  // namespace rodier

#endif  // RODIER_ERRORS_HPP
