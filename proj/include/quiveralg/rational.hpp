#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace qalg {

using Int = boost::multiprecision::cpp_int;
using Rat = boost::multiprecision::cpp_rational;

inline Int factorial(unsigned n) {
  Int r = 1;
  for (unsigned k = 2; k <= n; ++k) r *= k;
  return r;
}

inline Int binomial(const Int& n, unsigned k) {
  Int num = 1, den = 1;
  for (unsigned j = 0; j < k; ++j) {
    num *= n - j;
    den *= j + 1;
  }
  return num / den;
}

inline int to_int(const Int& v) {
  if (v > std::numeric_limits<int>::max() || v < std::numeric_limits<int>::min())
    throw std::overflow_error("to_int: value out of int range");
  return static_cast<int>(v);
}

struct DomainError : std::runtime_error {
  explicit DomainError(const std::string& what) : std::runtime_error(what) {}
};

// Signals a broken internal invariant (e.g. a non-exact division that the
// theory guarantees to be exact), never bad user input.
struct InternalError : std::logic_error {
  explicit InternalError(const std::string& what) : std::logic_error(what) {}
};

}  // namespace qalg
