#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <sstream>
#include <string>

namespace coulomb {

// Exact arithmetic everywhere; no floating point in the library.
using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Lattice entries (coweights, weights, exponents) are machine integers;
// BigInt/Rational are reserved for derived quantities that can grow.
using Int = long long;

inline BigInt numerator(const Rational& q) { return boost::multiprecision::numerator(q); }
inline BigInt denominator(const Rational& q) { return boost::multiprecision::denominator(q); }
inline bool is_integer(const Rational& q) { return denominator(q) == 1; }

inline std::string to_string(const Rational& q) {
  std::ostringstream os;
  os << q;
  return os.str();
}

inline std::string to_string(const BigInt& n) {
  std::ostringstream os;
  os << n;
  return os.str();
}

// Floor of p/q for exact rationals.
inline BigInt floor_rational(const Rational& q) {
  BigInt n = numerator(q), d = denominator(q);
  BigInt quo = n / d;
  if (n < 0 && quo * d != n) --quo;
  return quo;
}

inline BigInt ceil_rational(const Rational& q) { return -floor_rational(-q); }

}  // namespace coulomb
