#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace homspec {

using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

/// Canonical "p/q" text form; integers keep the "/1" suffix so every density
/// in a report has the same shape.
inline std::string to_string(const Rational& r) {
  return boost::multiprecision::numerator(r).str() + "/" +
         boost::multiprecision::denominator(r).str();
}

inline std::string to_string(const Integer& i) { return i.str(); }

inline Rational parse_rational(const std::string& text) {
  auto slash = text.find('/');
  if (slash == std::string::npos) return Rational(Integer(text));
  return Rational(Integer(text.substr(0, slash)), Integer(text.substr(slash + 1)));
}

inline Integer ipow(const Integer& base, unsigned exp) {
  Integer result = 1;
  for (unsigned i = 0; i < exp; ++i) result *= base;
  return result;
}

inline Rational rpow(const Rational& base, int exp) {
  Rational result = 1;
  if (exp >= 0) {
    for (int i = 0; i < exp; ++i) result *= base;
  } else {
    for (int i = 0; i < -exp; ++i) result /= base;
  }
  return result;
}

inline int sign(const Rational& r) { return r.sign(); }

}  // namespace homspec
