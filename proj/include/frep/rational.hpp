#pragma once

#include <gmpxx.h>

#include <string>

#include "frep/error.hpp"

namespace frep {

// Exact rationals, always canonical: gcd(num, den) = 1, den > 0, zero is 0/1.
// GMP maintains the invariants; everything here stays in arbitrary precision.
using Rational = mpq_class;
using Integer = mpz_class;

inline Rational rat(long num, long den = 1) {
  Rational q(num, den);
  q.canonicalize();
  return q;
}

inline Rational rat_from_string(const std::string& text) {
  Rational q;
  if (q.set_str(text, 10) != 0) throw InvalidArgument("bad rational literal: " + text);
  if (q.get_den() == 0) throw InvalidArgument("zero denominator in rational literal: " + text);
  q.canonicalize();
  return q;
}

inline std::string rat_to_string(const Rational& q) { return q.get_str(); }

}  // namespace frep
