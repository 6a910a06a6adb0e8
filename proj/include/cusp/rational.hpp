#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <numeric>
#include <stdexcept>
#include <string>

namespace cusp {

// Exact arbitrary-precision rational. mpq_class keeps gcd(num,den)=1, den>0.
using Rational = mpq_class;
using Integer = mpz_class;

struct math_error : std::runtime_error {
  explicit math_error(const std::string& what) : std::runtime_error(what) {}
};

inline Rational rat(long num, long den = 1) {
  if (den == 0) throw math_error("rational with zero denominator");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

inline bool is_zero(const Rational& r) { return sgn(r) == 0; }

inline bool is_integer(const Rational& r) { return r.get_den() == 1; }

inline long to_long(const Rational& r) {
  if (!is_integer(r)) throw math_error("rational is not an integer");
  if (!r.get_num().fits_slong_p()) throw math_error("integer overflows long");
  return r.get_num().get_si();
}

inline Rational rat_pow(const Rational& base, long e) {
  if (e == 0) return Rational(1);
  Rational b = e > 0 ? base : Rational(1) / base;
  unsigned long n = e > 0 ? e : -e;
  Rational acc(1);
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

// "p/q" or "p" (q > 0 enforced by canonicalization).
inline Rational rat_parse(const std::string& s) {
  Rational r;
  if (r.set_str(s, 10) != 0) throw math_error("cannot parse rational: " + s);
  if (r.get_den() == 0) throw math_error("rational with zero denominator: " + s);
  r.canonicalize();
  return r;
}

inline std::string rat_str(const Rational& r) { return r.get_str(); }

inline long lcm_long(long a, long b) { return std::lcm(a, b); }

}  // namespace cusp
