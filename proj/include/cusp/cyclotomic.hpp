#pragma once

#include <map>
#include <vector>

#include "cusp/rational.hpp"

namespace cusp {

// Element of the cyclotomic field Q(zeta_N), stored as a polynomial in
// zeta_N of degree < phi(N), reduced modulo the N-th cyclotomic polynomial.
// The conductor N is a per-value attribute; binary operations promote both
// operands to the lcm of the conductors. Values whose reduced form is
// constant are demoted to conductor 1, so pure rationals stay cheap.
class Cyclotomic {
 public:
  Cyclotomic() : n_(1), c_(1, Rational(0)) {}
  explicit Cyclotomic(const Rational& r) : n_(1), c_(1, r) {}
  explicit Cyclotomic(long v) : n_(1), c_(1, Rational(v)) {}

  // zeta_N^k, stored with the minimal conductor N/gcd(k,N).
  static Cyclotomic root_of_unity(long k, long n);

  long conductor() const { return n_; }
  const std::vector<Rational>& coeffs() const { return c_; }

  bool is_zero() const;
  bool is_rational() const { return n_ == 1; }
  Rational rational_value() const;

  Cyclotomic operator-() const;
  Cyclotomic operator+(const Cyclotomic& o) const;
  Cyclotomic operator-(const Cyclotomic& o) const;
  Cyclotomic operator*(const Cyclotomic& o) const;
  Cyclotomic& operator+=(const Cyclotomic& o) { return *this = *this + o; }
  Cyclotomic& operator-=(const Cyclotomic& o) { return *this = *this - o; }
  Cyclotomic& operator*=(const Cyclotomic& o) { return *this = *this * o; }

  Cyclotomic inverse() const;  // throws math_error on zero
  Cyclotomic operator/(const Cyclotomic& o) const { return *this * o.inverse(); }

  Cyclotomic pow(long e) const;

  bool operator==(const Cyclotomic& o) const;
  bool operator!=(const Cyclotomic& o) const { return !(*this == o); }

  // Same element viewed in Q(zeta_m); n must divide m.
  Cyclotomic promoted(long m) const;

  // Complex conjugate (zeta -> zeta^{-1}).
  Cyclotomic conj() const;

  // Galois action zeta -> zeta^k, gcd(k, N) = 1.
  Cyclotomic galois(long k) const;

  // Multiplicative order if the value is a root of unity, else 0.
  long root_order() const;

  // Canonical text form, e.g. "2/3", "(1 - z + z^2)@6".
  std::string str() const;

  static long phi(long n);
  // Phi_n as integer coefficient vector, degree phi(n), index = power.
  static const std::vector<Integer>& cyclotomic_poly(long n);

 private:
  Cyclotomic(long n, std::vector<Rational> c) : n_(n), c_(std::move(c)) {}
  void normalize();  // demote to conductor 1 when the value is rational

  long n_;
  std::vector<Rational> c_;
};

inline Cyclotomic cyc(long v) { return Cyclotomic(v); }
inline Cyclotomic cyc(const Rational& r) { return Cyclotomic(r); }

}  // namespace cusp
