#pragma once

#include <map>
#include <optional>
#include <string>

#include "cusp/laurent.hpp"

namespace cusp {

// Truncation order: the series is exact for all exponents < value.
// An infinite order marks an exact (polynomial) series.
struct Trunc {
  bool finite = false;
  Rational value;

  static Trunc inf() { return Trunc{}; }
  static Trunc at(const Rational& v) { return Trunc{true, v}; }
  static Trunc at(long v) { return Trunc{true, Rational(v)}; }

  bool allows(const Rational& e) const { return !finite || e < value; }
  Trunc min(const Trunc& o) const {
    if (!finite) return o;
    if (!o.finite) return *this;
    return at(value < o.value ? value : o.value);
  }
  Trunc plus(const Rational& d) const { return finite ? at(value + d) : inf(); }
  Trunc scaled(const Rational& m) const { return finite ? at(value * m) : inf(); }
  bool operator==(const Trunc& o) const {
    return finite == o.finite && (!finite || value == o.value);
  }
  std::string str() const { return finite ? rat_str(value) : "inf"; }
};

// Truncated formal series in q with exponents in (1/D)Z and exact cyclotomic
// coefficients. Exponent keys k stand for q^{k/D}; all stored exponents lie
// below the truncation order and no zero coefficient is kept.
class QSeries {
 public:
  QSeries() : den_(1), trunc_(Trunc::inf()) {}
  explicit QSeries(Trunc t) : den_(1), trunc_(t) {}

  static QSeries constant(const Cyclotomic& a, Trunc t = Trunc::inf());
  static QSeries constant(const Rational& a, Trunc t = Trunc::inf()) {
    return constant(Cyclotomic(a), t);
  }
  static QSeries q_power(const Rational& e, Trunc t = Trunc::inf());

  long denom() const { return den_; }
  const Trunc& trunc() const { return trunc_; }
  const std::map<long, Cyclotomic>& raw_terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool known_nonzero() const { return !terms_.empty(); }

  Cyclotomic coeff(const Rational& e) const;
  Rational coeff_rational(const Rational& e) const { return coeff(e).rational_value(); }
  // Lowest exponent with nonzero coefficient; nullopt for a (truncated) zero.
  std::optional<Rational> valuation() const;

  void add_term(const Rational& e, const Cyclotomic& a);

  QSeries operator-() const;
  QSeries operator+(const QSeries& o) const;
  QSeries operator-(const QSeries& o) const;
  QSeries operator*(const QSeries& o) const;
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
  QSeries scale(const Cyclotomic& a) const;
  QSeries scale(const Rational& a) const { return scale(Cyclotomic(a)); }
  QSeries pow(long e) const;  // e >= 0

  // q -> q^m for positive rational m.
  QSeries substitute_power(const Rational& m) const;
  // q -> -q; requires all exponents integral.
  QSeries substitute_negate() const;
  // Multiply each coefficient at q^e by e (the action of q d/dq).
  QSeries q_d_dq() const;
  // Restrict the truncation order (drop terms at or above it).
  QSeries truncated(const Trunc& t) const;

  // Exact division; the divisor must have a nonzero leading coefficient.
  QSeries divided_by(const QSeries& b) const;

  bool operator==(const QSeries& o) const;
  bool operator!=(const QSeries& o) const { return !(*this == o); }

  std::string str(const std::string& var = "q") const;

 private:
  void normalize();  // drop zero coeffs and terms beyond trunc, reduce denom
  QSeries rescaled(long new_den) const;

  long den_;
  Trunc trunc_;
  std::map<long, Cyclotomic> terms_;
};

enum class ModularGen { eta, E2, theta2, theta3, theta4 };

// Truncated expansion of a basic generator; exponent conventions:
// eta = q^{1/24} prod (1-q^k); theta2 = 2 sum q^{(k+1/2)^2/2};
// theta3/theta4 = 1 + 2 sum (+-1)^k q^{k^2/2}; E2 = 1 - 24 sum sigma_1(k) q^k.
QSeries gen_modular(ModularGen g, const Rational& order);
QSeries gen_modular(const std::string& name, const Rational& order);

// Named combinations used by the mirror computations. x442/y442/w442 are the
// theta/E2 combinations attached to the (4,4,2) weight system, x632..w632 the
// A3-based ones of the (6,3,2) system, f0ST/f1ST/f2ST the E2 combinations of
// the four-point genus-zero potential.
QSeries gen_named(const std::string& name, const Rational& order);

bool is_known_gen_name(const std::string& name);

}  // namespace cusp
