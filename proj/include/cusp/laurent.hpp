#pragma once

#include <map>

#include "cusp/cyclotomic.hpp"

namespace cusp {

// Laurent polynomial in the marginal parameter c with cyclotomic coefficients.
// No zero coefficients are stored. Division is only defined by c-free units.
class LaurentC {
 public:
  LaurentC() = default;
  explicit LaurentC(const Cyclotomic& a) { set(0, a); }
  explicit LaurentC(const Rational& r) { set(0, Cyclotomic(r)); }
  explicit LaurentC(long v) { set(0, Cyclotomic(v)); }

  static LaurentC c_power(long k, const Cyclotomic& a = Cyclotomic(Rational(1))) {
    LaurentC r;
    r.set(k, a);
    return r;
  }

  bool is_zero() const { return terms_.empty(); }
  const std::map<long, Cyclotomic>& terms() const { return terms_; }

  void set(long k, const Cyclotomic& a) {
    if (a.is_zero())
      terms_.erase(k);
    else
      terms_[k] = a;
  }
  void add(long k, const Cyclotomic& a);

  // Degree bounds; only valid when nonzero.
  long min_degree() const;
  long max_degree() const;
  bool is_polynomial_in_c() const { return terms_.empty() || min_degree() >= 0; }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == 0); }
  Cyclotomic constant_value() const;
  Cyclotomic coeff(long k) const;

  LaurentC operator-() const;
  LaurentC operator+(const LaurentC& o) const;
  LaurentC operator-(const LaurentC& o) const;
  LaurentC operator*(const LaurentC& o) const;
  LaurentC& operator+=(const LaurentC& o) { return *this = *this + o; }
  LaurentC& operator-=(const LaurentC& o) { return *this = *this - o; }
  LaurentC& operator*=(const LaurentC& o) { return *this = *this * o; }

  // Division by a c-free scalar.
  LaurentC div_scalar(const Cyclotomic& a) const;
  // Multiplication by c^k.
  LaurentC shifted(long k) const;
  // Evaluate at c = 0; throws if negative powers are present.
  Cyclotomic at_c0() const;

  bool operator==(const LaurentC& o) const { return terms_ == o.terms_; }
  bool operator!=(const LaurentC& o) const { return !(*this == o); }

  std::string str() const;

 private:
  std::map<long, Cyclotomic> terms_;
};

}  // namespace cusp
