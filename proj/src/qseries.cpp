#include "cusp/qseries.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cusp {

namespace {

Rational exp_of(long key, long den) { return Rational(key, den); }

// Largest integer k with k/den < T (one past = first dropped key).
bool key_below(long key, long den, const Trunc& t) {
  return t.allows(Rational(key, den));
}

}  // namespace

QSeries QSeries::constant(const Cyclotomic& a, Trunc t) {
  QSeries s(t);
  s.add_term(Rational(0), a);
  return s;
}

QSeries QSeries::q_power(const Rational& e, Trunc t) {
  QSeries s(t);
  s.add_term(e, Cyclotomic(Rational(1)));
  return s;
}

Cyclotomic QSeries::coeff(const Rational& e) const {
  Rational scaled = e * den_;
  if (!is_integer(scaled)) return Cyclotomic();
  auto it = terms_.find(to_long(scaled));
  return it == terms_.end() ? Cyclotomic() : it->second;
}

std::optional<Rational> QSeries::valuation() const {
  if (terms_.empty()) return std::nullopt;
  return exp_of(terms_.begin()->first, den_);
}

void QSeries::add_term(const Rational& e, const Cyclotomic& a) {
  if (a.is_zero() || !trunc_.allows(e)) return;
  Rational scaled = e * den_;
  if (!is_integer(scaled)) {
    long extra = (long)e.get_den().get_si();
    *this = rescaled(lcm_long(den_, extra));
    scaled = e * den_;
  }
  long key = to_long(scaled);
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, a);
  } else {
    it->second += a;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

void QSeries::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();) {
    if (it->second.is_zero() || !key_below(it->first, den_, trunc_))
      it = terms_.erase(it);
    else
      ++it;
  }
  if (den_ == 1) return;
  long g = den_;
  for (const auto& [k, a] : terms_) {
    g = std::gcd(g, std::abs(k));
    if (g == 1) return;
  }
  if (g > 1) {
    std::map<long, Cyclotomic> nt;
    for (auto& [k, a] : terms_) nt.emplace(k / g, std::move(a));
    terms_ = std::move(nt);
    den_ /= g;
  }
}

QSeries QSeries::rescaled(long new_den) const {
  if (new_den == den_) return *this;
  if (new_den % den_ != 0) throw math_error("rescale: incompatible denominators");
  long f = new_den / den_;
  QSeries r(trunc_);
  r.den_ = new_den;
  for (const auto& [k, a] : terms_) r.terms_.emplace(k * f, a);
  return r;
}

QSeries QSeries::operator-() const {
  QSeries r = *this;
  for (auto& [k, a] : r.terms_) a = -a;
  return r;
}

QSeries QSeries::operator+(const QSeries& o) const {
  long d = lcm_long(den_, o.den_);
  QSeries a = rescaled(d), b = o.rescaled(d);
  a.trunc_ = trunc_.min(o.trunc_);
  for (const auto& [k, c] : b.terms_) {
    auto it = a.terms_.find(k);
    if (it == a.terms_.end())
      a.terms_.emplace(k, c);
    else {
      it->second += c;
      if (it->second.is_zero()) a.terms_.erase(it);
    }
  }
  a.normalize();
  return a;
}

QSeries QSeries::operator-(const QSeries& o) const { return *this + (-o); }

QSeries QSeries::operator*(const QSeries& o) const {
  long d = lcm_long(den_, o.den_);
  QSeries a = rescaled(d), b = o.rescaled(d);
  // valuation-aware precision: a*b is exact below min(Ta + vb, Tb + va)
  Trunc t = Trunc::inf();
  if (trunc_.finite || o.trunc_.finite) {
    auto va = valuation(), vb = o.valuation();
    Trunc ta = trunc_.finite
                   ? (vb ? trunc_.plus(*vb)
                         : (o.trunc_.finite ? trunc_.plus(o.trunc_.value) : Trunc::inf()))
                   : Trunc::inf();
    Trunc tb = o.trunc_.finite
                   ? (va ? o.trunc_.plus(*va)
                         : (trunc_.finite ? o.trunc_.plus(trunc_.value) : Trunc::inf()))
                   : Trunc::inf();
    t = ta.min(tb);
  }
  QSeries r(t);
  r.den_ = d;
  for (const auto& [k1, c1] : a.terms_) {
    for (const auto& [k2, c2] : b.terms_) {
      long k = k1 + k2;
      if (!key_below(k, d, t)) break;  // b sorted ascending
      Cyclotomic prod = c1 * c2;
      if (prod.is_zero()) continue;
      auto it = r.terms_.find(k);
      if (it == r.terms_.end())
        r.terms_.emplace(k, std::move(prod));
      else {
        it->second += prod;
        if (it->second.is_zero()) r.terms_.erase(it);
      }
    }
  }
  r.normalize();
  return r;
}

QSeries QSeries::scale(const Cyclotomic& a) const {
  if (a.is_zero()) {
    QSeries r(trunc_);
    return r;
  }
  QSeries r = *this;
  for (auto& [k, c] : r.terms_) c *= a;
  r.normalize();
  return r;
}

QSeries QSeries::pow(long e) const {
  if (e < 0) throw math_error("QSeries::pow: negative exponent");
  QSeries acc = QSeries::constant(Rational(1));
  QSeries b = *this;
  long n = e;
  while (n) {
    if (n & 1) acc *= b;
    b = (n >>= 1) ? b * b : b;
  }
  return acc;
}

QSeries QSeries::substitute_power(const Rational& m) const {
  if (sgn(m) <= 0) throw math_error("substitute_power: exponent must be positive");
  long p = (long)m.get_num().get_si();
  long q = (long)m.get_den().get_si();
  QSeries r(trunc_.scaled(m));
  r.den_ = den_ * q;
  for (const auto& [k, a] : terms_) r.terms_.emplace(k * p, a);
  r.normalize();
  return r;
}

QSeries QSeries::substitute_negate() const {
  QSeries r(trunc_);
  r.den_ = den_;
  for (const auto& [k, a] : terms_) {
    if (k % den_ != 0)
      throw math_error("substitute_negate: non-integral exponent " + rat_str(exp_of(k, den_)));
    long e = k / den_;
    r.terms_.emplace(k, e % 2 == 0 ? a : -a);
  }
  r.normalize();
  return r;
}

QSeries QSeries::q_d_dq() const {
  QSeries r(trunc_);
  r.den_ = den_;
  for (const auto& [k, a] : terms_) {
    if (k == 0) continue;
    r.terms_.emplace(k, a * Cyclotomic(exp_of(k, den_)));
  }
  r.normalize();
  return r;
}

QSeries QSeries::truncated(const Trunc& t) const {
  QSeries r = *this;
  r.trunc_ = trunc_.min(t);
  r.normalize();
  return r;
}

QSeries QSeries::divided_by(const QSeries& b) const {
  auto vb = b.valuation();
  if (!vb) throw math_error("division by (truncated) zero series");
  Rational leadexp = *vb;
  Cyclotomic lead = b.coeff(leadexp);
  // relative precision of the divisor and absolute precision of the dividend
  Trunc t = Trunc::inf();
  if (trunc_.finite) t = t.min(trunc_.plus(-leadexp));
  if (b.trunc_.finite) {
    Rational va = valuation() ? *valuation() : (trunc_.finite ? trunc_.value : Rational(0));
    t = t.min(Trunc::at(va + b.trunc_.value - leadexp - leadexp));
  }
  if (!t.finite) {
    // exact polynomial division is not attempted; require a cap
    t = Trunc::at(Rational(1000));
  }
  long d = lcm_long(den_, b.den_);
  QSeries rem = rescaled(d), bb = b.rescaled(d);
  QSeries quot(t);
  quot.den_ = d;
  Cyclotomic lead_inv = lead.inverse();
  long lead_key = to_long(leadexp * d);
  while (!rem.terms_.empty()) {
    long k = rem.terms_.begin()->first;
    long qk = k - lead_key;
    if (!key_below(qk, d, t)) break;
    Cyclotomic c = rem.terms_.begin()->second * lead_inv;
    quot.terms_.emplace(qk, c);
    // rem -= c * q^{qk} * b
    for (const auto& [bk, ba] : bb.terms_) {
      long kk = qk + bk;
      Cyclotomic sub = c * ba;
      auto it = rem.terms_.find(kk);
      if (it == rem.terms_.end()) {
        if (!sub.is_zero()) rem.terms_.emplace(kk, -sub);
      } else {
        it->second -= sub;
        if (it->second.is_zero()) rem.terms_.erase(it);
      }
    }
  }
  quot.normalize();
  return quot;
}

bool QSeries::operator==(const QSeries& o) const {
  long d = lcm_long(den_, o.den_);
  QSeries a = rescaled(d), b = o.rescaled(d);
  Trunc t = trunc_.min(o.trunc_);
  a.trunc_ = t;
  b.trunc_ = t;
  a.normalize();
  b.normalize();
  return a.terms_ == b.terms_;
}

std::string QSeries::str(const std::string& var) const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : terms_) {
    if (!first) os << " + ";
    os << a.str();
    if (k != 0) {
      os << "*" << var;
      if (k != den_) {
        os << "^";
        Rational e = exp_of(k, den_);
        if (is_integer(e))
          os << rat_str(e);
        else
          os << "(" << rat_str(e) << ")";
      }
    }
    first = false;
  }
  if (first) os << "0";
  if (trunc_.finite) os << " + O(" << var << "^" << rat_str(trunc_.value) << ")";
  return os.str();
}

QSeries gen_modular(ModularGen g, const Rational& order) {
  Trunc T = Trunc::at(order);
  switch (g) {
    case ModularGen::E2: {
      QSeries s(T);
      s.add_term(Rational(0), Cyclotomic(Rational(1)));
      long kmax = 0;
      while (Rational(kmax + 1) < order) ++kmax;
      // sigma_1 by divisor sieve
      std::vector<long> sigma(kmax + 1, 0);
      for (long d = 1; d <= kmax; ++d)
        for (long m = d; m <= kmax; m += d) sigma[m] += d;
      for (long k = 1; k <= kmax; ++k)
        s.add_term(Rational(k), Cyclotomic(Rational(-24 * sigma[k])));
      return s;
    }
    case ModularGen::theta3:
    case ModularGen::theta4: {
      bool alt = g == ModularGen::theta4;
      QSeries s(T);
      s.add_term(Rational(0), Cyclotomic(Rational(1)));
      for (long k = 1; T.allows(Rational(k * k, 2)); ++k)
        s.add_term(Rational(k * k, 2), Cyclotomic(Rational(alt && (k % 2) ? -2 : 2)));
      return s;
    }
    case ModularGen::theta2: {
      QSeries s(T);
      for (long k = 0; T.allows(Rational((2 * k + 1) * (2 * k + 1), 8)); ++k)
        s.add_term(Rational((2 * k + 1) * (2 * k + 1), 8), Cyclotomic(Rational(2)));
      return s;
    }
    case ModularGen::eta: {
      // q^{1/24} prod_{k>=1} (1 - q^k)
      QSeries s = QSeries::q_power(Rational(1, 24), T);
      for (long k = 1; T.allows(Rational(k) + Rational(1, 24)); ++k) {
        QSeries f(T);
        f.add_term(Rational(0), Cyclotomic(Rational(1)));
        f.add_term(Rational(k), Cyclotomic(Rational(-1)));
        s *= f;
      }
      return s;
    }
  }
  throw math_error("unknown modular generator");
}

QSeries gen_modular(const std::string& name, const Rational& order) {
  if (name == "eta") return gen_modular(ModularGen::eta, order);
  if (name == "E2") return gen_modular(ModularGen::E2, order);
  if (name == "theta2") return gen_modular(ModularGen::theta2, order);
  if (name == "theta3") return gen_modular(ModularGen::theta3, order);
  if (name == "theta4") return gen_modular(ModularGen::theta4, order);
  throw math_error("unknown modular generator: " + name);
}

namespace {

QSeries at_power(ModularGen g, long m, const Rational& order) {
  return gen_modular(g, order / m).substitute_power(Rational(m));
}

QSeries A3_series(const Rational& order) {
  return at_power(ModularGen::theta2, 2, order) * at_power(ModularGen::theta2, 6, order) +
         at_power(ModularGen::theta3, 2, order) * at_power(ModularGen::theta3, 6, order);
}

}  // namespace

QSeries gen_named(const std::string& name, const Rational& order) {
  const Rational T = order;
  if (name == "x442") {
    QSeries t = at_power(ModularGen::theta3, 8, T);
    return t * t;
  }
  if (name == "y442") {
    QSeries t = at_power(ModularGen::theta2, 8, T);
    return t * t;
  }
  if (name == "w442") {
    QSeries s = at_power(ModularGen::E2, 4, T) - at_power(ModularGen::E2, 8, T).scale(Rational(2)) +
                at_power(ModularGen::E2, 16, T).scale(Rational(4));
    return s.scale(Rational(1, 3));
  }
  if (name == "A3") return A3_series(T);
  if (name == "x632") return A3_series(T / 6).substitute_power(Rational(6));
  if (name == "y632") return A3_series(T / 12).substitute_power(Rational(12));
  if (name == "r632")
    return A3_series(T / 3).substitute_power(Rational(3)) -
           A3_series(T / 12).substitute_power(Rational(12));
  if (name == "w632") return at_power(ModularGen::E2, 6, T);
  if (name == "f0ST") {
    QSeries e2 = gen_modular(ModularGen::E2, T);
    return (e2 - e2.substitute_negate()).scale(Rational(-1, 48));
  }
  if (name == "f1ST") return at_power(ModularGen::E2, 4, T).scale(Rational(-1, 24));
  if (name == "f2ST") {
    return gen_modular(ModularGen::E2, T).scale(Rational(-1, 24)) - gen_named("f0ST", T) -
           gen_named("f1ST", T);
  }
  return gen_modular(name, order);
}

bool is_known_gen_name(const std::string& name) {
  static const char* names[] = {"eta",  "E2",   "theta2", "theta3", "theta4", "x442",
                                "y442", "w442", "x632",   "y632",   "r632",   "w632",
                                "A3",   "f0ST", "f1ST",   "f2ST"};
  for (const char* n : names)
    if (name == n) return true;
  return false;
}

}  // namespace cusp
