#include "cusp/cyclotomic.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace cusp {

namespace {

// Dense polynomials over Q, index = degree. Trailing zeros trimmed.
using Poly = std::vector<Rational>;

void trim(Poly& p) {
  while (!p.empty() && is_zero(p.back())) p.pop_back();
}

Poly mul(const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, Rational(0));
  for (size_t i = 0; i < a.size(); ++i) {
    if (is_zero(a[i])) continue;
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  trim(r);
  return r;
}

// In-place remainder of p modulo monic divisor d.
void rem_monic(Poly& p, const Poly& d) {
  while (p.size() >= d.size() && !d.empty()) {
    trim(p);
    if (p.size() < d.size()) break;
    Rational lead = p.back();
    size_t shift = p.size() - d.size();
    for (size_t j = 0; j < d.size(); ++j) p[shift + j] -= lead * d[j];
    trim(p);
  }
}

// Extended gcd against a monic modulus: returns u with u*a = gcd (mod m),
// gcd normalized to 1. Requires gcd(a, m) = 1 in Q[x].
Poly inv_mod(const Poly& a, const Poly& m) {
  Poly r0 = m, r1 = a;
  Poly u0 = {}, u1 = {Rational(1)};
  trim(r1);
  while (!r1.empty()) {
    // divide r0 by r1
    Poly q;
    Poly rem = r0;
    trim(rem);
    if (rem.size() >= r1.size()) {
      q.assign(rem.size() - r1.size() + 1, Rational(0));
      while (rem.size() >= r1.size() && !rem.empty()) {
        Rational c = rem.back() / r1.back();
        size_t shift = rem.size() - r1.size();
        q[shift] = c;
        for (size_t j = 0; j < r1.size(); ++j) rem[shift + j] -= c * r1[j];
        trim(rem);
      }
    }
    Poly qu1 = mul(q, u1);
    Poly nu(std::max(u0.size(), qu1.size()), Rational(0));
    for (size_t i = 0; i < u0.size(); ++i) nu[i] += u0[i];
    for (size_t i = 0; i < qu1.size(); ++i) nu[i] -= qu1[i];
    trim(nu);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(nu);
  }
  if (r0.size() != 1) throw math_error("inv_mod: inputs not coprime");
  Rational g = r0[0];
  for (auto& c : u0) c /= g;
  return u0;
}

}  // namespace

long Cyclotomic::phi(long n) {
  long result = n;
  long m = n;
  for (long p = 2; p * p <= m; ++p) {
    if (m % p == 0) {
      result -= result / p;
      while (m % p == 0) m /= p;
    }
  }
  if (m > 1) result -= result / m;
  return result;
}

const std::vector<Integer>& Cyclotomic::cyclotomic_poly(long n) {
  static std::map<long, std::vector<Integer>> cache;
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  // Phi_n = (x^n - 1) / prod_{d | n, d < n} Phi_d, computed by exact division.
  std::vector<Integer> num(n + 1, Integer(0));
  num[0] = -1;
  num[n] = 1;
  for (long d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    const auto& phid = cyclotomic_poly(d);
    // divide num by phid (both monic, exact)
    std::vector<Integer> q(num.size() - phid.size() + 1, Integer(0));
    std::vector<Integer> rem = num;
    for (long i = (long)rem.size() - 1; i >= (long)phid.size() - 1; --i) {
      Integer c = rem[i];
      if (c == 0) continue;
      long shift = i - (long)phid.size() + 1;
      q[shift] = c;
      for (size_t j = 0; j < phid.size(); ++j) rem[shift + j] -= c * phid[j];
    }
    num = std::move(q);
  }
  return cache.emplace(n, std::move(num)).first->second;
}

void Cyclotomic::normalize() {
  bool constant = true;
  for (size_t i = 1; i < c_.size(); ++i)
    if (!cusp::is_zero(c_[i])) {
      constant = false;
      break;
    }
  if (constant && n_ != 1) {
    Rational v = c_.empty() ? Rational(0) : c_[0];
    n_ = 1;
    c_.assign(1, v);
  }
}

Cyclotomic Cyclotomic::root_of_unity(long k, long n) {
  if (n < 1) throw math_error("root_of_unity: conductor must be positive");
  k %= n;
  if (k < 0) k += n;
  long g = std::gcd(k == 0 ? n : k, n);
  long n2 = n / g, k2 = k / g;  // zeta_n^k = zeta_{n2}^{k2}, gcd(k2,n2)=1
  if (n2 == 1) return Cyclotomic(Rational(1));
  long deg = phi(n2);
  Poly p(k2 + 1, Rational(0));
  p[k2] = 1;
  const auto& cp = cyclotomic_poly(n2);
  Poly mod(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) mod[i] = Rational(cp[i]);
  rem_monic(p, mod);
  p.resize(deg, Rational(0));
  Cyclotomic r(n2, std::move(p));
  r.normalize();
  return r;
}

bool Cyclotomic::is_zero() const {
  for (const auto& c : c_)
    if (!cusp::is_zero(c)) return false;
  return true;
}

Rational Cyclotomic::rational_value() const {
  if (n_ != 1) throw math_error("cyclotomic value is not rational");
  return c_[0];
}

Cyclotomic Cyclotomic::operator-() const {
  Cyclotomic r = *this;
  for (auto& c : r.c_) c = -c;
  return r;
}

Cyclotomic Cyclotomic::promoted(long m) const {
  if (m % n_ != 0) throw math_error("promote_conductor: old conductor must divide new");
  if (m == n_) return *this;
  long step = m / n_;
  long degm = phi(m);
  Poly p((c_.size() - 1) * step + 1, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i) p[i * step] = c_[i];
  const auto& cp = cyclotomic_poly(m);
  Poly mod(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) mod[i] = Rational(cp[i]);
  rem_monic(p, mod);
  p.resize(degm, Rational(0));
  return Cyclotomic(m, std::move(p));
}

Cyclotomic Cyclotomic::operator+(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] += b.c_[i];
  a.normalize();
  return a;
}

Cyclotomic Cyclotomic::operator-(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  for (size_t i = 0; i < a.c_.size(); ++i) a.c_[i] -= b.c_[i];
  a.normalize();
  return a;
}

Cyclotomic Cyclotomic::operator*(const Cyclotomic& o) const {
  if (n_ == 1 && o.n_ == 1) return Cyclotomic(c_[0] * o.c_[0]);
  if (n_ == 1) {
    if (cusp::is_zero(c_[0])) return Cyclotomic();
    Cyclotomic r = o;
    for (auto& c : r.c_) c *= c_[0];
    r.normalize();
    return r;
  }
  if (o.n_ == 1) return o * *this;
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  Poly p = mul(a.c_, b.c_);
  const auto& cp = cyclotomic_poly(m);
  Poly mod(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) mod[i] = Rational(cp[i]);
  rem_monic(p, mod);
  p.resize(phi(m), Rational(0));
  Cyclotomic r(m, std::move(p));
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::inverse() const {
  if (is_zero()) throw math_error("division by zero in Q(zeta)");
  if (n_ == 1) return Cyclotomic(Rational(1) / c_[0]);
  const auto& cp = cyclotomic_poly(n_);
  Poly mod(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) mod[i] = Rational(cp[i]);
  Poly a = c_;
  trim(a);
  Poly u = inv_mod(a, mod);
  rem_monic(u, mod);
  u.resize(phi(n_), Rational(0));
  Cyclotomic r(n_, std::move(u));
  r.normalize();
  return r;
}

Cyclotomic Cyclotomic::pow(long e) const {
  if (e == 0) return Cyclotomic(Rational(1));
  Cyclotomic b = e > 0 ? *this : inverse();
  unsigned long n = e > 0 ? e : -e;
  Cyclotomic acc(Rational(1));
  while (n) {
    if (n & 1) acc *= b;
    b *= b;
    n >>= 1;
  }
  return acc;
}

bool Cyclotomic::operator==(const Cyclotomic& o) const {
  long m = std::lcm(n_, o.n_);
  Cyclotomic a = promoted(m), b = o.promoted(m);
  return a.c_ == b.c_;
}

Cyclotomic Cyclotomic::conj() const {
  if (n_ == 1) return *this;
  return galois(n_ - 1);
}

Cyclotomic Cyclotomic::galois(long k) const {
  if (n_ == 1) return *this;
  k %= n_;
  if (k < 0) k += n_;
  if (std::gcd(k, n_) != 1) throw math_error("galois: exponent not coprime to conductor");
  // exponents i*k reduced via zeta^n = 1, then mod Phi_n
  Poly q(n_, Rational(0));
  for (size_t i = 0; i < c_.size(); ++i)
    if (!cusp::is_zero(c_[i])) q[(i * k) % n_] += c_[i];
  const auto& cp = cyclotomic_poly(n_);
  Poly mod(cp.size());
  for (size_t i = 0; i < cp.size(); ++i) mod[i] = Rational(cp[i]);
  rem_monic(q, mod);
  q.resize(phi(n_), Rational(0));
  Cyclotomic r(n_, std::move(q));
  r.normalize();
  return r;
}

long Cyclotomic::root_order() const {
  // Roots of unity in Q(zeta_n) have order dividing lcm(2, n).
  long bound = std::lcm(2L, n_);
  Cyclotomic acc(Rational(1));
  for (long k = 1; k <= bound; ++k) {
    acc *= *this;
    if (acc == Cyclotomic(Rational(1))) return k;
  }
  return 0;
}

std::string Cyclotomic::str() const {
  if (n_ == 1) return rat_str(c_[0]);
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (size_t i = 0; i < c_.size(); ++i) {
    if (cusp::is_zero(c_[i])) continue;
    Rational c = c_[i];
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    Rational a = abs(c);
    if (i == 0 || a != 1) os << rat_str(a) << (i > 0 ? "*" : "");
    if (i == 1)
      os << "z";
    else if (i > 1)
      os << "z^" << i;
    first = false;
  }
  if (first) os << "0";
  os << ")@" << n_;
  return os.str();
}

}  // namespace cusp
