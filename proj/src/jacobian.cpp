#include "cusp/jacobian.hpp"

#include <sstream>

namespace cusp {

std::string JacBasisKey::str() const {
  if (kind == 0) return "1";
  if (kind == 2) return "x1*x2*x3";
  std::ostringstream os;
  os << "x" << (i + 1);
  if (j != 1) os << "^" << j;
  return os.str();
}

void JacIdElement::add(const JacBasisKey& k, const LaurentC& v) {
  if (v.is_zero()) return;
  auto it = c_.find(k);
  if (it == c_.end()) {
    c_.emplace(k, v);
  } else {
    it->second += v;
    if (it->second.is_zero()) c_.erase(it);
  }
}

LaurentC JacIdElement::coeff(const JacBasisKey& k) const {
  auto it = c_.find(k);
  return it == c_.end() ? LaurentC() : it->second;
}

JacIdElement JacIdElement::operator+(const JacIdElement& o) const {
  JacIdElement r = *this;
  for (const auto& [k, v] : o.c_) r.add(k, v);
  return r;
}

JacIdElement JacIdElement::operator-(const JacIdElement& o) const {
  JacIdElement r = *this;
  for (const auto& [k, v] : o.c_) r.add(k, -v);
  return r;
}

JacIdElement JacIdElement::operator-() const {
  JacIdElement r;
  for (const auto& [k, v] : c_) r.c_.emplace(k, -v);
  return r;
}

JacIdElement JacIdElement::scaled(const LaurentC& s) const {
  JacIdElement r;
  if (s.is_zero()) return r;
  for (const auto& [k, v] : c_) r.add(k, v * s);
  return r;
}

std::string JacIdElement::str() const {
  if (c_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, v] : c_) {
    if (!first) os << " + ";
    os << "(" << v.str() << ")*" << k.str();
    first = false;
  }
  return os.str();
}

JacIdElement jac_normal_form(const CuspData& cusp, const Mono3& mono, const LaurentC& scalar) {
  JacIdElement out;
  if (scalar.is_zero()) return out;
  for (long m : mono)
    if (m < 0) throw math_error("jac_normal_form: negative exponent");
  Mono3 m = mono;
  LaurentC s = scalar;
  for (;;) {
    int pos = 0;
    for (long e : m)
      if (e > 0) ++pos;
    if (pos == 3) {
      // x1 x2 x3 * rest: the socle annihilates the maximal ideal
      Mono3 rest = {m[0] - 1, m[1] - 1, m[2] - 1};
      if (rest[0] == 0 && rest[1] == 0 && rest[2] == 0) out.add(JacBasisKey::socle(), s);
      return out;
    }
    if (pos == 2) {
      // x_j x_k -> c a_i' x_i^{a_i'-1} once, then recurse
      int i = 0;
      while (m[i] > 0) ++i;
      int j = (i + 1) % 3, k = (i + 2) % 3;
      s *= LaurentC::c_power(1, Cyclotomic(Rational(cusp.aprime[i])));
      m[i] += cusp.aprime[i] - 1;
      m[j] -= 1;
      m[k] -= 1;
      continue;
    }
    if (pos == 1) {
      int i = 0;
      while (m[i] == 0) ++i;
      long e = m[i];
      long ap = cusp.aprime[i];
      if (e < ap) {
        out.add(JacBasisKey::power(i, e), s);
      } else if (e == ap) {
        out.add(JacBasisKey::socle(), s.shifted(-1).div_scalar(Cyclotomic(Rational(ap))));
      }
      // e > a_i': x_i^e = x_i^{e-a'} * socle/(c a') = 0
      return out;
    }
    out.add(JacBasisKey::unit(), s);
    return out;
  }
}

namespace {

Mono3 key_monomial(const JacBasisKey& k) {
  if (k.kind == 0) return {0, 0, 0};
  if (k.kind == 2) return {1, 1, 1};
  Mono3 m = {0, 0, 0};
  m[k.i] = k.j;
  return m;
}

}  // namespace

JacIdElement jac_mul(const CuspData& cusp, const JacIdElement& a, const JacIdElement& b) {
  JacIdElement out;
  for (const auto& [ka, va] : a.coeffs())
    for (const auto& [kb, vb] : b.coeffs()) {
      Mono3 ma = key_monomial(ka), mb = key_monomial(kb);
      Mono3 m = {ma[0] + mb[0], ma[1] + mb[1], ma[2] + mb[2]};
      out = out + jac_normal_form(cusp, m, va * vb);
    }
  return out;
}

bool JacSectorElement::is_zero() const {
  for (const auto& v : coef_)
    if (!v.is_zero()) return false;
  return true;
}

void JacSectorElement::add(long k, const LaurentC& v) {
  if (k < 0) throw math_error("sector element: negative exponent");
  if (k >= (long)coef_.size()) return;  // x^{a'-1} = 0
  coef_[k] += v;
}

JacSectorElement JacSectorElement::operator+(const JacSectorElement& o) const {
  if (coord_ != o.coord_ || coef_.size() != o.coef_.size())
    throw math_error("sector element mismatch");
  JacSectorElement r = *this;
  for (size_t k = 0; k < coef_.size(); ++k) r.coef_[k] += o.coef_[k];
  return r;
}

JacSectorElement JacSectorElement::scaled(const LaurentC& s) const {
  JacSectorElement r = *this;
  for (auto& v : r.coef_) v *= s;
  return r;
}

bool JacSectorElement::operator==(const JacSectorElement& o) const {
  return coord_ == o.coord_ && coef_ == o.coef_;
}

std::string JacSectorElement::str() const {
  std::ostringstream os;
  bool first = true;
  for (size_t k = 0; k < coef_.size(); ++k) {
    if (coef_[k].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << coef_[k].str() << ")";
    if (k == 1)
      os << "*x" << (coord_ + 1);
    else if (k > 1)
      os << "*x" << (coord_ + 1) << "^" << k;
    first = false;
  }
  if (first) os << "0";
  return os.str();
}

JacSectorElement jac_sector_normal_form(const CuspData& cusp, const GroupElement& g, long m,
                                        const LaurentC& scalar) {
  if (g.fixed_count() != 1)
    throw math_error("sector normal form: fixed locus is not a coordinate line");
  int i = 0;
  while (!g.fixes(i)) ++i;
  JacSectorElement e(i, cusp.aprime[i]);
  e.add(m, scalar);
  return e;
}

JacTarget JacTarget::of(const CuspData& cusp, const GroupElement& g) {
  (void)cusp;
  if (g.is_identity()) return {0, -1};
  if (g.fixed_count() == 1) {
    int i = 0;
    while (!g.fixes(i)) ++i;
    return {1, i};
  }
  if (g.fixed_count() == 0) return {2, -1};
  throw math_error("unexpected two-dimensional fixed locus for a nontrivial SL(3) element");
}

}  // namespace cusp
