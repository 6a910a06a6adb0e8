#include "cusp/laurent.hpp"

#include <sstream>

namespace cusp {

void LaurentC::add(long k, const Cyclotomic& a) {
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    if (!a.is_zero()) terms_.emplace(k, a);
    return;
  }
  it->second += a;
  if (it->second.is_zero()) terms_.erase(it);
}

long LaurentC::min_degree() const {
  if (terms_.empty()) throw math_error("degree of zero Laurent polynomial");
  return terms_.begin()->first;
}

long LaurentC::max_degree() const {
  if (terms_.empty()) throw math_error("degree of zero Laurent polynomial");
  return terms_.rbegin()->first;
}

Cyclotomic LaurentC::constant_value() const {
  if (terms_.empty()) return Cyclotomic();
  if (!is_constant()) throw math_error("Laurent value depends on c");
  return terms_.begin()->second;
}

Cyclotomic LaurentC::coeff(long k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? Cyclotomic() : it->second;
}

LaurentC LaurentC::operator-() const {
  LaurentC r;
  for (const auto& [k, a] : terms_) r.terms_.emplace(k, -a);
  return r;
}

LaurentC LaurentC::operator+(const LaurentC& o) const {
  LaurentC r = *this;
  for (const auto& [k, a] : o.terms_) r.add(k, a);
  return r;
}

LaurentC LaurentC::operator-(const LaurentC& o) const {
  LaurentC r = *this;
  for (const auto& [k, a] : o.terms_) r.add(k, -a);
  return r;
}

LaurentC LaurentC::operator*(const LaurentC& o) const {
  LaurentC r;
  for (const auto& [k1, a1] : terms_)
    for (const auto& [k2, a2] : o.terms_) r.add(k1 + k2, a1 * a2);
  return r;
}

LaurentC LaurentC::div_scalar(const Cyclotomic& a) const {
  Cyclotomic inv = a.inverse();
  LaurentC r;
  for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * inv);
  return r;
}

LaurentC LaurentC::shifted(long k) const {
  LaurentC r;
  for (const auto& [d, c] : terms_) r.terms_.emplace(d + k, c);
  return r;
}

Cyclotomic LaurentC::at_c0() const {
  if (terms_.empty()) return Cyclotomic();
  if (min_degree() < 0) throw math_error("negative c-power at c = 0");
  return coeff(0);
}

std::string LaurentC::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [k, a] : terms_) {
    if (!first) os << " + ";
    os << a.str();
    if (k == 1)
      os << "*c";
    else if (k != 0)
      os << "*c^" << k;
    first = false;
  }
  return os.str();
}

}  // namespace cusp
