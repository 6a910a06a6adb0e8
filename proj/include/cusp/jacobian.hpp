#pragma once

#include <array>
#include <map>

#include "cusp/group.hpp"
#include "cusp/laurent.hpp"

namespace cusp {

// Monomial x1^{m1} x2^{m2} x3^{m3}.
using Mono3 = std::array<long, 3>;

// Basis index of Jac(f_{A'}): kind 0 = unit, 1 = power x_i^j, 2 = socle
// class [x1 x2 x3].
struct JacBasisKey {
  int kind;  // 0 unit, 1 power, 2 socle
  int i;     // coordinate for kind 1 (0-based)
  long j;    // exponent for kind 1

  bool operator<(const JacBasisKey& o) const {
    if (kind != o.kind) return kind < o.kind;
    if (i != o.i) return i < o.i;
    return j < o.j;
  }
  bool operator==(const JacBasisKey& o) const {
    return kind == o.kind && i == o.i && j == o.j;
  }
  static JacBasisKey unit() { return {0, 0, 0}; }
  static JacBasisKey power(int i, long j) { return {1, i, j}; }
  static JacBasisKey socle() { return {2, 0, 0}; }
  std::string str() const;
};

// Element of Jac(f_{A'}) over Laurent-in-c scalars, in normal form over the
// basis {1, x_i^j (1 <= j <= a_i'-1), [x1 x2 x3]}.
class JacIdElement {
 public:
  JacIdElement() = default;

  bool is_zero() const { return c_.empty(); }
  const std::map<JacBasisKey, LaurentC>& coeffs() const { return c_; }
  void add(const JacBasisKey& k, const LaurentC& v);
  LaurentC coeff(const JacBasisKey& k) const;

  JacIdElement operator+(const JacIdElement& o) const;
  JacIdElement operator-(const JacIdElement& o) const;
  JacIdElement operator-() const;
  JacIdElement scaled(const LaurentC& s) const;
  bool operator==(const JacIdElement& o) const { return c_ == o.c_; }

  std::string str() const;

 private:
  std::map<JacBasisKey, LaurentC> c_;
};

// Canonical reduction of scalar * x^mono in Jac(f_{A'}). The rewrite uses the
// Jacobian relations x_j x_k = c a_i' x_i^{a_i'-1} together with socle
// annihilation m * [x1x2x3] = 0.
JacIdElement jac_normal_form(const CuspData& cusp, const Mono3& mono, const LaurentC& scalar);

// Product of normal forms (ring structure of Jac(f_{A'})).
JacIdElement jac_mul(const CuspData& cusp, const JacIdElement& a, const JacIdElement& b);

// Element of Jac(f^g) = C[x_i]/(x_i^{a_i'-1}) for g != id fixing exactly the
// coordinate line x_i; coefficient k is the class of x_i^k.
class JacSectorElement {
 public:
  JacSectorElement() : coord_(-1) {}
  JacSectorElement(int coord, long apow) : coord_(coord), coef_(std::max<long>(apow - 1, 0)) {}

  int coord() const { return coord_; }
  long dim() const { return (long)coef_.size(); }
  bool is_zero() const;
  const LaurentC& coeff(long k) const { return coef_[k]; }
  void add(long k, const LaurentC& v);  // reduces mod x^{a'-1}

  JacSectorElement operator+(const JacSectorElement& o) const;
  JacSectorElement scaled(const LaurentC& s) const;
  bool operator==(const JacSectorElement& o) const;

  std::string str() const;

 private:
  int coord_;
  std::vector<LaurentC> coef_;
};

// Reduction of scalar * x_i^m in Jac(f^g); g must fix exactly one coordinate.
JacSectorElement jac_sector_normal_form(const CuspData& cusp, const GroupElement& g, long m,
                                        const LaurentC& scalar);

// Quotient map C[x] -> Jac(f^g) for arbitrary g (including g = id and the
// zero-dimensional fixed locus). Used by the Hochschild pipeline.
struct JacTarget {
  int type;  // 0: Jac(f_{A'}), 1: sector line, 2: point (Jac = C)
  int coord = -1;
  static JacTarget of(const CuspData& cusp, const GroupElement& g);
};

}  // namespace cusp
