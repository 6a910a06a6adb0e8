#pragma once

#include <array>
#include <vector>

#include "cusp/cyclotomic.hpp"

namespace cusp {

// The triple A' = (a1', a2', a3') of the cusp polynomial
// x1^{a1'} + x2^{a2'} + x3^{a3'} - c^{-1} x1 x2 x3.
struct CuspData {
  std::array<long, 3> aprime;

  long mu() const { return 2 + (aprime[0] - 1) + (aprime[1] - 1) + (aprime[2] - 1); }
  Rational chi() const {
    return Rational(2) + Rational(1, aprime[0]) + Rational(1, aprime[1]) +
           Rational(1, aprime[2]) - Rational(3);
  }
};

// Diagonal symmetry diag(e[p1], e[p2], e[p3]) with rational phases in [0,1).
class GroupElement {
 public:
  GroupElement() : p_{Rational(0), Rational(0), Rational(0)} {}
  explicit GroupElement(std::array<Rational, 3> p);

  const Rational& phase(int i) const { return p_[i]; }
  bool is_identity() const;
  long order() const;
  long age_num() const;  // p1+p2+p3 as an integer; throws if not integral
  int fixed_count() const;  // N_g
  int dim_moved() const { return 3 - fixed_count(); }  // d_g
  bool fixes(int i) const { return is_zero(p_[i]); }
  std::vector<int> moved_coords() const;  // I_g^c in increasing order

  Cyclotomic eigenvalue(int i) const;  // e[p_i]

  GroupElement operator+(const GroupElement& o) const;  // composition
  GroupElement operator-() const;                       // inverse
  GroupElement power(long k) const;

  bool operator==(const GroupElement& o) const { return p_ == o.p_; }
  bool operator!=(const GroupElement& o) const { return !(*this == o); }
  bool operator<(const GroupElement& o) const;

  std::string str() const;  // "p1,p2,p3"

 private:
  std::array<Rational, 3> p_;
};

GroupElement parse_group_element(const std::string& s);           // "p1,p2,p3"
std::vector<GroupElement> parse_generators(const std::string& s); // ';'-separated

class SymmetryGroup {
 public:
  SymmetryGroup() = default;

  const std::vector<GroupElement>& elements() const { return elems_; }
  const std::vector<GroupElement>& generators() const { return gens_; }
  long order() const { return (long)elems_.size(); }
  bool contains(const GroupElement& g) const;
  bool is_trivial() const { return elems_.size() == 1; }

  friend SymmetryGroup validate_group(const CuspData& cusp,
                                      const std::vector<GroupElement>& gens);

 private:
  std::vector<GroupElement> elems_;  // sorted
  std::vector<GroupElement> gens_;
};

// Closes the generators, checking the f-invariance condition a_i' p_i in Z
// and the SL(3) condition p1+p2+p3 in Z for every element. Throws math_error
// naming the violating element and coordinate.
SymmetryGroup validate_group(const CuspData& cusp, const std::vector<GroupElement>& gens);

struct OrbifoldData {
  CuspData cusp;
  SymmetryGroup group;
  std::array<std::vector<GroupElement>, 3> K;  // K_i = elements fixing x_i
  std::array<long, 3> n;                       // n_i = |K_i|
  std::array<long, 3> index;                   // |G / K_i|
  std::array<long, 3> a;                       // a_i = a_i' / |G/K_i|
  std::vector<long> A;                         // weight set, 1-entries omitted, sorted desc
  long muA = 0;
  Rational chiA;
  long jG = 0;
};

// Computes K_i, the derived weight set A, mu_A, chi_A and j_G, asserting the
// group-order identity |G| = 1 + 2 j_G + sum (n_i - 1).
OrbifoldData derive_orbifold_data(const CuspData& cusp, const SymmetryGroup& G);

// All diagonal SL(3) symmetries of the cusp polynomial.
SymmetryGroup full_symmetry_group(const CuspData& cusp);

// All subgroups of the full symmetry group (including trivial and full).
std::vector<SymmetryGroup> all_subgroups(const CuspData& cusp);

struct ClassifiedRow {
  std::array<long, 3> aprime;
  std::vector<GroupElement> gens;  // minimal generator list
  std::vector<long> A_padded;      // padded with 1s to length >= 3
  long group_order = 0;
  long jG = 0;
};

// Enumerates pairs (A', G) with chi_{A'} = 0: all nontrivial subgroups with
// j_G = 0 up to coordinate permutations preserving A'.
std::vector<ClassifiedRow> classify_zero();

// Same for chi_{A'} > 0 over the finite families of the classification;
// the (2,2,2k), (2,2,2k+1) and (1,km,lm) families run up to the given bounds.
std::vector<ClassifiedRow> classify_positive(long kmax, long mmax);

}  // namespace cusp
