#include "cusp/group.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace cusp {

namespace {

Rational frac_mod1(const Rational& r) {
  Integer num = r.get_num(), den = r.get_den();
  Integer q, rem;
  mpz_fdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
  Rational out(rem, den);
  out.canonicalize();
  return out;
}

}  // namespace

GroupElement::GroupElement(std::array<Rational, 3> p) : p_(std::move(p)) {
  for (auto& x : p_) x = frac_mod1(x);
}

bool GroupElement::is_identity() const {
  return is_zero(p_[0]) && is_zero(p_[1]) && is_zero(p_[2]);
}

long GroupElement::order() const {
  long r = 1;
  for (const auto& x : p_) r = std::lcm(r, (long)x.get_den().get_si());
  return r;
}

long GroupElement::age_num() const {
  Rational s = p_[0] + p_[1] + p_[2];
  return to_long(s);
}

int GroupElement::fixed_count() const {
  int n = 0;
  for (const auto& x : p_)
    if (is_zero(x)) ++n;
  return n;
}

std::vector<int> GroupElement::moved_coords() const {
  std::vector<int> v;
  for (int i = 0; i < 3; ++i)
    if (!is_zero(p_[i])) v.push_back(i);
  return v;
}

Cyclotomic GroupElement::eigenvalue(int i) const {
  const Rational& p = p_[i];
  return Cyclotomic::root_of_unity(p.get_num().get_si(), p.get_den().get_si());
}

GroupElement GroupElement::operator+(const GroupElement& o) const {
  return GroupElement({p_[0] + o.p_[0], p_[1] + o.p_[1], p_[2] + o.p_[2]});
}

GroupElement GroupElement::operator-() const {
  return GroupElement({-p_[0], -p_[1], -p_[2]});
}

GroupElement GroupElement::power(long k) const {
  return GroupElement({p_[0] * k, p_[1] * k, p_[2] * k});
}

bool GroupElement::operator<(const GroupElement& o) const {
  for (int i = 0; i < 3; ++i) {
    if (p_[i] != o.p_[i]) return p_[i] < o.p_[i];
  }
  return false;
}

std::string GroupElement::str() const {
  return rat_str(p_[0]) + "," + rat_str(p_[1]) + "," + rat_str(p_[2]);
}

GroupElement parse_group_element(const std::string& s) {
  std::array<Rational, 3> p;
  std::istringstream is(s);
  std::string tok;
  for (int i = 0; i < 3; ++i) {
    if (!std::getline(is, tok, ',')) throw math_error("group element needs three phases: " + s);
    p[i] = rat_parse(tok);
  }
  if (std::getline(is, tok, ',')) throw math_error("too many phases in group element: " + s);
  return GroupElement(p);
}

std::vector<GroupElement> parse_generators(const std::string& s) {
  std::vector<GroupElement> gens;
  std::istringstream is(s);
  std::string tok;
  while (std::getline(is, tok, ';')) {
    if (tok.empty()) continue;
    gens.push_back(parse_group_element(tok));
  }
  return gens;
}

bool SymmetryGroup::contains(const GroupElement& g) const {
  return std::binary_search(elems_.begin(), elems_.end(), g);
}

SymmetryGroup validate_group(const CuspData& cusp, const std::vector<GroupElement>& gens) {
  auto check = [&](const GroupElement& g) {
    for (int i = 0; i < 3; ++i) {
      Rational t = g.phase(i) * cusp.aprime[i];
      if (!is_integer(t))
        throw math_error("element (" + g.str() + ") does not preserve the cusp polynomial: a_" +
                         std::to_string(i + 1) + "' * p_" + std::to_string(i + 1) +
                         " is not an integer");
    }
    Rational s = g.phase(0) + g.phase(1) + g.phase(2);
    if (!is_integer(s))
      throw math_error("element (" + g.str() + ") is not in SL(3): phases sum to " + rat_str(s));
  };
  std::set<GroupElement> elems;
  elems.insert(GroupElement());
  for (const auto& g : gens) {
    check(g);
    elems.insert(g);
  }
  // close under composition (abelian, finite)
  bool grew = true;
  while (grew) {
    grew = false;
    std::vector<GroupElement> cur(elems.begin(), elems.end());
    for (const auto& a : cur)
      for (const auto& b : cur) {
        GroupElement c = a + b;
        if (elems.insert(c).second) grew = true;
      }
  }
  for (const auto& g : elems) check(g);
  SymmetryGroup G;
  G.elems_.assign(elems.begin(), elems.end());
  G.gens_ = gens;
  if (G.gens_.empty()) G.gens_.push_back(GroupElement());
  return G;
}

OrbifoldData derive_orbifold_data(const CuspData& cusp, const SymmetryGroup& G) {
  OrbifoldData od;
  od.cusp = cusp;
  od.group = G;
  for (int i = 0; i < 3; ++i) {
    for (const auto& g : G.elements())
      if (g.fixes(i)) od.K[i].push_back(g);
    od.n[i] = (long)od.K[i].size();
    if (G.order() % od.n[i] != 0) throw math_error("K_i order does not divide |G|");
    od.index[i] = G.order() / od.n[i];
    if (cusp.aprime[i] % od.index[i] != 0)
      throw math_error("a_i' not divisible by |G/K_i| for i = " + std::to_string(i + 1));
    od.a[i] = cusp.aprime[i] / od.index[i];
    for (long rep = 0; rep < od.n[i]; ++rep)
      if (od.a[i] != 1) od.A.push_back(od.a[i]);
  }
  std::sort(od.A.begin(), od.A.end(), std::greater<long>());
  od.muA = 2;
  od.chiA = Rational(2);
  for (long a : od.A) {
    od.muA += a - 1;
    od.chiA += Rational(1, a) - 1;
  }
  od.jG = 0;
  for (const auto& g : G.elements())
    if (g.fixed_count() == 0 && g.age_num() == 1) ++od.jG;
  long rhs = 1 + 2 * od.jG + (od.n[0] - 1) + (od.n[1] - 1) + (od.n[2] - 1);
  if (G.order() != rhs)
    throw math_error("group order identity |G| = 1 + 2 j_G + sum(n_i - 1) failed");
  return od;
}

SymmetryGroup full_symmetry_group(const CuspData& cusp) {
  std::vector<GroupElement> elems;
  const auto& a = cusp.aprime;
  for (long k1 = 0; k1 < a[0]; ++k1)
    for (long k2 = 0; k2 < a[1]; ++k2)
      for (long k3 = 0; k3 < a[2]; ++k3) {
        Rational s = Rational(k1, a[0]) + Rational(k2, a[1]) + Rational(k3, a[2]);
        if (!is_integer(s)) continue;
        elems.push_back(GroupElement({Rational(k1, a[0]), Rational(k2, a[1]), Rational(k3, a[2])}));
      }
  return validate_group(cusp, elems);
}

std::vector<SymmetryGroup> all_subgroups(const CuspData& cusp) {
  SymmetryGroup full = full_symmetry_group(cusp);
  const auto& el = full.elements();
  std::set<std::vector<GroupElement>> seen;
  std::vector<SymmetryGroup> out;
  auto try_gens = [&](const std::vector<GroupElement>& gens) {
    SymmetryGroup G = validate_group(cusp, gens);
    if (seen.insert(G.elements()).second) out.push_back(G);
  };
  try_gens({});
  // diagonal subgroups of an SL(3) torus kernel need at most two generators
  for (size_t i = 0; i < el.size(); ++i) {
    try_gens({el[i]});
    for (size_t j = i + 1; j < el.size(); ++j) try_gens({el[i], el[j]});
  }
  return out;
}

namespace {

// Coordinate permutations preserving the exponent triple.
std::vector<std::array<int, 3>> aprime_symmetries(const std::array<long, 3>& a) {
  std::vector<std::array<int, 3>> out;
  std::array<int, 3> perm = {0, 1, 2};
  std::sort(perm.begin(), perm.end());
  do {
    if (a[perm[0]] == a[0] && a[perm[1]] == a[1] && a[perm[2]] == a[2]) out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<GroupElement> permuted_elements(const std::vector<GroupElement>& elems,
                                            const std::array<int, 3>& perm) {
  std::vector<GroupElement> out;
  out.reserve(elems.size());
  for (const auto& g : elems)
    out.push_back(GroupElement({g.phase(perm[0]), g.phase(perm[1]), g.phase(perm[2])}));
  std::sort(out.begin(), out.end());
  return out;
}

// Shortest generator list: try single elements, then pairs.
std::vector<GroupElement> minimal_generators(const CuspData& cusp, const SymmetryGroup& G) {
  if (G.is_trivial()) return {GroupElement()};
  for (const auto& g : G.elements()) {
    if (g.is_identity()) continue;
    if (validate_group(cusp, {g}).elements() == G.elements()) return {g};
  }
  const auto& el = G.elements();
  for (size_t i = 0; i < el.size(); ++i) {
    if (el[i].is_identity()) continue;
    for (size_t j = i + 1; j < el.size(); ++j) {
      if (el[j].is_identity()) continue;
      if (validate_group(cusp, {el[i], el[j]}).elements() == G.elements())
        return {el[i], el[j]};
    }
  }
  return G.elements();
}

std::vector<ClassifiedRow> classify_for(const std::array<long, 3>& aprime) {
  CuspData cusp{aprime};
  auto symmetries = aprime_symmetries(aprime);
  std::set<std::vector<GroupElement>> canonical_seen;
  std::vector<ClassifiedRow> rows;
  for (const auto& G : all_subgroups(cusp)) {
    if (G.is_trivial()) continue;
    OrbifoldData od = derive_orbifold_data(cusp, G);
    if (od.jG != 0) continue;
    // canonical representative over coordinate relabelings
    std::vector<GroupElement> canon = G.elements();
    for (const auto& perm : symmetries) canon = std::min(canon, permuted_elements(G.elements(), perm));
    if (!canonical_seen.insert(canon).second) continue;
    ClassifiedRow row;
    row.aprime = aprime;
    row.gens = minimal_generators(cusp, G);
    row.A_padded = od.A;
    while (row.A_padded.size() < 3) row.A_padded.push_back(1);
    std::sort(row.A_padded.begin(), row.A_padded.end(), std::greater<long>());
    row.group_order = G.order();
    row.jG = od.jG;
    rows.push_back(row);
  }
  std::sort(rows.begin(), rows.end(), [](const ClassifiedRow& x, const ClassifiedRow& y) {
    if (x.group_order != y.group_order) return x.group_order < y.group_order;
    return x.A_padded > y.A_padded;
  });
  return rows;
}

}  // namespace

std::vector<ClassifiedRow> classify_zero() {
  std::vector<ClassifiedRow> rows;
  for (auto aprime : {std::array<long, 3>{3, 3, 3}, {4, 4, 2}, {6, 3, 2}}) {
    auto r = classify_for(aprime);
    rows.insert(rows.end(), r.begin(), r.end());
  }
  return rows;
}

std::vector<ClassifiedRow> classify_positive(long kmax, long mmax) {
  std::vector<ClassifiedRow> rows;
  std::set<std::array<long, 3>> seen;
  auto add = [&](std::array<long, 3> aprime) {
    if (!seen.insert(aprime).second) return;
    auto r = classify_for(aprime);
    rows.insert(rows.end(), r.begin(), r.end());
  };
  add({2, 3, 5});
  add({2, 3, 4});
  add({2, 3, 3});
  for (long k = 1; k <= kmax; ++k) {
    add({2, 2, 2 * k});
    add({2, 2, 2 * k + 1});
  }
  for (long m = 2; m <= mmax; ++m)
    for (long k = 1; k <= kmax; ++k)
      for (long l = k; l <= kmax; ++l) add({1, k * m, l * m});
  return rows;
}

}  // namespace cusp
