#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "cusp/qexpr.hpp"
#include "cusp/qseries.hpp"

using namespace cusp;

namespace {

QSeries poly1q(long c0, long c1) {
  QSeries s;
  s.add_term(Rational(0), cyc(c0));
  s.add_term(Rational(1), cyc(c1));
  return s;
}

}  // namespace

TEST_CASE("series arithmetic basics") {
  QSeries a = poly1q(1, 1), b = poly1q(1, -1);
  QSeries p = a * b;  // 1 - q^2
  CHECK(p.coeff_rational(Rational(0)) == 1);
  CHECK(p.coeff_rational(Rational(1)) == 0);
  CHECK(p.coeff_rational(Rational(2)) == -1);

  // q^{1/24} * q^{1/8} = q^{1/6}
  QSeries f = QSeries::q_power(rat(1, 24)) * QSeries::q_power(rat(1, 8));
  CHECK(f == QSeries::q_power(rat(1, 6)));
}

TEST_CASE("truncation is tracked through multiplication") {
  QSeries a = QSeries::q_power(Rational(3), Trunc::at(10));  // q^3 + O(q^10)
  QSeries b = QSeries::q_power(Rational(2), Trunc::at(6));   // q^2 + O(q^6)
  QSeries p = a * b;
  // exact below min(10+2, 6+3) = 9
  CHECK(p.trunc() == Trunc::at(9));
  CHECK(p.coeff_rational(Rational(5)) == 1);
}

TEST_CASE("E2 expansion") {
  QSeries e2 = gen_modular(ModularGen::E2, 6);
  CHECK(e2.coeff_rational(Rational(0)) == 1);
  CHECK(e2.coeff_rational(Rational(1)) == -24);
  CHECK(e2.coeff_rational(Rational(2)) == -72);
  CHECK(e2.coeff_rational(Rational(3)) == -96);
  CHECK(e2.coeff_rational(Rational(4)) == -168);
  CHECK(e2.coeff_rational(Rational(5)) == -144);
}

TEST_CASE("theta2(q^8)^2: the printed y-series") {
  QSeries y = gen_named("y442", 30);
  CHECK(y.coeff_rational(Rational(2)) == 4);
  CHECK(y.coeff_rational(Rational(10)) == 8);
  CHECK(y.coeff_rational(Rational(18)) == 4);
  CHECK(y.coeff_rational(Rational(26)) == 8);
  CHECK(y.coeff_rational(Rational(4)) == 0);
}

TEST_CASE("x(q) and w(q) printed expansions") {
  QSeries x = gen_named("x442", 27);
  long xc[] = {0, 4, 8, 16, 20};
  long xv[] = {1, 4, 4, 4, 8};
  for (int i = 0; i < 5; ++i) CHECK(x.coeff_rational(Rational(xc[i])) == xv[i]);
  CHECK(x.coeff_rational(Rational(12)) == 0);
  CHECK(x.coeff_rational(Rational(24)) == 0);

  QSeries w = gen_named("w442", 27);
  long wc[] = {0, 4, 8, 12, 16, 20, 24};
  long wv[] = {1, -8, -8, -32, -40, -48, -32};
  for (int i = 0; i < 7; ++i) CHECK(w.coeff_rational(Rational(wc[i])) == wv[i]);
}

TEST_CASE("A3 and the (6,3,2) generators") {
  QSeries a3q3 = gen_named("A3", rat(41, 3)).substitute_power(Rational(3));
  long ac[] = {0, 3, 9, 12, 21, 27, 36, 39};
  long av[] = {1, 6, 6, 6, 12, 6, 6, 12};
  for (int i = 0; i < 8; ++i) CHECK(a3q3.coeff_rational(Rational(ac[i])) == av[i]);
  CHECK(a3q3.coeff_rational(Rational(6)) == 0);

  QSeries x = gen_named("x632", 40);
  CHECK(x.coeff_rational(Rational(0)) == 1);
  CHECK(x.coeff_rational(Rational(6)) == 6);
  CHECK(x.coeff_rational(Rational(18)) == 6);
  CHECK(x.coeff_rational(Rational(24)) == 6);
  CHECK(x.coeff_rational(Rational(12)) == 0);

  QSeries y = gen_named("y632", 40);
  CHECK(y.coeff_rational(Rational(12)) == 6);
  CHECK(y.coeff_rational(Rational(36)) == 6);
  CHECK(y.coeff_rational(Rational(24)) == 0);

  QSeries r = gen_named("r632", 40);
  long rc[] = {3, 9, 21, 27, 39};
  long rv[] = {6, 6, 12, 6, 12};
  for (int i = 0; i < 5; ++i) CHECK(r.coeff_rational(Rational(rc[i])) == rv[i]);
  CHECK(r.coeff_rational(Rational(12)) == 0);

  QSeries w = gen_named("w632", 40);
  long wc[] = {0, 6, 12, 18, 24, 30, 36};
  long wv[] = {1, -24, -72, -96, -168, -144, -288};
  for (int i = 0; i < 7; ++i) CHECK(w.coeff_rational(Rational(wc[i])) == wv[i]);
}

TEST_CASE("substitute_power round trip and negate") {
  QSeries th3 = gen_modular(ModularGen::theta3, 12);
  QSeries back = th3.substitute_power(Rational(8)).substitute_power(rat(1, 8));
  CHECK(back == th3);

  QSeries e2 = gen_modular(ModularGen::E2, 6);
  QSeries diff = e2 - e2.substitute_negate();
  CHECK(diff.coeff_rational(Rational(1)) == -48);
  CHECK(diff.coeff_rational(Rational(2)) == 0);
  CHECK(diff.coeff_rational(Rational(3)) == -192);

  CHECK_THROWS_AS(QSeries::q_power(rat(1, 2)).substitute_negate(), math_error);
}

TEST_CASE("eta product expansion") {
  // eta = q^{1/24} (1 - q - q^2 + q^5 + q^7 - q^12 - ...)
  QSeries eta = gen_modular(ModularGen::eta, 16);
  auto at = [&](long k) { return eta.coeff_rational(Rational(24 * k + 1, 24)); };
  CHECK(at(0) == 1);
  CHECK(at(1) == -1);
  CHECK(at(2) == -1);
  CHECK(at(3) == 0);
  CHECK(at(5) == 1);
  CHECK(at(7) == 1);
  CHECK(at(12) == -1);
  CHECK(at(15) == -1);
}

TEST_CASE("Jacobi identity theta3^4 = theta2^4 + theta4^4 to order 50") {
  Rational T(50);
  QSeries t2 = gen_modular(ModularGen::theta2, T);
  QSeries t3 = gen_modular(ModularGen::theta3, T);
  QSeries t4 = gen_modular(ModularGen::theta4, T);
  QSeries lhs = t3.pow(4) - t2.pow(4) - t4.pow(4);
  CHECK(lhs.is_zero());
  CHECK(lhs.trunc().finite);
  CHECK(lhs.trunc().value >= Rational(50));
}

TEST_CASE("telescoping sanity: a*a equals a^2 for random series") {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> d(-5, 5);
  for (int trial = 0; trial < 20; ++trial) {
    QSeries a(Trunc::at(12));
    for (int t = 0; t < 6; ++t) a.add_term(Rational(d(rng) + 5, 1 + (trial % 3)), cyc(d(rng)));
    CHECK((a * a) - a.pow(2) == QSeries(Trunc::at(12)));
  }
}

TEST_CASE("series division") {
  QSeries eta3 = gen_modular(ModularGen::eta, 20).substitute_power(Rational(9));
  QSeries num = eta3.pow(3);
  QSeries den = gen_modular(ModularGen::eta, 60).substitute_power(Rational(3));
  QSeries quot = num.divided_by(den);
  CHECK((quot * den - num).is_zero());
}

TEST_CASE("expression evaluation") {
  QSeries s = eval_qexpr("theta3^4 - theta2^4 - theta4^4", 30);
  CHECK(s.is_zero());
  QSeries t = eval_qexpr("E2(q^2) - 1/2*E2 - 1/2*theta2(q^2)^4 - 1/2*theta3(q^2)^4", 40);
  CHECK(t.is_zero());
  QSeries u = eval_qexpr("2 + theta2(q^8)^2", 12);
  CHECK(u.coeff_rational(Rational(0)) == 2);
  CHECK(u.coeff_rational(Rational(2)) == 4);
  CHECK_THROWS_AS(eval_qexpr("nosuch(q)", 5), math_error);
}

TEST_CASE("f-series: printed leading terms") {
  QSeries f0 = gen_named("f0ST", 8);
  CHECK(f0.coeff_rational(Rational(1)) == 1);
  CHECK(f0.coeff_rational(Rational(3)) == 4);
  CHECK(f0.coeff_rational(Rational(5)) == 6);
  CHECK(f0.coeff_rational(Rational(2)) == 0);
  QSeries f2 = gen_named("f2ST", 10);
  CHECK(f2.coeff_rational(Rational(0)) == 0);
  CHECK(f2.coeff_rational(Rational(2)) == 3);
}
