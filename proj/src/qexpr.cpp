#include "cusp/qexpr.hpp"

#include <cctype>

namespace cusp {

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;
  Rational order;

  explicit Parser(const std::string& src, const Rational& ord) : s(src), order(ord) {}

  void skip() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return pos < s.size() ? s[pos] : '\0';
  }
  [[noreturn]] void fail(const std::string& what) {
    throw math_error("expression error at position " + std::to_string(pos) + ": " + what);
  }

  Rational parse_rational() {
    skip();
    size_t start = pos;
    if (pos < s.size() && (s[pos] == '-' || s[pos] == '+')) ++pos;
    while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    if (pos < s.size() && s[pos] == '/') {
      ++pos;
      while (pos < s.size() && std::isdigit((unsigned char)s[pos])) ++pos;
    }
    if (pos == start) fail("expected number");
    return rat_parse(s.substr(start, pos - start));
  }

  long parse_integer() {
    Rational r = parse_rational();
    return to_long(r);
  }

  std::string parse_name() {
    skip();
    size_t start = pos;
    while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) || s[pos] == '_')) ++pos;
    return s.substr(start, pos - start);
  }

  QSeries atom() {
    skip();
    if (eat('(')) {
      QSeries e = expr();
      if (!eat(')')) fail("expected ')'");
      return e;
    }
    if (peek() == '-') {
      ++pos;
      return -atom();
    }
    if (std::isdigit((unsigned char)peek())) {
      return QSeries::constant(parse_rational(), Trunc::at(order));
    }
    std::string name = parse_name();
    if (name.empty()) fail("expected generator name or number");
    if (!is_known_gen_name(name)) fail("unknown generator: " + name);
    bool negate = false;
    Rational m(1);
    if (eat('(')) {
      if (eat('-')) negate = true;
      if (!eat('q')) fail("expected 'q' in generator argument");
      if (eat('^')) m = parse_rational();
      if (!eat(')')) fail("expected ')'");
    }
    if (sgn(m) <= 0) fail("argument power must be positive");
    QSeries g = gen_named(name, order / m);
    if (m != 1) g = g.substitute_power(m);
    if (negate) g = g.substitute_negate();
    return g;
  }

  QSeries factor() {
    QSeries a = atom();
    if (eat('^')) {
      long e = parse_integer();
      if (e < 0) fail("negative powers are not supported");
      a = a.pow(e);
    }
    return a;
  }

  QSeries term() {
    QSeries a = factor();
    for (;;) {
      if (eat('*'))
        a *= factor();
      else if (eat('/'))
        a = a.divided_by(factor());
      else
        return a;
    }
  }

  QSeries expr() {
    QSeries a = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos;
        a += term();
      } else if (c == '-') {
        ++pos;
        a -= term();
      } else {
        return a;
      }
    }
  }
};

}  // namespace

QSeries eval_qexpr(const std::string& expr, const Rational& order) {
  Parser p(expr, order);
  QSeries r = p.expr();
  p.skip();
  if (p.pos != expr.size()) p.fail("trailing input");
  return r.truncated(Trunc::at(order));
}

}  // namespace cusp
