#pragma once

#include <string>

#include "cusp/qseries.hpp"

namespace cusp {

// Evaluates a small expression grammar over the q-series generators:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := atom ('^' integer)?
//   atom   := rational | name | name '(' ['-'] 'q' ['^' rational] ')'
//           | '(' expr ')' | '-' atom
// Generator names are those of gen_modular/gen_named; name(q^m) generates at
// a rescaled argument, name(-q) substitutes q -> -q.
QSeries eval_qexpr(const std::string& expr, const Rational& order);

}  // namespace cusp
