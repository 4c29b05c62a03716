#pragma once
// Tiny arithmetic expression evaluator for catalog entries. Grammar:
//   expr   := term (('+'|'-') term)*
//   term   := factor (('*'|'/') factor)*
//   factor := '-' factor | atom ('^' integer)?
//   atom   := number | symbol | '(' expr ')'
// Symbols: alpha beta gamma delta epsilon lambda q (plus single-letter
// aliases a b g d e l). Division by zero raises EvalError so that cells
// which degenerate for a particular parameter choice can be reported as
// not evaluable instead of silently producing inf/nan.

#include <map>
#include <stdexcept>
#include <string>

#include "ddgl2/numerics.hpp"

namespace ddgl2 {

struct EvalError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using SymbolTable = std::map<std::string, Complex>;

// Evaluates expr over the symbol table; throws EvalError on parse errors,
// unknown symbols, or division by (numerically) zero.
Complex eval_expr(const std::string& expr, const SymbolTable& symbols);

}  // namespace ddgl2
