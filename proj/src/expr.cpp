#include "ddgl2/expr.hpp"

#include <cctype>
#include <cmath>
#include <cstdlib>

namespace ddgl2 {

namespace {

struct Parser {
  const std::string& s;
  const SymbolTable& sym;
  size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
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

  Complex expr() {
    Complex v = term();
    for (;;) {
      if (eat('+')) v += term();
      else if (eat('-')) v -= term();
      else return v;
    }
  }

  Complex term() {
    Complex v = factor();
    for (;;) {
      if (eat('*')) {
        v *= factor();
      } else if (eat('/')) {
        Complex d = factor();
        if (std::abs(d) < 1e-300) throw EvalError("division by zero in '" + s + "'");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Complex factor() {
    if (eat('-')) return -factor();  // '^' binds tighter than unary minus
    Complex v = atom();
    if (eat('^')) {
      bool neg = eat('-');
      skip();
      if (pos >= s.size() || !std::isdigit(static_cast<unsigned char>(s[pos])))
        throw EvalError("expected integer exponent in '" + s + "'");
      int e = 0;
      while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos])))
        e = e * 10 + (s[pos++] - '0');
      Complex p = 1.0;
      for (int k = 0; k < e; ++k) p *= v;
      if (neg) {
        if (std::abs(p) < 1e-300) throw EvalError("division by zero in '" + s + "'");
        p = 1.0 / p;
      }
      v = p;
    }
    return v;
  }

  Complex atom() {
    skip();
    if (pos >= s.size()) throw EvalError("unexpected end of '" + s + "'");
    char c = s[pos];
    if (c == '(') {
      ++pos;
      Complex v = expr();
      if (!eat(')')) throw EvalError("missing ')' in '" + s + "'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c)) || c == '.') {
      size_t end = 0;
      double d = std::stod(s.substr(pos), &end);
      pos += end;
      return Complex(d, 0.0);
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name;
      while (pos < s.size() && std::isalnum(static_cast<unsigned char>(s[pos])))
        name += s[pos++];
      static const std::map<std::string, std::string> alias = {
          {"a", "alpha"}, {"b", "beta"},    {"g", "gamma"},
          {"d", "delta"}, {"e", "epsilon"}, {"l", "lambda"}};
      auto al = alias.find(name);
      const std::string& key = al == alias.end() ? name : al->second;
      auto it = sym.find(key);
      if (it == sym.end()) throw EvalError("unknown symbol '" + name + "' in '" + s + "'");
      return it->second;
    }
    throw EvalError(std::string("unexpected character '") + c + "' in '" + s + "'");
  }
};

}  // namespace

Complex eval_expr(const std::string& expr, const SymbolTable& symbols) {
  Parser p{expr, symbols};
  Complex v = p.expr();
  p.skip();
  if (p.pos != expr.size()) throw EvalError("trailing input in '" + expr + "'");
  return v;
}

}  // namespace ddgl2
