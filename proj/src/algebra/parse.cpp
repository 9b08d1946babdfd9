#include "tgs/algebra/parse.hpp"

#include <cctype>

#include "tgs/error.hpp"

namespace tgs {

void skip_blanks(std::string_view s, std::size_t& pos) {
  while (pos < s.size()) {
    if (std::isspace(static_cast<unsigned char>(s[pos]))) {
      ++pos;
    } else if (s[pos] == '#') {
      while (pos < s.size() && s[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

namespace {

bool ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
bool ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

struct Reader {
  const FieldPtr& f;
  const std::vector<std::string>& vars;
  TermOrder order;
  std::string_view s;
  std::size_t pos;

  char peek() {
    skip_blanks(s, pos);
    return pos < s.size() ? s[pos] : '\0';
  }

  [[noreturn]] void fail(const std::string& what, std::vector<std::string> expected) {
    throw SyntaxError(what, pos, std::move(expected));
  }

  mpz_class integer() {
    std::size_t start = pos;
    while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
    return mpz_class(std::string(s.substr(start, pos - start)));
  }

  MPoly constant(const Value& v) { return MPoly::constant(f, vars.size(), v, order); }

  MPoly expr() {
    MPoly acc(f, vars.size(), order);
    bool first = true;
    for (;;) {
      char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos;
      } else if (!first) {
        return acc;
      }
      MPoly t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
    }
  }

  MPoly term() {
    MPoly acc = power();
    for (;;) {
      char c = peek();
      if (c == '*') {
        ++pos;
        acc = acc * power();
      } else if (c == '/') {
        ++pos;
        std::size_t at = pos;
        MPoly d = power();
        if (!d.is_constant() || d.is_zero()) {
          if (d.is_zero()) throw DivisionByZero("division by zero at offset " + std::to_string(at));
          throw TypeError("division by a non-constant polynomial at offset " + std::to_string(at));
        }
        acc = acc.scaled(f->inv(d.lead().coef));
      } else {
        return acc;
      }
    }
  }

  MPoly power() {
    char c = peek();
    if (c == '-') {
      ++pos;
      return -power();
    }
    if (c == '+') {
      ++pos;
      return power();
    }
    MPoly base = atom();
    if (peek() == '^') {
      ++pos;
      if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected an exponent", {"integer"});
      mpz_class e = integer();
      if (e > 1000000) fail("exponent too large", {"integer"});
      base = base.pow(static_cast<unsigned>(e.get_ui()));
    }
    return base;
  }

  MPoly atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) return constant(f->from_integer(integer()));
    if (c == '(') {
      ++pos;
      MPoly e = expr();
      if (peek() != ')') fail("unbalanced parenthesis", {")"});
      ++pos;
      return e;
    }
    if (ident_start(c)) {
      std::size_t start = pos;
      while (pos < s.size() && ident_char(s[pos])) ++pos;
      std::string name(s.substr(start, pos - start));
      for (std::size_t i = 0; i < vars.size(); ++i)
        if (vars[i] == name) return MPoly::variable(f, vars.size(), i, order);
      for (const Field* g : f->chain())
        if (!g->is_prime() && g->name() == name) return constant(f->lift_from(*g, g->generator()));
      throw NameError("unknown name '" + name + "'", start);
    }
    fail(c ? std::string("unexpected '") + c + "'" : "unexpected end of input", {"integer", "identifier", "("});
  }
};

}  // namespace

ExprParser::ExprParser(FieldPtr f, std::vector<std::string> vars, TermOrder order)
    : f_(std::move(f)), vars_(std::move(vars)), order_(order) {}

MPoly ExprParser::parse(std::string_view text, std::size_t& pos) const {
  Reader r{f_, vars_, order_, text, pos};
  MPoly out = r.expr();
  skip_blanks(text, r.pos);
  pos = r.pos;
  return out;
}

MPoly ExprParser::parse_all(std::string_view text) const {
  std::size_t pos = 0;
  MPoly out = parse(text, pos);
  if (pos != text.size()) throw SyntaxError("trailing input", pos, {"+", "-", "*", "/", "^", "end of input"});
  return out;
}

MPoly parse_polynomial(const FieldPtr& f, const std::vector<std::string>& vars, std::string_view text,
                       TermOrder order) {
  return ExprParser(f, vars, order).parse_all(text);
}

TowerElem parse_element(const FieldPtr& f, std::string_view text) {
  MPoly p = parse_polynomial(f, {}, text);
  return TowerElem(f, p.is_zero() ? f->zero() : p.lead().coef);
}

}  // namespace tgs
