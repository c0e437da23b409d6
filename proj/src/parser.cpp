// Recursive-descent parser for polynomial expressions:
//
//   expr    := [+|-] term { (+|-) term }
//   term    := factor { * factor }
//   factor  := primary [ ^ INTEGER ]
//   primary := INTEGER [ / INTEGER ] | IDENT | ( expr )
//
// Whitespace is insignificant and `*` may not be elided.

#include <cctype>

#include "fatlie/errors.hpp"
#include "fatlie/polynomial.hpp"

namespace fatlie {
namespace {

class Parser {
 public:
  Parser(std::string_view text, std::span<const std::string> vars) : text_(text), vars_(vars) {}

  Polynomial parse() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected character '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { fail_at(msg, pos_); }
  [[noreturn]] void fail_at(const std::string& msg, std::size_t at) const {
    throw ParseError("syntax error at position " + std::to_string(at + 1) + ": " + msg, at);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  std::string integer_literal() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected integer literal");
    return std::string(text_.substr(start, pos_ - start));
  }

  Polynomial expr() {
    skip_ws();
    bool negate = false;
    if (accept('-')) negate = true;
    else accept('+');
    Polynomial acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) acc += term();
      else if (accept('-')) acc -= term();
      else return acc;
    }
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (accept('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (!accept('^')) return base;
    const std::size_t at = pos_;
    const std::string digits = integer_literal();
    if (digits.size() > 6) fail_at("exponent too large", at);
    const unsigned e = static_cast<unsigned>(std::stoul(digits));
    Polynomial result = Polynomial::constant(vars_.size(), 1);
    for (unsigned k = 0; k < e; ++k) result = result * base;
    return result;
  }

  Polynomial primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Rational value(integer_literal());
      if (accept('/')) {
        const std::size_t at = pos_;
        mpz_class den(integer_literal());
        if (den == 0) fail_at("zero denominator", at);
        value /= Rational(den);
      }
      value.canonicalize();
      return Polynomial::constant(vars_.size(), value);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      const std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
        ++pos_;
      const std::string name(text_.substr(start, pos_ - start));
      for (std::size_t i = 0; i < vars_.size(); ++i)
        if (vars_[i] == name) return Polynomial::variable(vars_.size(), i);
      throw ParseError("unknown variable '" + name + "' at position " + std::to_string(start + 1),
                       start);
    }
    fail("unexpected character '" + std::string(1, c) + "'");
  }

  std::string_view text_;
  std::span<const std::string> vars_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(std::string_view text, std::span<const std::string> vars) {
  return Parser(text, vars).parse();
}

}  // namespace fatlie
