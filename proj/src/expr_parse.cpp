#include "residuum/expr_parse.hpp"

#include <cctype>

#include "residuum/errors.hpp"

namespace residuum {

namespace {

// Recursive-descent parser, field operations evaluated directly on
// RationalFunction values.
class Parser {
public:
  Parser(const std::string& text, const std::string& var) : text_(text), var_(var) {}

  RationalFunction parse() {
    RationalFunction r = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return r;
  }

private:
  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError("expression '" + text_ + "', column " + std::to_string(pos_ + 1) + ": " +
                     what);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char c) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  RationalFunction expression() {
    RationalFunction acc = eat('-') ? -term() : (eat('+'), term());
    for (;;) {
      if (eat('+')) {
        acc = acc + term();
      } else if (eat('-')) {
        acc = acc - term();
      } else {
        return acc;
      }
    }
  }

  RationalFunction term() {
    RationalFunction acc = factor();
    for (;;) {
      if (eat('*')) {
        acc = acc * factor();
      } else if (eat('/')) {
        RationalFunction d = factor();
        if (d.is_zero()) fail("division by zero");
        acc = acc / d;
      } else {
        return acc;
      }
    }
  }

  RationalFunction factor() {
    RationalFunction base = atom();
    if (eat('^')) {
      long long e = integer_literal();
      RationalFunction acc = RationalFunction::constant(Rational(1));
      RationalFunction b = base;
      long long n = e;
      if (n < 0) {
        if (b.is_zero()) fail("zero raised to a negative power");
        b = RationalFunction::constant(Rational(1)) / b;
        n = -n;
      }
      for (long long i = 0; i < n; ++i) acc = acc * b;
      return acc;
    }
    return base;
  }

  RationalFunction atom() {
    skip_ws();
    if (eat('(')) {
      RationalFunction r = expression();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (eat('-')) return -atom();
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      return RationalFunction::constant(Rational(BigInt(digits())));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::string name = identifier();
      if (name != var_) fail("unknown symbol '" + name + "' (variable is '" + var_ + "')");
      return RationalFunction(Polynomial({Rational(0), Rational(1)}),
                              Polynomial::constant(Rational(1)));
    }
    fail("expected a number, '" + var_ + "' or '('");
  }

  std::string digits() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected digits");
    return text_.substr(start, pos_ - start);
  }

  std::string identifier() {
    skip_ws();
    size_t start = pos_;
    while (pos_ < text_.size() && (std::isalnum(static_cast<unsigned char>(text_[pos_])) ||
                                   text_[pos_] == '_')) {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  long long integer_literal() {
    skip_ws();
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    std::string d = digits();
    if (d.size() > 9) fail("exponent too large");
    long long v = std::stoll(d);
    return neg ? -v : v;
  }

  const std::string& text_;
  const std::string& var_;
  size_t pos_ = 0;
};

} // namespace

RationalFunction parse_rational_function(const std::string& text, const std::string& var) {
  return Parser(text, var).parse();
}

} // namespace residuum
