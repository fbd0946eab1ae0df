#include "arrlik/parse.hpp"

#include <cctype>

namespace arrlik {

namespace {

class Parser {
 public:
  Parser(const std::string& text, Ring ring, TermOrder order)
      : text_(text), ring_(std::move(ring)), order_(std::move(order)) {}

  Polynomial run() {
    Polynomial p = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected trailing input");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, pos_); }

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

  Polynomial expr() {
    bool neg = false;
    if (eat('-'))
      neg = true;
    else
      eat('+');
    Polynomial acc = term();
    if (neg) acc = -acc;
    for (;;) {
      if (eat('+'))
        acc = acc + term();
      else if (eat('-'))
        acc = acc - term();
      else
        break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (eat('*')) acc = acc * factor();
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      long e = integer_literal();
      if (e < 0) fail("negative exponent");
      Polynomial acc = Polynomial::constant(ring_, 1, order_);
      for (long i = 0; i < e; ++i) acc = acc * b;
      return acc;
    }
    return b;
  }

  Polynomial base() {
    char c = peek();
    if (c == '(') {
      eat('(');
      Polynomial p = expr();
      if (!eat(')')) fail("expected ')'");
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Integer num = natural_literal();
      if (eat('/')) {
        Integer den = natural_literal();
        if (sign(den) == 0) fail("zero denominator");
        Rational q(num, den);
        q.canonicalize();
        return Polynomial::constant(ring_, q, order_);
      }
      return Polynomial::constant(ring_, Rational(num), order_);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') return variable();
    fail("expected a number, variable or '('");
  }

  long integer_literal() {
    bool neg = eat('-');
    Integer n = natural_literal();
    if (!n.fits_slong_p()) fail("integer literal too large");
    return neg ? -n.get_si() : n.get_si();
  }

  Integer natural_literal() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (pos_ == start) fail("expected an integer");
    return Integer(text_.substr(start, pos_ - start));
  }

  Polynomial variable() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < text_.size() &&
           (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_'))
      ++pos_;
    std::string name = text_.substr(start, pos_ - start);
    auto idx = ring_->find(name);
    if (!idx) {
      pos_ = start;
      fail("unknown variable: " + name);
    }
    return Polynomial::variable(ring_, *idx, 1, order_);
  }

  const std::string& text_;
  Ring ring_;
  TermOrder order_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_poly(const std::string& text, const Ring& ring) {
  return parse_poly(text, ring, default_order(ring));
}

Polynomial parse_poly(const std::string& text, const Ring& ring, const TermOrder& order) {
  return Parser(text, ring, order).run();
}

}  // namespace arrlik
