#pragma once
// Polynomial expression parser. Grammar: signed integer/rational
// coefficients, ring variables (the underscore spelling x_1 resolves to a
// declared x1), `^` powers with non-negative integer exponents, `*` products
// with juxtaposition allowed, `+`/`-`, parentheses. Errors carry the offset
// into the source text.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

#include "polynomial.hpp"

namespace reeslike {

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t pos, const std::string& msg)
      : std::runtime_error("parse error at position " + std::to_string(pos) + ": " + msg),
        pos_(pos) {}
  std::size_t position() const { return pos_; }

 private:
  std::size_t pos_;
};

template <class F>
class PolyParser {
 public:
  PolyParser(std::string src, RingPtr<F> ring) : src_(std::move(src)), ring_(std::move(ring)) {}

  Polynomial<F> parse() {
    skip_ws();
    if (at_end()) throw ParseError(pos_, "empty expression");
    Polynomial<F> p = parse_expr();
    skip_ws();
    if (!at_end()) throw ParseError(pos_, "unexpected trailing input");
    return p;
  }

 private:
  using Poly = Polynomial<F>;

  Poly parse_expr() {
    Poly acc = parse_signed_term();
    for (;;) {
      skip_ws();
      if (peek() == '+') {
        ++pos_;
        acc = acc + parse_signed_term();
      } else if (peek() == '-') {
        ++pos_;
        acc = acc - parse_signed_term();
      } else {
        return acc;
      }
    }
  }

  Poly parse_signed_term() {
    skip_ws();
    bool neg = false;
    while (peek() == '+' || peek() == '-') {
      if (peek() == '-') neg = !neg;
      ++pos_;
      skip_ws();
    }
    Poly t = parse_product();
    return neg ? -t : t;
  }

  Poly parse_product() {
    Poly acc = parse_power();
    for (;;) {
      skip_ws();
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = acc * parse_power();
      } else if (std::isalpha(static_cast<unsigned char>(c)) ||
                 std::isdigit(static_cast<unsigned char>(c)) || c == '(') {
        acc = acc * parse_power();  // juxtaposition
      } else {
        return acc;
      }
    }
  }

  Poly parse_power() {
    Poly base = parse_primary();
    skip_ws();
    while (peek() == '^') {
      ++pos_;
      skip_ws();
      if (!std::isdigit(static_cast<unsigned char>(peek())))
        throw ParseError(pos_, "exponent must be a non-negative integer");
      base = base.pow(parse_integer());
    }
    return base;
  }

  Poly parse_primary() {
    skip_ws();
    char c = peek();
    if (c == '(') {
      std::size_t open = pos_++;
      Poly inner = parse_expr();
      skip_ws();
      if (peek() != ')') throw ParseError(open, "unbalanced parenthesis");
      ++pos_;
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string lit = parse_digits();
      skip_ws();
      if (peek() == '/') {
        std::size_t slash = pos_++;
        skip_ws();
        if (!std::isdigit(static_cast<unsigned char>(peek())))
          throw ParseError(slash, "expected integer denominator");
        std::string den = parse_digits();
        if (den == "0") throw ParseError(slash, "zero denominator");
        lit += "/" + den;
      }
      return Poly::constant(ring_, ring_->field().from_string(lit));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      std::string name = parse_ident();
      int idx = ring_->var_index_normalized(name);
      if (idx < 0) throw ParseError(start, "unknown variable " + name);
      return Poly::variable(ring_, idx);
    }
    if (at_end()) throw ParseError(pos_, "unexpected end of expression");
    throw ParseError(pos_, std::string("unexpected character '") + c + "'");
  }

  long parse_integer() {
    std::string d = parse_digits();
    if (d.size() > 9) throw ParseError(pos_, "exponent too large");
    return std::stol(d);
  }

  std::string parse_digits() {
    std::string d;
    while (std::isdigit(static_cast<unsigned char>(peek()))) d += src_[pos_++];
    return d;
  }

  std::string parse_ident() {
    std::string s;
    s += src_[pos_++];
    while (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_') s += src_[pos_++];
    return s;
  }

  void skip_ws() {
    while (pos_ < src_.size() && std::isspace(static_cast<unsigned char>(src_[pos_]))) ++pos_;
  }
  bool at_end() const { return pos_ >= src_.size(); }
  char peek() const { return pos_ < src_.size() ? src_[pos_] : '\0'; }

  std::string src_;
  RingPtr<F> ring_;
  std::size_t pos_ = 0;
};

template <class F>
Polynomial<F> parse_polynomial(const std::string& src, const RingPtr<F>& ring) {
  return PolyParser<F>(src, ring).parse();
}

}  // namespace reeslike
