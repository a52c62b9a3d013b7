#include "jaccoord/parse.hpp"

#include <cctype>
#include <string>

#include "jaccoord/errors.hpp"

namespace jaccoord {

namespace {

constexpr unsigned long kMaxExponent = 1UL << 16;

class Parser {
 public:
  explicit Parser(std::string_view s) : s_(s) {}

  BiPoly parse() {
    skip_ws();
    if (pos_ == s_.size()) throw SyntaxError(pos_, "empty expression");
    BiPoly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, unexpected());
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }

  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  std::string unexpected() const {
    if (pos_ >= s_.size()) return "unexpected end of input";
    return std::string("unexpected character '") + s_[pos_] + "'";
  }

  BiPoly expr() {
    BiPoly acc = term();
    for (;;) {
      char c = peek();
      if (c == '+') {
        ++pos_;
        acc += term();
      } else if (c == '-') {
        ++pos_;
        acc -= term();
      } else {
        return acc;
      }
    }
  }

  BiPoly term() {
    BiPoly acc = unary();
    while (peek() == '*') {
      ++pos_;
      acc *= unary();
    }
    return acc;
  }

  BiPoly unary() {
    char c = peek();
    if (c == '-') {
      ++pos_;
      return -unary();
    }
    if (c == '+') {
      ++pos_;
      return unary();
    }
    return power();
  }

  BiPoly power() {
    BiPoly base = atom();
    if (peek() != '^') return base;
    ++pos_;
    skip_ws();
    const std::size_t at = pos_;
    Int e = integer();
    if (e > kMaxExponent) throw SyntaxError(at, "exponent too large");
    if (peek() == '^') throw SyntaxError(pos_, "chained exponent; use parentheses");
    return pow(base, static_cast<unsigned>(e.get_ui()));
  }

  Int integer() {
    skip_ws();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, pos_ < s_.size() ? unexpected() + ", expected integer"
                                                               : "expected integer");
    return Int(std::string(s_.substr(start, pos_ - start)), 10);
  }

  BiPoly atom() {
    char c = peek();
    if (std::isdigit(static_cast<unsigned char>(c))) {
      Int num = integer();
      // A rational literal requires the '/' to follow the digits directly.
      if (pos_ < s_.size() && s_[pos_] == '/') {
        const std::size_t at = ++pos_;
        if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_])))
          throw SyntaxError(at, "expected denominator");
        Int den = integer();
        if (den == 0) throw SyntaxError(at, "zero denominator");
        return BiPoly(make_rat(num, den));
      }
      return BiPoly(Rat(num));
    }
    if (c == 'x' || c == 'y') {
      ++pos_;
      return c == 'x' ? BiPoly::x() : BiPoly::y();
    }
    if (c == '(') {
      ++pos_;
      BiPoly inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, unexpected() + ", expected ')'");
      ++pos_;
      return inner;
    }
    throw SyntaxError(pos_, unexpected());
  }

  std::string_view s_;
  std::size_t pos_ = 0;
};

}  // namespace

BiPoly parse_poly(std::string_view text) { return Parser(text).parse(); }

}  // namespace jaccoord
