// SPDX-License-Identifier: Apache-2.0
#include "biregkit/parser.hpp"

#include <cctype>

namespace bireg {

namespace {

class Parser {
 public:
  Parser(std::string_view text, const RingPtr& ring, int line) : s_(text), ring_(ring), line_(line) {}

  Polynomial run() {
    skip();
    if (pos_ == s_.size()) fail("empty polynomial");
    Polynomial p = expr();
    skip();
    if (pos_ != s_.size()) fail(std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(msg, line_, static_cast<int>(pos_) + 1); }

  void skip() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  bool peek(char c) {
    skip();
    return pos_ < s_.size() && s_[pos_] == c;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (peek('+') || peek('-')) {
        neg = s_[pos_] == '-';
        ++pos_;
      } else if (!first) {
        break;
      }
      first = false;
      Polynomial t = term();
      if (neg) {
        acc -= t;
      } else {
        acc += t;
      }
      if (!(peek('+') || peek('-'))) break;
    }
    return acc;
  }

  bool starts_factor() {
    skip();
    if (pos_ == s_.size()) return false;
    char c = s_[pos_];
    return c == '(' || c == 'x' || c == 'y' || std::isdigit(static_cast<unsigned char>(c));
  }

  Polynomial term() {
    Polynomial p = factor();
    while (true) {
      if (peek('*')) {
        ++pos_;
        if (!starts_factor()) fail("expected a factor after '*'");
        p = p * factor();
      } else if (starts_factor()) {
        p = p * factor();
      } else {
        break;
      }
    }
    return p;
  }

  Polynomial factor() {
    Polynomial base = primary();
    if (peek('^')) {
      ++pos_;
      skip();
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected exponent");
      auto e = digits();
      if (e.size() > 4) fail("exponent too large");
      base = base.pow(std::stoi(e));
    }
    return base;
  }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return std::string(s_.substr(start, pos_ - start));
  }

  Polynomial primary() {
    skip();
    if (pos_ == s_.size()) fail("unexpected end of input");
    char c = s_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial p = expr();
      if (!peek(')')) fail("expected ')'");
      ++pos_;
      return p;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      mpz_class num(digits());
      mpz_class den(1);
      if (peek('/')) {
        ++pos_;
        skip();
        if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) fail("expected denominator");
        std::size_t at = pos_;
        den = mpz_class(digits());
        if (den == 0) {
          pos_ = at;
          fail("zero denominator");
        }
      }
      try {
        return Polynomial::constant(ring_, Scalar::from_rational(mpq_class(num, den), ring_->field()));
      } catch (const MathError& e) {
        fail(e.what());
      }
    }
    if (c == 'x' || c == 'y') {
      std::size_t at = pos_;
      ++pos_;
      if (pos_ == s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
        pos_ = at;
        fail(std::string("expected index after '") + c + "'");
      }
      auto idx = digits();
      int k = idx.size() > 3 ? 1000 : std::stoi(idx);
      int limit = c == 'x' ? ring_->n() : ring_->m();
      if (k < 1 || k > limit) {
        pos_ = at;
        fail(std::string("unknown variable ") + c + idx);
      }
      return Polynomial::variable(ring_, c == 'x' ? ring_->x(k - 1) : ring_->y(k - 1));
    }
    fail(std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  const RingPtr& ring_;
  int line_;
  std::size_t pos_ = 0;
};

}  // namespace

Polynomial parse_polynomial(std::string_view text, const RingPtr& ring, int line) {
  return Parser(text, ring, line).run();
}

}  // namespace bireg
