#include <cctype>

#include "drees/polynomial.hpp"

namespace drees {

namespace {

class Parser {
 public:
  Parser(const Ring& r, std::string_view s) : ring_(r), s_(s) {}

  Polynomial run() {
    Polynomial p = expr();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const {
    throw ParseError("cannot parse '" + std::string(s_) + "' at " + std::to_string(i_) + ": " + msg);
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }

  Polynomial expr() {
    Polynomial acc(ring_);
    bool first = true;
    while (true) {
      skip();
      bool neg = false;
      if (eat('-')) {
        neg = true;
      } else if (!eat('+') && !first) {
        break;
      }
      Polynomial t = term();
      acc = neg ? acc - t : acc + t;
      first = false;
      skip();
      if (i_ >= s_.size() || (s_[i_] != '+' && s_[i_] != '-')) break;
    }
    return acc;
  }

  Polynomial term() {
    Polynomial acc = factor();
    while (true) {
      if (eat('*')) {
        acc *= factor();
      } else if (eat('/')) {
        Polynomial d = factor();
        if (!d.is_constant() || d.is_zero()) fail("division only by nonzero constants");
        acc = acc.scale(ring_.field().inv(d.lc()));
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial factor() {
    Polynomial b = base();
    if (eat('^')) {
      skip();
      if (i_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[i_]))) fail("exponent must be a non-negative integer");
      unsigned long e = 0;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) {
        e = e * 10 + static_cast<unsigned long>(s_[i_++] - '0');
        if (e > 1000000) fail("exponent too large");
      }
      b = b.pow(static_cast<unsigned>(e));
    }
    return b;
  }

  Polynomial base() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end");
    char c = s_[i_];
    if (c == '(') {
      ++i_;
      Polynomial p = expr();
      if (!eat(')')) fail("missing ')'");
      return p;
    }
    if (c == '-') {
      ++i_;
      return -factor();
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::string digits;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) digits += s_[i_++];
      return Polynomial::constant(ring_, ring_.field().from_mpz(mpz_class(digits)));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string id;
      while (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '_')) id += s_[i_++];
      if (auto v = ring_.find(id)) return Polynomial::variable(ring_, *v);
      const Field& F = ring_.field();
      if (F.degree() > 1 && id == F.generator_name()) return Polynomial::constant(ring_, F.gen());
      fail("undeclared variable '" + id + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const Ring& ring_;
  std::string_view s_;
  std::size_t i_ = 0;
};

}  // namespace

Polynomial parse_polynomial(const Ring& r, std::string_view text) { return Parser(r, text).run(); }

}  // namespace drees
