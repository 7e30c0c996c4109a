#pragma once

// Text grammar for polynomials:
//   expr   := ['-'|'+'] term (('+'|'-') term)*
//   term   := factor (('*' factor) | ('/' integer))*
//   factor := primary ('^' integer)?
//   primary:= integer | variable | '@' | '(' expr ')'

#include "planecurve/poly.hpp"

#include <cctype>

namespace planecurve {

class ParseError : public std::runtime_error {
 public:
  ParseError(int line, int col, const std::string& msg)
      : std::runtime_error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg),
        line_(line),
        col_(col) {}
  int line() const { return line_; }
  int column() const { return col_; }

 private:
  int line_, col_;
};

namespace detail {

class PolyParser {
 public:
  PolyParser(const std::string& s, const Ring& r, int line, int col0) : s_(s), r_(r), line_(line), col0_(col0) {}

  Poly parse() {
    Poly p = expr();
    skip();
    if (i_ < s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& msg) const { throw ParseError(line_, col0_ + static_cast<int>(i_), msg); }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool accept(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  mpz_class integer() {
    skip();
    size_t j = i_;
    while (j < s_.size() && std::isdigit(static_cast<unsigned char>(s_[j]))) ++j;
    if (j == i_) fail("expected integer");
    mpz_class z(s_.substr(i_, j - i_));
    i_ = j;
    return z;
  }
  Poly expr() {
    skip();
    bool neg = false;
    if (accept('-')) {
      neg = true;
    } else {
      accept('+');
    }
    Poly p = term();
    if (neg) p = -p;
    for (;;) {
      if (accept('+')) {
        p += term();
      } else if (accept('-')) {
        p -= term();
      } else {
        return p;
      }
    }
  }
  Poly term() {
    Poly p = factor();
    for (;;) {
      if (accept('*')) {
        p *= factor();
      } else if (accept('/')) {
        mpz_class d = integer();
        if (d == 0) fail("division by zero");
        p = Scalar(mpq_class(1, 1) / mpq_class(d)) * p;
      } else {
        skip();
        if (i_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[i_])) || s_[i_] == '(' || s_[i_] == '@'))
          fail("implicit multiplication is not allowed");
        return p;
      }
    }
  }
  Poly factor() {
    Poly p = primary();
    if (accept('^')) {
      mpz_class e = integer();
      if (e > 10000) fail("exponent too large");
      p = p.pow(static_cast<unsigned>(e.get_ui()));
    }
    return p;
  }
  Poly primary() {
    skip();
    if (i_ >= s_.size()) fail("unexpected end of input");
    char c = s_[i_];
    if (std::isdigit(static_cast<unsigned char>(c))) return Poly(r_, Scalar(mpq_class(integer())));
    if (c == '@') {
      if (r_.field().is_rational()) fail("'@' used without a field extension");
      ++i_;
      return Poly(r_, Scalar::generator(r_.field()));
    }
    if (c == '(') {
      ++i_;
      Poly p = expr();
      if (!accept(')')) fail("expected ')'");
      return p;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      size_t j = i_;
      while (j < s_.size() && std::isalnum(static_cast<unsigned char>(s_[j]))) ++j;
      std::string name = s_.substr(i_, j - i_);
      for (int k = 0; k < r_.nvars(); ++k) {
        if (r_.vars()[k] == name) {
          i_ = j;
          return Poly::var(r_, k);
        }
      }
      fail("unknown variable '" + name + "'");
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  const std::string& s_;
  const Ring& r_;
  int line_, col0_;
  size_t i_ = 0;
};

}  // namespace detail

inline Poly parse_poly(const std::string& text, const Ring& ring, int line = 1, int col0 = 1) {
  return detail::PolyParser(text, ring, line, col0).parse();
}

inline std::vector<std::string> default_vars(int n) {
  if (n == 2) return {"u", "v"};
  return {"x", "y", "z"};
}

// Allowed variable names for the text grammar.
inline bool is_grammar_var(const std::string& v) {
  return v == "x" || v == "y" || v == "z" || v == "u" || v == "v" || v == "t";
}

// Parse the minimal polynomial of a "field:" header (variable t).
inline Field parse_field(const std::string& text, int line = 1, int col0 = 1) {
  Ring r(Field(), {"t"});
  Poly p = parse_poly(text, r, line, col0);
  std::vector<mpq_class> c(std::max(0, p.total_degree() + 1));
  for (auto& [m, a] : p.terms()) c[m[0]] = a.rational();
  return Field::extension(UPolyQ(c));
}

}  // namespace planecurve
