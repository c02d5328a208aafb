#pragma once

#include <cctype>
#include <string>
#include <string_view>
#include <vector>

#include "tf/errors.hpp"
#include "tf/polynomial.hpp"

namespace tf {

namespace detail {

/// Recursive-descent reader for  expr := term (('+'|'-') term)*,
/// term := factor ('*' factor)*,  factor := ('-')? atom ('^' int)?,
/// atom := number ('/' number)? | name | '(' expr ')'.
template <class F>
class PolynomialReader {
 public:
  PolynomialReader(RingPtr<F> ring, std::string_view text, std::size_t line, std::size_t column)
      : ring_(std::move(ring)), text_(text), line_(line), column0_(column) {}

  Polynomial<F> read_all() {
    Polynomial<F> p = expr();
    skip_space();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    std::size_t line = line_, col = column0_;
    for (std::size_t i = 0; i < pos_ && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
    throw ParseError(what, line, col);
  }

  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(char c) {
    skip_space();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Polynomial<F> expr() {
    skip_space();
    Polynomial<F> acc(ring_);
    bool negate = false;
    if (accept('-')) {
      negate = true;
    } else {
      accept('+');
    }
    acc = term();
    if (negate) acc = -acc;
    for (;;) {
      if (accept('+')) {
        acc += term();
      } else if (accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial<F> term() {
    Polynomial<F> acc = factor();
    while (accept('*')) acc *= factor();
    return acc;
  }

  Polynomial<F> factor() {
    if (accept('-')) return -factor();
    Polynomial<F> base = atom();
    if (accept('^')) {
      skip_space();
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      if (start == pos_) fail("expected an exponent");
      int e = std::stoi(std::string(text_.substr(start, pos_ - start)));
      base = base.pow(e);
    }
    return base;
  }

  Polynomial<F> atom() {
    skip_space();
    if (pos_ >= text_.size()) fail("unexpected end of polynomial");
    char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      Polynomial<F> inner = expr();
      if (!accept(')')) fail("expected ')'");
      return inner;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::size_t start = pos_;
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      std::string literal(text_.substr(start, pos_ - start));
      skip_space();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        skip_space();
        std::size_t dstart = pos_;
        while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
        if (dstart == pos_) fail("expected a denominator");
        literal += "/" + std::string(text_.substr(dstart, pos_ - dstart));
      }
      return Polynomial<F>::constant(ring_, ring_->field().from_string(literal));
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string name(text_.substr(start, pos_ - start));
      auto idx = ring_->find(name);
      if (!idx) {
        pos_ = start;
        fail("unknown variable '" + name + "'");
      }
      return Polynomial<F>::variable(ring_, *idx);
    }
    fail("unexpected '" + std::string(1, c) + "'");
  }

  RingPtr<F> ring_;
  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_;
  std::size_t column0_;
};

}  // namespace detail

/// Parses a polynomial in the variables of `ring`. Positions in errors are
/// reported relative to (line, column) of the first character.
template <class F>
Polynomial<F> parse_polynomial(const RingPtr<F>& ring, std::string_view text, std::size_t line = 1,
                               std::size_t column = 1) {
  return detail::PolynomialReader<F>(ring, text, line, column).read_all();
}

/// Comma separated list of polynomials.
template <class F>
std::vector<Polynomial<F>> parse_polynomial_list(const RingPtr<F>& ring, std::string_view text,
                                                 std::size_t line = 1, std::size_t column = 1) {
  std::vector<Polynomial<F>> out;
  std::size_t start = 0;
  int depth = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size() && text[i] == '(') ++depth;
    if (i < text.size() && text[i] == ')') --depth;
    if (i == text.size() || (text[i] == ',' && depth == 0)) {
      auto piece = text.substr(start, i - start);
      std::size_t off = start;
      std::size_t l = line, c = column;
      for (std::size_t j = 0; j < off; ++j) {
        if (text[j] == '\n') {
          ++l;
          c = 1;
        } else {
          ++c;
        }
      }
      out.push_back(parse_polynomial(ring, piece, l, c));
      start = i + 1;
    }
  }
  return out;
}

}  // namespace tf
