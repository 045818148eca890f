#pragma once

// Recursive-descent parser shared by the Laurent, rational-function and
// polynomial front ends.  `Ring` supplies the arithmetic:
//   static Ring constant(const Rat&);
//   Ring + Ring, Ring - Ring, Ring * Ring, -Ring
//   static Ring divide(const Ring&, const Ring&);   // may throw ParseError
//   static Ring power(const Ring&, long);           // may throw ParseError
// and the caller resolves identifiers.

#include <cctype>
#include <functional>
#include <string>

#include "torus/error.hpp"
#include "torus/integer.hpp"

namespace torus::detail {

template <class Ring>
class ExprParser {
 public:
  using Resolver = std::function<Ring(const std::string&)>;

  ExprParser(std::string text, Resolver resolve)
      : s_(std::move(text)), resolve_(std::move(resolve)) {}

  Ring parse() {
    Ring v = expr();
    if (peek() != '\0') fail("unexpected '" + std::string(1, s_[pos_]) + "'");
    return v;
  }

  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError("cannot parse '" + s_ + "' at offset " + std::to_string(pos_) + ": " + why);
  }

 private:
  char peek() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Ring expr() {
    Ring v = Ring::constant(Rat(0));
    bool first = true;
    for (;;) {
      const char c = peek();
      bool neg = false;
      if (c == '+' || c == '-') {
        neg = c == '-';
        ++pos_;
      } else if (!first) {
        return v;
      }
      Ring t = term();
      v = neg ? v - t : v + t;
      first = false;
    }
  }

  Ring term() {
    Ring v = power();
    for (;;) {
      const char c = peek();
      if (c == '*') {
        ++pos_;
        v = v * power();
      } else if (c == '/') {
        ++pos_;
        v = Ring::divide(v, power());
      } else if (c == '(' || std::isalpha(static_cast<unsigned char>(c))) {
        v = v * power();  // juxtaposition, e.g. 2x or (x+1)(y-1)
      } else {
        return v;
      }
    }
  }

  Ring power() {
    Ring base = atom();
    if (peek() == '^') {
      ++pos_;
      base = Ring::power(base, exponent());
    }
    return base;
  }

  long exponent() {
    bool neg = false;
    bool paren = false;
    if (peek() == '(') {
      paren = true;
      ++pos_;
    }
    if (peek() == '-' || peek() == '+') {
      neg = s_[pos_] == '-';
      ++pos_;
    }
    peek();
    const std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) fail("expected an integer exponent");
    if (pos_ - start > 6) fail("exponent too large");
    long e = std::stol(s_.substr(start, pos_ - start));
    if (paren) {
      if (peek() != ')') fail("expected ')'");
      ++pos_;
    }
    return neg ? -e : e;
  }

  Ring atom() {
    const char c = peek();
    if (c == '(') {
      ++pos_;
      Ring v = expr();
      if (peek() != ')') fail("expected ')'");
      ++pos_;
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return Ring::constant(Rat(Int(s_.substr(start, pos_ - start))));
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      const std::size_t start = pos_;
      while (pos_ < s_.size() && std::isalnum(static_cast<unsigned char>(s_[pos_]))) ++pos_;
      return resolve_(s_.substr(start, pos_ - start));
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  std::string s_;
  Resolver resolve_;
  std::size_t pos_ = 0;
};

}  // namespace torus::detail
