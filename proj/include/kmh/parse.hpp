// Text grammar for elements, points, chambers, and gallery types.
//
//   element := "t[" int ("," int)* "]" ("*" word)?  |  word
//   word    := "s" int ("." "s" int)* | "e"
//   point   := "[" rational ("," rational)* "]"
//   chamber := ("+" | "-") word
//
// Generator indices in words are 1-based.
#pragma once

#include <string>

#include "kmh/apartment.hpp"
#include "kmh/system.hpp"
#include "kmh/weyl.hpp"

namespace kmh {

struct ParseError : std::runtime_error {
  size_t pos;
  ParseError(size_t p, const std::string& what)
      : std::runtime_error("parse error at position " + std::to_string(p) + ": " + what),
        pos(p) {}
};

namespace detail {

struct Cursor {
  const std::string& s;
  size_t pos = 0;

  bool done() const { return pos >= s.size(); }
  char peek() const { return done() ? '\0' : s[pos]; }
  bool eat(char c) {
    if (peek() != c) return false;
    ++pos;
    return true;
  }
  void expect(char c) {
    if (!eat(c)) fail_here(std::string("expected '") + c + "'");
  }
  [[noreturn]] void fail_here(const std::string& msg) const { throw ParseError(pos, msg); }

  Int integer() {
    size_t start = pos;
    bool neg = eat('-');
    if (!std::isdigit(static_cast<unsigned char>(peek()))) throw ParseError(start, "expected an integer");
    Int v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) v = v * 10 + (s[pos++] - '0');
    return neg ? -v : v;
  }

  Rat rational() {
    Int num = integer();
    if (!eat('/')) return Rat(num);
    size_t dpos = pos;
    Int den = integer();
    if (den == 0) throw ParseError(dpos, "zero denominator");
    return Rat(num, den);
  }
};

inline std::vector<size_t> word_letters(const System& S, Cursor& c) {
  if (c.eat('e')) return {};
  std::vector<size_t> out;
  for (;;) {
    c.expect('s');
    size_t ipos = c.pos;
    Int i = c.integer();
    if (i < 1 || Int(S.n) < i) throw ParseError(ipos, "generator index out of range");
    out.push_back(static_cast<size_t>(i - 1));
    if (!c.eat('.')) break;
  }
  return out;
}

}  // namespace detail

inline std::vector<size_t> parse_word(const System& S, const std::string& text) {
  detail::Cursor c{text};
  auto w = detail::word_letters(S, c);
  if (!c.done()) c.fail_here("trailing input");
  return w;
}

inline AffineWeylElt parse_element(const System& S, const std::string& text) {
  detail::Cursor c{text};
  IVec lambda(S.d, Int(0));
  bool have_word = true;
  if (c.peek() == 't') {
    c.expect('t');
    c.expect('[');
    for (size_t i = 0; i < S.d; ++i) {
      if (i > 0) c.expect(',');
      lambda[i] = c.integer();
    }
    c.expect(']');
    have_word = c.eat('*');
  }
  WeylElt w = WeylElt::identity(S);
  if (have_word)
    for (size_t i : detail::word_letters(S, c)) w = w.mul(simple_reflection(S, i));
  if (!c.done()) c.fail_here("trailing input");
  return AffineWeylElt{std::move(lambda), std::move(w)};
}

inline Point parse_point(const System& S, const std::string& text) {
  detail::Cursor c{text};
  c.expect('[');
  Point p(S.d, Rat(0));
  for (size_t i = 0; i < S.d; ++i) {
    if (i > 0) c.expect(',');
    p[i] = c.rational();
  }
  c.expect(']');
  if (!c.done()) c.fail_here("trailing input");
  return p;
}

// Chamber at `vertex`: a sign followed by the direction word.
inline LocalChamber parse_chamber(const System& S, const Point& vertex, const std::string& text) {
  detail::Cursor c{text};
  int sign = c.eat('+') ? +1 : (c.eat('-') ? -1 : 0);
  if (sign == 0) c.fail_here("expected '+' or '-'");
  WeylElt dir = WeylElt::identity(S);
  for (size_t i : detail::word_letters(S, c)) dir = dir.mul(simple_reflection(S, i));
  if (!c.done()) c.fail_here("trailing input");
  return LocalChamber{vertex, sign, dir};
}

inline std::string element_text(const System& S, const AffineWeylElt& a) {
  std::string out;
  bool zero = true;
  for (const auto& x : a.lambda) zero = zero && x == 0;
  if (!zero) {
    out += "t[";
    for (size_t i = 0; i < a.lambda.size(); ++i) {
      if (i > 0) out += ",";
      out += a.lambda[i].str();
    }
    out += "]";
  }
  auto word = reduced_word(S, a.w);
  if (word.empty()) {
    if (zero) out = "e";
  } else {
    if (!zero) out += "*";
    for (size_t i = 0; i < word.size(); ++i) {
      if (i > 0) out += ".";
      out += "s" + std::to_string(word[i] + 1);
    }
  }
  return out;
}

}  // namespace kmh
