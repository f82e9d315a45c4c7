#pragma once

// Text forms for field elements and univariate function expressions.
//
// Elements print as polynomials in the basis variable `a` with descending
// powers and explicit Z_p coefficients, e.g. "2*a^3 + a + 1". The same
// grammar parses back, and accepts `alpha` or `α` for `a`, implicit
// multiplication ("2a", "2 a"), subtraction and parentheses.

#include <cctype>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <string_view>

#include "cboom/field.hpp"

namespace cboom {

class ParseError : public std::invalid_argument {
 public:
  ParseError(std::size_t column, const std::string& what)
      : std::invalid_argument("column " + std::to_string(column + 1) + ": " + what), column_(column) {}
  std::size_t column() const { return column_; }

 private:
  std::size_t column_;
};

inline std::string format_element(const Field& f, Element x) {
  if (x.index == 0) return "0";
  const auto c = f.coefficients(x);
  std::string out;
  for (std::size_t i = c.size(); i-- > 0;) {
    if (c[i] == 0) continue;
    if (!out.empty()) out += " + ";
    if (i == 0) {
      out += std::to_string(c[i]);
      continue;
    }
    if (c[i] != 1) out += std::to_string(c[i]) + "*";
    out += "a";
    if (i > 1) out += "^" + std::to_string(i);
  }
  return out;
}

namespace detail {

// Polynomial in x with field coefficients, keyed by exponent.
using XPoly = std::map<std::uint64_t, Element>;

class ExprParser {
 public:
  ExprParser(const Field& f, std::string_view text, bool allow_x)
      : f_(f), text_(text), allow_x_(allow_x) {}

  XPoly parse() {
    XPoly v = expression();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(pos_, what); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool eat(char ch) {
    skip_ws();
    if (pos_ < text_.size() && text_[pos_] == ch) {
      ++pos_;
      return true;
    }
    return false;
  }

  bool starts_factor() {
    skip_ws();
    if (pos_ >= text_.size()) return false;
    const auto ch = static_cast<unsigned char>(text_[pos_]);
    return std::isdigit(ch) || std::isalpha(ch) || ch == '(' || ch >= 0x80;
  }

  void add_into(XPoly& acc, const XPoly& t, bool negate) {
    for (const auto& [e, c] : t) {
      auto& slot = acc.try_emplace(e, f_.zero()).first->second;
      slot = negate ? f_.sub(slot, c) : f_.add(slot, c);
    }
  }

  XPoly multiply(const XPoly& a, const XPoly& b) {
    XPoly out;
    for (const auto& [ea, ca] : a) {
      for (const auto& [eb, cb] : b) {
        const std::uint64_t e = ea + eb;
        check_exponent(e);
        auto& slot = out.try_emplace(e, f_.zero()).first->second;
        slot = f_.add(slot, f_.mul(ca, cb));
      }
    }
    return out;
  }

  void check_exponent(std::uint64_t e) const {
    if (e >= f_.order()) {
      throw ParseError(pos_, "exponent " + std::to_string(e) + " out of range (must be < " +
                                 std::to_string(f_.order()) + ")");
    }
  }

  XPoly expression() {
    XPoly acc;
    bool negate = false;
    if (eat('-')) negate = true;
    else eat('+');
    add_into(acc, term(), negate);
    for (;;) {
      if (eat('+')) add_into(acc, term(), false);
      else if (eat('-')) add_into(acc, term(), true);
      else break;
    }
    return acc;
  }

  XPoly term() {
    XPoly acc = power();
    for (;;) {
      if (eat('*')) acc = multiply(acc, power());
      else if (starts_factor()) acc = multiply(acc, power());
      else break;
    }
    return acc;
  }

  std::uint64_t integer() {
    skip_ws();
    const std::size_t start = pos_;
    std::uint64_t v = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      if (v > (UINT64_MAX - 9) / 10) fail("integer literal too large");
      v = v * 10 + static_cast<std::uint64_t>(text_[pos_] - '0');
      ++pos_;
    }
    if (pos_ == start) fail("expected an integer");
    return v;
  }

  XPoly power() {
    XPoly base = primary();
    if (!eat('^')) return base;
    const bool negative = eat('-');
    const std::uint64_t e = integer();
    const bool has_x = !(base.size() <= 1 && (base.empty() || base.begin()->first == 0));
    if (!has_x) {
      const Element c = base.empty() ? f_.zero() : base.begin()->second;
      if (e > static_cast<std::uint64_t>(INT64_MAX)) fail("exponent too large");
      if (negative && c.index == 0) fail("zero raised to a negative power");
      const auto se = static_cast<std::int64_t>(e);
      return XPoly{{0, f_.pow(c, negative ? -se : se)}};
    }
    if (negative) fail("negative powers of x are not allowed");
    if (base.size() == 1 && base.begin()->second == f_.one()) {
      const std::uint64_t ex = base.begin()->first;
      if (ex != 0 && e > (UINT64_MAX / ex)) fail("exponent too large");
      check_exponent(ex * e);
      return XPoly{{ex * e, f_.one()}};
    }
    if (e == 0) return XPoly{{0, f_.one()}};
    XPoly acc = base;
    for (std::uint64_t i = 1; i < e; ++i) acc = multiply(acc, base);
    return acc;
  }

  XPoly primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char ch = text_[pos_];
    if (ch == '(') {
      ++pos_;
      XPoly v = expression();
      if (!eat(')')) fail("expected ')'");
      return v;
    }
    if (std::isdigit(static_cast<unsigned char>(ch))) {
      const std::uint64_t v = integer();
      return XPoly{{0, f_.from_int(static_cast<std::int64_t>(v % f_.p()))}};
    }
    // UTF-8 alpha (U+03B1).
    if (text_.substr(pos_, 2) == "\xCE\xB1") {
      pos_ += 2;
      return XPoly{{0, f_.alpha()}};
    }
    if (std::isalpha(static_cast<unsigned char>(ch))) {
      const std::size_t start = pos_;
      while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view word = text_.substr(start, pos_ - start);
      if (word == "a" || word == "alpha") return XPoly{{0, f_.alpha()}};
      if (allow_x_ && word == "x") return XPoly{{1, f_.one()}};
      if (allow_x_ && word == "inv") return XPoly{{f_.order() - 2, f_.one()}};
      pos_ = start;
      fail("unknown identifier '" + std::string(word) + "'");
    }
    fail("unexpected '" + std::string(1, ch) + "'");
  }

  const Field& f_;
  std::string_view text_;
  bool allow_x_;
  std::size_t pos_ = 0;
};

}  // namespace detail

inline Element parse_element(const Field& f, std::string_view text) {
  auto poly = detail::ExprParser(f, text, false).parse();
  if (poly.empty()) return f.zero();
  return poly.begin()->second;
}

}  // namespace cboom
