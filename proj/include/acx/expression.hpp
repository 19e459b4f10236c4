#pragma once

#include <cctype>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "acx/scalar.hpp"

namespace acx {

/// Parser for printed linear/exterior expressions such as "-(f2-h8)", "2(f1+h7)",
/// "-i/2*phi1^phibar4 - (1-i)/2*phi2^phibar4" or "-f2^h1 - 2f3^f6".
/// Juxtaposition, '*' and '^' all denote the (graded) product; 'i' is the imaginary unit.
/// V must provide +, -, unary -, Scalar * V and a product wedge(V, V); `leaf` maps a name to a V
/// and `unit` is the constant 1.
template <class V>
class ExpressionParser {
 public:
  ExpressionParser(std::function<V(std::string_view)> leaf, V unit) : leaf_(std::move(leaf)), unit_(std::move(unit)) {}

  V parse(std::string_view text) {
    text_ = text;
    pos_ = 0;
    V v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool peek(char c) {
    skip();
    return pos_ < text_.size() && text_[pos_] == c;
  }

  bool starts_factor() {
    skip();
    if (pos_ >= text_.size()) return false;
    const char c = text_[pos_];
    return c == '(' || std::isalnum(static_cast<unsigned char>(c));
  }

  V expr() {
    V v = peek('-') ? (++pos_, -term()) : (peek('+') ? (++pos_, term()) : term());
    while (true) {
      if (peek('+')) {
        ++pos_;
        v = v + term();
      } else if (peek('-')) {
        ++pos_;
        v = v - term();
      } else {
        return v;
      }
    }
  }

  V term() {
    V v = factor();
    while (true) {
      if (peek('*') || peek('^')) {
        ++pos_;
        v = wedge(v, factor());
      } else if (starts_factor()) {
        v = wedge(v, factor());
      } else {
        return v;
      }
    }
  }

  V factor() {
    skip();
    if (pos_ >= text_.size()) fail("unexpected end");
    V v = unit_;
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      v = expr();
      if (!peek(')')) fail("missing ')'");
      ++pos_;
    } else if (std::isdigit(static_cast<unsigned char>(c))) {
      v = Scalar(integer()) * unit_;
    } else if (std::isalpha(static_cast<unsigned char>(c))) {
      const size_t start = pos_;
      while (pos_ < text_.size() && std::isalnum(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      const std::string_view name = text_.substr(start, pos_ - start);
      v = name == "i" ? Scalar::i() * unit_ : leaf_(name);
    } else {
      fail("expected a factor");
    }
    while (peek('/')) {
      ++pos_;
      skip();
      if (pos_ >= text_.size() || !std::isdigit(static_cast<unsigned char>(text_[pos_]))) fail("expected a divisor");
      const long d = integer();
      if (d == 0) fail("division by zero");
      v = Scalar(1) / Scalar(d) * v;
    }
    return v;
  }

  long integer() {
    const size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    return std::stol(std::string(text_.substr(start, pos_ - start)));
  }

  std::function<V(std::string_view)> leaf_;
  V unit_;
  std::string_view text_;
  size_t pos_ = 0;
};

}  // namespace acx
