#pragma once

#include <compare>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acx/gauss_rational.hpp"

namespace acx {

/// The two real symbols the coefficient field knows about.
enum class Symbol { A = 0, Pi = 1 };

/// Exponent of a monomial a^i pi^j. Ordered lexicographically (a before pi).
struct Exponent {
  int a = 0;
  int pi = 0;

  friend auto operator<=>(const Exponent&, const Exponent&) = default;
  bool divides(const Exponent& o) const { return a <= o.a && pi <= o.pi; }
  Exponent operator+(const Exponent& o) const { return {a + o.a, pi + o.pi}; }
  Exponent operator-(const Exponent& o) const { return {a - o.a, pi - o.pi}; }
};

/// Polynomial in the real symbols a and pi with Gaussian-rational coefficients.
/// Terms are kept sorted by strictly decreasing exponent with no zero coefficients.
class Poly {
 public:
  using Term = std::pair<Exponent, GaussRational>;

  Poly() = default;
  Poly(GaussRational c);  // NOLINT(google-explicit-constructor)
  Poly(long c) : Poly(GaussRational(c)) {}  // NOLINT(google-explicit-constructor)
  static Poly symbol(Symbol s);
  static Poly monomial(Exponent e, GaussRational c);

  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].first == Exponent{}); }
  /// Constant term value (zero if absent).
  GaussRational constant_term() const;
  const Term& leading() const { return terms_.front(); }
  int degree(Symbol s) const;
  bool involves(Symbol s) const { return degree(s) > 0; }

  Poly operator-() const;
  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  friend Poly operator+(Poly x, const Poly& y) { return x += y; }
  friend Poly operator-(Poly x, const Poly& y) { return x -= y; }
  friend Poly operator*(const Poly& x, const Poly& y);
  Poly scaled(const GaussRational& c) const;
  friend bool operator==(const Poly&, const Poly&) = default;

  Poly conj() const;
  /// Quotient if `divisor` divides this polynomial exactly.
  std::optional<Poly> divide_exact(const Poly& divisor) const;
  /// Greatest common divisor, normalized so the leading coefficient is 1 (0 if both are 0).
  static Poly gcd(const Poly& x, const Poly& y);
  /// Substitute a value for one symbol (the value is itself a polynomial).
  Poly substitute(Symbol s, const Poly& value) const;

  std::string to_string() const;

 private:
  void add_term(const Exponent& e, const GaussRational& c);
  std::vector<Term> terms_;
};

}  // namespace acx
