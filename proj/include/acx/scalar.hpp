#pragma once

#include <string>

#include "acx/gauss_rational.hpp"
#include "acx/polynomial.hpp"

namespace acx {

/// Exact element of Q(i)(a, pi): a reduced quotient of polynomials with a monic denominator.
/// Both symbols are real, so conjugation acts on the Gaussian-rational coefficients only.
class Scalar {
 public:
  Scalar() : den_(1) {}
  Scalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(GaussRational c) : num_(std::move(c)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly p) : num_(std::move(p)), den_(1) {}  // NOLINT(google-explicit-constructor)
  Scalar(Poly num, Poly den);

  static Scalar i() { return Scalar(GaussRational::i()); }
  static Scalar a() { return Scalar(Poly::symbol(Symbol::A)); }
  static Scalar pi() { return Scalar(Poly::symbol(Symbol::Pi)); }
  static Scalar rational(long p, long q) { return Scalar(GaussRational(mpq_class(p, q))); }
  /// Parses a rational literal "p" or "p/q".
  static Scalar parse_rational(std::string_view text) { return Scalar(GaussRational(GaussRational::parse_rational(text))); }

  const Poly& num() const { return num_; }
  const Poly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }
  /// True when no symbol occurs.
  bool is_constant() const { return num_.is_constant() && den_.is_constant(); }
  /// The Gaussian-rational value; throws std::logic_error if a symbol occurs.
  GaussRational constant() const;
  bool involves(Symbol s) const { return num_.involves(s) || den_.involves(s); }

  Scalar conj() const;
  Scalar inverse() const;
  Scalar substitute(Symbol s, const Scalar& value) const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);
  friend Scalar operator+(Scalar x, const Scalar& y) { return x += y; }
  friend Scalar operator-(Scalar x, const Scalar& y) { return x -= y; }
  friend Scalar operator*(Scalar x, const Scalar& y) { return x *= y; }
  friend Scalar operator/(Scalar x, const Scalar& y) { return x /= y; }
  friend bool operator==(const Scalar& x, const Scalar& y) { return x.num_ == y.num_ && x.den_ == y.den_; }

  /// "0", "-1/2*i", "1/4*a", "(a)/(4*pi+a)"
  std::string to_string() const;

 private:
  void normalize();
  Poly num_;
  Poly den_;
};

}  // namespace acx
