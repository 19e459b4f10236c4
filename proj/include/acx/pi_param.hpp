#pragma once

#include <optional>
#include <string>
#include <string_view>

#include "acx/scalar.hpp"

namespace acx {

/// The deformation parameter a: either a = q*pi with q rational, or a generic real
/// (modelled as a symbol algebraically independent of pi).
class PiParam {
 public:
  enum class Kind { RationalPi, Generic };

  static PiParam rational_pi(mpq_class q);
  static PiParam generic() { return PiParam(Kind::Generic, 0); }
  /// Accepts "q*pi", "pi", "-pi", "q*pi" with q = "p/r", and "generic". Throws std::invalid_argument.
  static PiParam parse(std::string_view text);

  Kind kind() const { return kind_; }
  bool is_generic() const { return kind_ == Kind::Generic; }
  /// Only meaningful for RationalPi.
  const mpq_class& q() const { return q_; }

  /// Value of a as a scalar: q*pi, or the symbol a.
  Scalar value() const;
  /// Replaces the symbol a by this parameter's value.
  Scalar specialize(const Scalar& s) const;
  bool is_zero(const Scalar& s) const { return specialize(s).is_zero(); }

  /// "4*pi", "4/3*pi", "generic"
  std::string to_string() const;

  friend bool operator==(const PiParam& x, const PiParam& y) { return x.kind_ == y.kind_ && x.q_ == y.q_; }

 private:
  PiParam(Kind kind, mpq_class q) : kind_(kind), q_(std::move(q)) {}
  Kind kind_;
  mpq_class q_;
};

}  // namespace acx
