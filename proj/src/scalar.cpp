#include "acx/scalar.hpp"

#include <algorithm>
#include <stdexcept>

namespace acx {

Scalar::Scalar(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("division by zero");
  normalize();
}

void Scalar::normalize() {
  if (num_.is_zero()) {
    den_ = Poly(1);
    return;
  }
  if (!den_.is_constant()) {
    const Poly g = Poly::gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = *num_.divide_exact(g);
      den_ = *den_.divide_exact(g);
    }
  }
  const GaussRational lead = den_.leading().second;
  if (!lead.is_one()) {
    const GaussRational inv = lead.inverse();
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

GaussRational Scalar::constant() const {
  if (!is_constant()) throw std::logic_error("scalar " + to_string() + " is not a constant");
  return num_.constant_term();
}

Scalar Scalar::conj() const {
  Scalar r;
  r.num_ = num_.conj();
  r.den_ = den_.conj();
  r.normalize();
  return r;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("division by zero");
  return {den_, num_};
}

Scalar Scalar::substitute(Symbol s, const Scalar& value) const {
  if (!involves(s)) return *this;
  // Homogenize: p(value) = sum c_k num^k den^(d-k) / den^d.
  auto eval = [&](const Poly& p, int d) {
    Poly out;
    std::vector<Poly> num_pow{Poly(1)};
    std::vector<Poly> den_pow{Poly(1)};
    for (int k = 1; k <= d; ++k) {
      num_pow.push_back(num_pow.back() * value.num_);
      den_pow.push_back(den_pow.back() * value.den_);
    }
    for (const auto& [e, c] : p.terms()) {
      const int k = s == Symbol::A ? e.a : e.pi;
      const Exponent rest = s == Symbol::A ? Exponent{0, e.pi} : Exponent{e.a, 0};
      out += Poly::monomial(rest, c) * num_pow[k] * den_pow[d - k];
    }
    return out;
  };
  const int dn = num_.degree(s);
  const int dd = den_.degree(s);
  const int d = std::max(dn, dd);
  Poly n = eval(num_, d);
  Poly m = eval(den_, d);
  return {std::move(n), std::move(m)};
}

Scalar Scalar::operator-() const {
  Scalar r = *this;
  r.num_ = -r.num_;
  return r;
}

Scalar& Scalar::operator+=(const Scalar& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  if (den_ == o.den_) {
    num_ += o.num_;
    if (!den_.is_constant()) normalize();
    else if (num_.is_zero()) den_ = Poly(1);
    return *this;
  }
  num_ = num_ * o.den_ + o.num_ * den_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar& Scalar::operator*=(const Scalar& o) {
  if (is_zero()) return *this;
  if (o.is_zero()) return *this = Scalar();
  if (o.den_.is_constant() && den_.is_constant()) {
    num_ = num_ * o.num_;
    return *this;
  }
  num_ = num_ * o.num_;
  den_ = den_ * o.den_;
  normalize();
  return *this;
}

Scalar& Scalar::operator/=(const Scalar& o) { return *this *= o.inverse(); }

std::string Scalar::to_string() const {
  const std::string n = num_.to_string();
  if (den_.is_constant()) return n;
  auto wrap = [](const Poly& p) {
    const std::string s = p.to_string();
    return s.find_first_of("+-", 1) != std::string::npos ? "(" + s + ")" : s;
  };
  return wrap(num_) + "/" + wrap(den_);
}

}  // namespace acx
