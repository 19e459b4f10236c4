#include "doctest.h"
#include "support.hpp"

#include "acx/pi_param.hpp"
#include "acx/scalar.hpp"

using namespace acx;

TEST_CASE("gaussian rationals parse and invert exactly") {
  CHECK(GaussRational::parse_rational("-6/4") == mpq_class(-3, 2));
  CHECK_THROWS_AS(GaussRational::parse_rational("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(GaussRational::parse_rational("1.5"), std::invalid_argument);
  const GaussRational z(mpq_class(3, 7), mpq_class(-2, 5));
  CHECK((z * z.inverse()).is_one());
  CHECK(z.conj().conj() == z);
  CHECK_THROWS_AS(GaussRational().inverse(), std::domain_error);
  CHECK(GaussRational(mpq_class(1, 2), mpq_class(-1, 2)).to_string() == "1/2-1/2*i");
}

TEST_CASE("polynomial gcd recovers a planted common factor") {
  const Poly a = Poly::symbol(Symbol::A);
  const Poly pi = Poly::symbol(Symbol::Pi);
  const Poly common = a * a + pi.scaled(GaussRational::i()) + Poly(3);
  const Poly x = common * (a - pi);
  const Poly y = common * (a + pi * pi + Poly(1));
  const Poly g = Poly::gcd(x, y);
  CHECK(g == common);
  CHECK(*x.divide_exact(g) == a - pi);
  CHECK_FALSE(x.divide_exact(a + Poly(7)).has_value());
  CHECK(Poly::gcd(a * pi, pi * pi) == pi);
}

TEST_CASE("scalar field arithmetic is exact") {
  const Scalar a = Scalar::a();
  const Scalar pi = Scalar::pi();
  const Scalar x = (a + 4 * pi) / (a - pi);
  CHECK(x * x.inverse() == Scalar(1));
  CHECK(x - x == Scalar());
  CHECK((a / 4) * 4 == a);
  CHECK(Scalar::rational(3, 5) / Scalar::rational(5, 3) * (Scalar::rational(5, 3) / Scalar::rational(3, 5)) == Scalar(1));
  CHECK((Scalar::i() * a).conj() == -Scalar::i() * a);
  CHECK_THROWS_AS(Scalar().inverse(), std::domain_error);
  CHECK(((a * a - pi * pi) / (a - pi)) == a + pi);
  CHECK(x.substitute(Symbol::A, 2 * pi) == Scalar(6));
}

TEST_CASE("pi parameters parse and specialize") {
  CHECK(PiParam::parse("4*pi").q() == 4);
  CHECK(PiParam::parse("4/3*pi").q() == mpq_class(4, 3));
  CHECK(PiParam::parse("pi").q() == 1);
  CHECK(PiParam::parse("generic").is_generic());
  CHECK_THROWS_AS(PiParam::parse("4*p"), std::invalid_argument);
  CHECK_THROWS_AS(PiParam::parse("0*pi"), std::invalid_argument);
  const Scalar expr = Scalar::a() / 4 - Scalar::pi();
  CHECK(PiParam::parse("4*pi").is_zero(expr));
  CHECK_FALSE(PiParam::parse("2*pi").is_zero(expr));
  CHECK_FALSE(PiParam::generic().is_zero(expr));
}
