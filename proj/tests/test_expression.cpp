#include "doctest.h"
#include "support.hpp"

#include "acx/expression.hpp"

using namespace acx;

namespace {

Form parse_form(std::string_view text) {
  ExpressionParser<Form> p(
      [](std::string_view name) {
        if (name == "a") return Form::phi(2, 1);
        if (name == "b") return Form::phi(2, 2);
        if (name == "abar") return Form::phibar(2, 1);
        throw std::invalid_argument("unknown");
      },
      Form::constant(2, 1));
  return p.parse(text);
}

}  // namespace

TEST_CASE("expression parser") {
  const Form a = Form::phi(2, 1);
  const Form b = Form::phi(2, 2);
  const Form abar = Form::phibar(2, 1);
  CHECK(parse_form("a") == a);
  CHECK(parse_form("-a + 2b") == -a + Scalar(2) * b);
  CHECK(parse_form("2(a+b)") == Scalar(2) * (a + b));
  CHECK(parse_form("-(a-b)") == b - a);
  CHECK(parse_form("a^b") == wedge(a, b));
  CHECK(parse_form("b*a") == -wedge(a, b));
  CHECK(parse_form("a b") == wedge(a, b));
  CHECK(parse_form("-i/2*a^abar") == (Scalar::i() / Scalar(-2)) * wedge(a, abar));
  CHECK(parse_form("(1-i)/2*b") == ((Scalar(1) - Scalar::i()) / Scalar(2)) * b);
  CHECK(parse_form("a^a").is_zero());
  CHECK(parse_form("0").is_zero());

  CHECK_THROWS_AS(parse_form("a +"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("(a"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("c"), std::invalid_argument);
  CHECK_THROWS_AS(parse_form("a/0"), std::exception);
  CHECK_THROWS_AS(parse_form("a ]"), std::invalid_argument);
}
