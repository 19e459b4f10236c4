#include "doctest.h"
#include "support.hpp"

#include <random>

#include "acx/form.hpp"

using namespace acx;

namespace {

Form random_form(std::mt19937& rng, int n, int degree) {
  Form f(n);
  std::uniform_int_distribution<int> coef(-3, 3);
  for (Form::Mask m = 0; m < (1U << (2 * n)); ++m) {
    if (__builtin_popcount(m) != degree || rng() % 3 != 0) continue;
    f.add_term(m, Scalar(GaussRational(coef(rng), coef(rng))));
  }
  return f;
}

}  // namespace

TEST_CASE("wedge basics") {
  const Form p1 = Form::phi(2, 1);
  const Form p2 = Form::phi(2, 2);
  CHECK(wedge(p1, p1).is_zero());
  CHECK(wedge(p1, Form::phibar(2, 2)) == Form::monomial(2, {1}, {2}));
  CHECK(wedge(p1 + p2, p1 - p2) == -2 * wedge(p1, p2));
  CHECK(wedge(Form::phibar(2, 1), p2) == -wedge(p2, Form::phibar(2, 1)));
  CHECK_THROWS_AS(wedge(p1, Form::phi(3, 1)), std::invalid_argument);
}

TEST_CASE("graded commutativity, associativity and conjugation on random forms") {
  std::mt19937 rng(7);
  for (int n = 1; n <= 4; ++n)
    for (int dx = 0; dx <= 3; ++dx)
      for (int dy = 0; dy <= 3; ++dy) {
        const Form x = random_form(rng, n, dx);
        const Form y = random_form(rng, n, dy);
        const Form z = random_form(rng, n, 1);
        const Scalar sign = (dx * dy) % 2 == 0 ? 1 : -1;
        CHECK(wedge(x, y) == sign * wedge(y, x));
        CHECK(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
        CHECK(conjugate(wedge(x, y)) == wedge(conjugate(x), conjugate(y)));
        CHECK(conjugate(conjugate(x)) == x);
      }
}

TEST_CASE("projection is idempotent and the parts sum back") {
  std::mt19937 rng(11);
  const int n = 3;
  Form x = random_form(rng, n, 2) + random_form(rng, n, 3) + random_form(rng, n, 1);
  Form sum(n);
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) {
      const Form part = project_bidegree(x, p, q);
      CHECK(project_bidegree(part, p, q) == part);
      sum += part;
    }
  CHECK(sum == x);
  const Form y = Form::monomial(2, {1}, {2}) + Form::monomial(2, {1, 2}, {});
  CHECK(project_bidegree(y, 1, 1) == Form::monomial(2, {1}, {2}));
}

TEST_CASE("conjugation on a basis sweep") {
  const int n = 3;
  CHECK(conjugate(Scalar::i() * Form::phi(n, 1)) == -Scalar::i() * Form::phibar(n, 1));
  // Oracle: conjugate factor by factor and multiply in the original order.
  for (Form::Mask m = 0; m < (1U << (2 * n)); ++m) {
    Form expected = Form::constant(n, 1);
    for (int b = 0; b < 2 * n; ++b) {
      if (((m >> b) & 1U) == 0) continue;
      expected = wedge(expected, b < n ? Form::phibar(n, b + 1) : Form::phi(n, b - n + 1));
    }
    CHECK(conjugate(Form::from_mask(n, m)) == expected);
  }
  CHECK(conjugate(Form::monomial(2, {1}, {2})) == -Form::monomial(2, {2}, {1}));
}

TEST_CASE("form rendering") {
  const Form x = Scalar::a() / 4 * Form::monomial(2, {1}, {1}) - Form::phi(2, 2) + Form::constant(2, 3);
  CHECK(x.to_string() == "3 - phi2 + 1/4*a*phi1^phibar1");
}
