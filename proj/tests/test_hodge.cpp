#include "doctest.h"
#include "support.hpp"

#include "acx/hodge.hpp"

using namespace acx;

TEST_CASE("star satisfies the defining identity on every monomial pair") {
  for (int n = 1; n <= 3; ++n) {
    const Form dv = volume_form(n);
    const uint32_t count = 1U << (2 * n);
    for (uint32_t my = 0; my < count; ++my) {
      const Form y = Form::from_mask(n, my);
      const Form sy = star(y);
      CHECK(sy == star_by_duality(y));
      const auto [p, q] = Form::bidegree(n, my);
      CHECK(sy.bidegree() == std::pair{n - q, n - p});
      CHECK(star(sy) == Scalar((p + q) % 2 == 0 ? 1 : -1) * y);
      CHECK(hermitian_product(sy, sy) == hermitian_product(y, y));
      for (uint32_t mx = 0; mx < count; ++mx) {
        if (Form::bidegree(n, mx) != std::pair{p, q}) continue;
        const Form x = Form::from_mask(n, mx);
        CHECK(hermitian_product(x, y) * dv == wedge(x, conjugate(sy)));
      }
    }
  }
}

TEST_CASE("star in low dimension") {
  CHECK(star(Form::constant(1, 1)) == volume_form(1));
  CHECK(volume_form(1) == (Scalar::i() / 2) * Form::monomial(1, {1}, {1}));
  CHECK(star(Form::phi(1, 1)) == -Scalar::i() * Form::phi(1, 1));
  CHECK(star(Form::monomial(2, {1}, {1})) == Form::monomial(2, {2}, {2}));
  CHECK(star(volume_form(2)) == Form::constant(2, 1));
  CHECK_THROWS_AS(star(Form::phi(2, 1) + Form::phibar(2, 1)), std::invalid_argument);
}

namespace {

void check_adjointness(const InvariantComplex& c, const Form& theta) {
  const int n = c.n();
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q < n; ++q)
      for (const Form& x : c.section_basis(p, q))
        for (const Form& y : c.section_basis(p, q + 1)) {
          CHECK(hermitian_product(dbar_e(c, theta, x), y) == hermitian_product(x, dbar_star(c, theta, y)));
        }
}

}  // namespace

TEST_CASE("dbar* is the adjoint of dbar on invariant forms") {
  const Scalar a = Scalar::a();
  const LieComplex kt = models::kodaira_thurston_complex(a, 1);
  const LieComplex torus = models::complex_torus(2);
  check_adjointness(kt, Form(2));
  check_adjointness(kt, canonical_dbar(kt, 2).beta);
  check_adjointness(kt, canonical_dbar(kt, 1).beta + kt.characters()->twist({1, -1}));
  check_adjointness(torus, Form(2));
  for (int p = 0; p <= 2; ++p)
    for (const Form& x : kt.section_basis(p, 0)) CHECK(dbar_star(kt, Form(2), x).is_zero());
  for (uint32_t m = 0; m < 16; ++m) {
    CHECK(dbar_star(torus, Form(2), Form::from_mask(2, m)).is_zero());
    CHECK(laplacian(torus, Form(2), Form::from_mask(2, m)).is_zero());
  }
  CHECK(laplacian(kt, Form(2), Form::constant(2, 1)).is_zero());
  // <Lx, x> = |dbar x|^2 + |dbar* x|^2 on KT monomials.
  const Form theta = canonical_dbar(kt, 1).beta;
  for (uint32_t m = 0; m < 16; ++m) {
    const Form x = Form::from_mask(2, m);
    const Form dx = dbar_e(kt, theta, x);
    const Form sx = dbar_star(kt, theta, x);
    CHECK(hermitian_product(laplacian(kt, theta, x), x) == hermitian_product(dx, dx) + hermitian_product(sx, sx));
  }
}

TEST_CASE("invariant harmonic spaces") {
  const LieComplex torus = models::complex_torus(2);
  CHECK(invariant_harmonic_space(torus, 1, 0).dimension == 2);
  CHECK(invariant_harmonic_space(torus, 1, 1).dimension == 4);

  const Scalar a = Scalar::a();
  const LieComplex kt = models::kodaira_thurston_complex(a, 3);
  const HarmonicSpace h10 = invariant_harmonic_space(kt, 1, 0);
  CHECK(h10.dimension == 1);
  REQUIRE(h10.components.size() == 1);
  CHECK(h10.components[0].character == std::vector<int>{0, 0});
  CHECK(h10.components[0].basis[0] == Form::phi(2, 1));
  // Generic a: no twisted constant section of K^m.
  CHECK(invariant_harmonic_space(kt, 0, 0, canonical_dbar(kt, 1).beta).dimension == 0);

  for (int m = 1; m <= 3; ++m) {
    const Scalar am = 4 * Scalar::pi() / m;
    const LieComplex ktm = models::kodaira_thurston_complex(am, 3);
    const HarmonicSpace h = invariant_harmonic_space(ktm, 0, 0, canonical_dbar(ktm, m).beta);
    CHECK(h.dimension == 1);
    REQUIRE(h.components.size() == 1);
    CHECK(h.components[0].character == std::vector<int>{0, 1});
  }

  const LieAlgebra solvable(2, {{1, 2, {0, 1}}});
  const LieComplex bad(solvable, build_coframe(solvable, ACStructure::standard(1)));
  CHECK_FALSE(bad.stokes_holds());
  CHECK_THROWS_AS(invariant_harmonic_space(bad, 0, 0), NonUnimodularError);
}

TEST_CASE("(p,0) harmonic dimension does not depend on the metric") {
  const Scalar a = Scalar::a();
  const Scalar i = Scalar::i();
  const LieAlgebra alg = models::kodaira_thurston();
  const ComplexCoframe base = build_coframe(alg, models::kodaira_thurston_j(a));
  const std::vector<Matrix> changes = {Matrix::from_rows({{2, 0}, {0, 1}}), Matrix::from_rows({{1, i}, {0, 3}}),
                                       Matrix::from_rows({{1 + i, 2}, {Scalar::rational(1, 2), -i}})};
  for (const Matrix& g : changes) {
    const LieComplex c(alg, ComplexCoframe(g * base.rows()));
    for (int p = 0; p <= 2; ++p) CHECK(invariant_harmonic_space(c, p, 0).dimension == invariant_harmonic_space(LieComplex(alg, base), p, 0).dimension);
  }
}

TEST_CASE("Serre pairing") {
  const LieComplex torus = models::complex_torus(2);
  const SerreReport r = serre_pairing_check(torus, 1, 0, Form(2));
  CHECK(r.dimension == 2);
  CHECK(r.dual_dimension == 2);
  CHECK(r.holds());
  CHECK(serre_pairing_check(torus, 0, 0, Form(2)).holds());
  const Scalar a = Scalar::a();
  const LieComplex kt = models::kodaira_thurston_complex(a, 2);
  for (int p = 0; p <= 2; ++p)
    for (int q = 0; q <= 2; ++q) CHECK(serre_pairing_check(kt, p, q, Form(2)).holds());
  const LieComplex kt4 = models::kodaira_thurston_complex(4 * Scalar::pi(), 2);
  CHECK(serre_pairing_check(kt4, 0, 0, canonical_dbar(kt4, 1).beta).holds());
}
