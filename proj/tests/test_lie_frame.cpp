#include "doctest.h"
#include "support.hpp"

#include "acx/lie_frame.hpp"

using namespace acx;

namespace {

Vector unit(int dim, int k) {
  Vector v(dim);
  v[k] = 1;
  return v;
}

}  // namespace

TEST_CASE("Chevalley-Eilenberg differential on the Kodaira-Thurston algebra") {
  const LieAlgebra kt = models::kodaira_thurston();
  CHECK(chevalley_eilenberg_d(kt, unit(4, 3)) == -RealForm::from_mask(4, 0b0110));
  for (int k = 0; k < 3; ++k) CHECK(chevalley_eilenberg_d(kt, unit(4, k)).is_zero());
  for (uint32_t m = 0; m < 16; ++m) CHECK(kt.d(kt.d(RealForm::from_mask(4, m))).is_zero());
  CHECK(kt.is_unimodular());
  const LieAlgebra ab = LieAlgebra::abelian(4);
  for (int k = 0; k < 4; ++k) CHECK(chevalley_eilenberg_d(ab, unit(4, k)).is_zero());
}

TEST_CASE("Jacobi and antisymmetry are enforced") {
  // [e1,e2] = e3, [e2,e3] = e2 violates Jacobi.
  CHECK_THROWS_AS(LieAlgebra(3, {{1, 2, {0, 0, 1}}, {2, 3, {0, 1, 0}}}), std::invalid_argument);
  CHECK_THROWS_AS(LieAlgebra(3, {{2, 1, {0, 0, 1}}}), std::invalid_argument);
  CHECK_NOTHROW(LieAlgebra(3, {{1, 2, {0, 0, 1}}, {2, 3, {1, 0, 0}}, {1, 3, {0, -1, 0}}}));
  // Non-unimodular: [e1, e2] = e2.
  CHECK_FALSE(LieAlgebra(2, {{1, 2, {0, 1}}}).is_unimodular());
}

TEST_CASE("coframes") {
  const Scalar a = Scalar::a();
  const LieAlgebra kt = models::kodaira_thurston();
  const ACStructure j = models::kodaira_thurston_j(a);
  const ComplexCoframe cf = build_coframe(kt, j);
  CHECK(cf.rows() == Matrix::from_rows({{1, Scalar::i(), 0, 0}, {0, 0, 1, Scalar::i() * a}}));
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 4; ++k) {
      Scalar lhs;
      Scalar rhs;
      const Vector jv = j.apply(unit(4, k));
      for (int c = 0; c < 4; ++c) {
        lhs += cf.rows()(i, c) * jv[c];
        if (c == k) rhs = Scalar::i() * cf.rows()(i, c);
      }
      CHECK(lhs == rhs);
    }
  for (int i = 0; i < 2; ++i)
    for (int k = 0; k < 2; ++k) {
      CHECK(cf.components(cf.dual_vector(k))[i] == Scalar(i == k ? 1 : 0));
      CHECK(cf.components(cf.dual_vector(k))[2 + i].is_zero());
    }
  const ComplexCoframe std4 = build_coframe(LieAlgebra::abelian(4), ACStructure::standard(2));
  CHECK(std4.matches_up_to_scaling(Matrix::from_rows({{1, Scalar::i(), 0, 0}, {0, 0, 1, Scalar::i()}})));
  CHECK(std4.matches_up_to_scaling(Matrix::from_rows({{Scalar::i(), -1, 0, 0}, {0, 0, 2, 2 * Scalar::i()}})));
  CHECK_THROWS_AS(ACStructure(Matrix::identity(2)), std::invalid_argument);
}

TEST_CASE("Kodaira-Thurston structure equations") {
  const Scalar a = Scalar::a();
  const LieAlgebra kt = models::kodaira_thurston();
  const ComplexCoframe cf = build_coframe(kt, models::kodaira_thurston_j(a));
  const StructureEquations eqs(kt, cf);
  const int n = 2;
  const Form p1 = Form::phi(n, 1), p2 = Form::phi(n, 2), b1 = Form::phibar(n, 1), b2 = Form::phibar(n, 2);
  CHECK(eqs.dphi(0).is_zero());
  // Direct expansion of -i a e2^e3.
  CHECK(eqs.dphi(1) == -(a / 4) * (wedge(p1, p2) + wedge(p1, b2) - wedge(b1, p2) - wedge(b1, b2)));
  CHECK(project_bidegree(eqs.dphi(1), 1, 1) == -(a / 4) * (wedge(p1, b2) - wedge(b1, p2)));
  CHECK(eqs.dbar(wedge(p1, p2)) == (a / 4) * wedge(wedge(b1, p1), p2));
  for (uint32_t m = 0; m < 16; ++m) CHECK(eqs.d(eqs.d(Form::from_mask(n, m))).is_zero());
  // d splits into mu + del + dbar + mubar.
  for (uint32_t m = 0; m < 16; ++m) {
    const Form x = Form::from_mask(n, m);
    CHECK(eqs.d(x) == eqs.mu(x) + eqs.del(x) + eqs.dbar(x) + eqs.mubar(x));
  }
}

TEST_CASE("Nijenhuis tensor and integrability") {
  const Scalar a = Scalar::a();
  const LieAlgebra kt = models::kodaira_thurston();
  const ACStructure j = models::kodaira_thurston_j(a);
  const NijenhuisTensor nt = nijenhuis(kt, j);
  CHECK(nt.at(1, 3) == Vector{0, 0, a * a, 0});
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) {
      Vector neg = nt.at(y, x);
      for (auto& v : neg) v = -v;
      CHECK(nt.at(x, y) == neg);
      // N(JX, Y) = -J N(X, Y), expanded on the basis.
      const Vector jx = j.apply(unit(4, x));
      Vector lhs(4);
      for (int c = 0; c < 4; ++c)
        for (int k = 0; k < 4; ++k) lhs[k] += jx[c] * nt.at(c, y)[k];
      Vector rhs = j.apply(nt.at(x, y));
      for (auto& v : rhs) v = -v;
      CHECK(lhs == rhs);
    }
  CHECK_FALSE(is_integrable(kt, j));
  CHECK(is_integrable(kt, models::kodaira_thurston_integrable_j()));
  CHECK(nijenhuis(kt, models::kodaira_thurston_integrable_j()).is_zero());
  CHECK(is_integrable(LieAlgebra::abelian(4), ACStructure::standard(2)));
}
