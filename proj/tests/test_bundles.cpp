#include "doctest.h"
#include "support.hpp"

#include "acx/bundles.hpp"

using namespace acx;

namespace {

Matrix cayley(const Matrix& k) {
  const Matrix id = Matrix::identity(k.rows());
  return (id - k) * (id + k).inverse();
}

}  // namespace

TEST_CASE("canonical bundle connection forms") {
  const Scalar a = Scalar::a();
  const LieComplex kt = models::kodaira_thurston_complex(a, 0);
  CHECK(canonical_dbar(kt, 1).beta == (a / 4) * Form::phibar(2, 1));
  CHECK(canonical_dbar(kt, 3).beta == (3 * a / 4) * Form::phibar(2, 1));
  const Form beta1 = canonical_dbar(kt, 1).beta;
  for (int m = 1; m <= 12; ++m) CHECK(canonical_dbar(kt, m).beta == Scalar(m) * beta1);
  CHECK(canonical_dbar(models::complex_torus(2), 1).beta.is_zero());
  CHECK_THROWS_AS(canonical_dbar(kt, 0), std::invalid_argument);
}

TEST_CASE("Hermitian connection and dual structure") {
  const Scalar a = Scalar::a();
  const Form theta = (a / 4) * Form::phibar(2, 1);
  const PseudoholStructure k = PseudoholStructure::line(theta);
  const FormMatrix omega = hermitian_connection(k);
  CHECK(omega[0][0] == (a / 4) * Form::phibar(2, 1) - (a / 4) * Form::phi(2, 1));
  CHECK(is_skew_hermitian(omega));
  CHECK(project_bidegree(omega, 0, 1) == k.theta());
  CHECK(hermitian_connection(PseudoholStructure::trivial(2, 2)) == PseudoholStructure::trivial(2, 2).theta());
  const PseudoholStructure kd = dual_structure(k);
  CHECK(kd.theta(0, 0) == -theta);
  CHECK(dual_structure(kd) == k);
  CHECK(pairing_leibniz_holds(k, kd));
  CHECK_FALSE(pairing_leibniz_holds(k, k));
  CHECK_THROWS_AS(PseudoholStructure::line(Form::phi(2, 1)), std::invalid_argument);
  CHECK_THROWS_AS(PseudoholStructure(2, FormMatrix{{theta}}, Matrix::from_rows({{2}})), std::invalid_argument);
}

TEST_CASE("invariant sections") {
  const Scalar a = Scalar::a();
  const LieComplex kt = models::kodaira_thurston_complex(a, 0);
  for (int m = 1; m <= 4; ++m) CHECK(invariant_sections(kt, canonical_dbar(kt, m).structure(), 0).dimension == 0);
  CHECK(invariant_sections(models::complex_torus(2), canonical_dbar(models::complex_torus(2), 2).structure(), 0).dimension == 1);

  const PseudoholStructure tangent = coframe_bundle(kt, {1, 2});
  CHECK(tangent.theta(1, 0) == (a / 4) * Form::phibar(2, 2));
  CHECK(tangent.theta(1, 1) == (a / 4) * Form::phibar(2, 1));
  CHECK(tangent.theta(0, 0).is_zero());
  // Sections of Lambda^{1,0} agree with dbar-closed (1,0)-forms.
  const SectionSpace s = invariant_sections(kt, tangent, 0);
  CHECK(s.dimension == 1);
  CHECK(invariant_sections(kt, PseudoholStructure::trivial(2, 1), 1).dimension == 1);

  const FormMatrix omega = hermitian_connection(tangent);
  CHECK(is_skew_hermitian(omega));
  CHECK(project_bidegree(omega, 0, 1) == tangent.theta());

  const Scalar i = Scalar::i();
  const Matrix u = cayley(Matrix::from_rows({{i, 1 + i}, {-1 + i, 0}}));
  CHECK(u * u.conj_transpose() == Matrix::identity(2));
  const PseudoholStructure rotated = tangent.change_frame(u);
  for (int p = 0; p <= 2; ++p) CHECK(invariant_sections(kt, rotated, p).dimension == invariant_sections(kt, tangent, p).dimension);
  CHECK(rotated.change_frame(u.conj_transpose()) == tangent);
  CHECK_THROWS_AS(tangent.change_frame(Matrix::from_rows({{1, 1}, {0, 1}})), std::invalid_argument);
}
