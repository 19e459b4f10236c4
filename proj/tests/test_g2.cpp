#include <algorithm>

#include "doctest.h"
#include "support.hpp"

#include "acx/g2_sphere.hpp"

using namespace acx;
using namespace acx::g2;

namespace {

G2Element named(const std::string& name) {
  const auto& names = basis_names();
  return basis()[std::find(names.begin(), names.end(), name) - names.begin()];
}

G2Element combo(std::initializer_list<std::pair<const char*, long>> terms) {
  Vector c(14);
  for (const auto& [name, k] : terms) {
    const Vector v = named(name).coordinates();
    for (int i = 0; i < 14; ++i) c[i] += Scalar(k) * v[i];
  }
  return G2Element::from_coordinates(c);
}

bool is_identity_on_complement(const Matrix& j2, int u) {
  for (int k = 0; k < 7; ++k) {
    if (k == u) continue;
    for (int i = 0; i < 7; ++i)
      if (!(j2(i, k) == Scalar(i == k ? -1 : 0))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("g2 matrices") {
  const std::vector<G2Element> b = basis();
  CHECK(b.size() == 14);
  const Matrix f1 = b[0].matrix();
  CHECK(f1(0, 1) == Scalar(1));
  CHECK(f1(1, 0) == Scalar(-1));
  CHECK(f1(3, 6) == Scalar(1));
  CHECK(f1(6, 3) == Scalar(-1));
  for (const G2Element& e : b) {
    CHECK(satisfies_membership(e.matrix()));
    CHECK(preserves_phi(e.matrix()));
    CHECK(G2Element::from_matrix(e.matrix()) == e);
  }
  Matrix outside(7, 7);
  outside(0, 1) = 1;
  outside(1, 0) = -1;
  outside(2, 3) = 1;
  outside(3, 2) = -1;
  CHECK_FALSE(satisfies_membership(outside));
  CHECK_THROWS_AS(G2Element::from_matrix(outside), std::invalid_argument);
  CHECK_FALSE(satisfies_membership(Matrix::identity(7)));
}

TEST_CASE("g2 epsilon") {
  CHECK(epsilon(0, 1, 2) == 1);
  CHECK(epsilon(1, 0, 2) == -1);
  CHECK(epsilon(1, 4, 6) == -1);
  CHECK(epsilon(6, 4, 1) == 1);
  CHECK(epsilon(0, 0, 1) == 0);
  int nonzero = 0;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k) nonzero += epsilon(i, j, k) != 0;
  CHECK(nonzero == 42);
}

TEST_CASE("g2 brackets") {
  CHECK(bracket(named("f1"), named("f2")) == combo({{"h1", 1}, {"h2", 1}}));
  CHECK(bracket(named("f3"), named("f6")) == combo({{"f1", 2}}));
  CHECK(bracket(named("h1"), named("h2")) == combo({}));
  // Antisymmetry of the recomputed structure constants.
  const LieAlgebra alg = algebra();
  CHECK(alg.dim() == 14);
  for (int i = 0; i < 14; ++i)
    for (int j = 0; j < 14; ++j) {
      const Vector x = alg.basis_bracket(i, j);
      const Vector y = alg.basis_bracket(j, i);
      for (int k = 0; k < 14; ++k) CHECK(x[k] == -y[k]);
    }
  // g2 is simple, hence unimodular.
  CHECK(alg.is_unimodular());
}

TEST_CASE("g2 bracket table") {
  const BracketTableReport r = verify_bracket_table();
  CHECK(r.pairs_listed == 76);
  CHECK(r.table.entries.size() == 76);
  CHECK(r.table.diffs().empty());
  CHECK(r.jacobi_triples == 364);
  CHECK(r.jacobi_failures == 0);
  CHECK(r.h_closed);
  CHECK(r.passed());
}

TEST_CASE("g2 membership sampling") {
  const MembershipSample s = random_membership_check(7, 100, 10);
  CHECK(s.members == 100);
  CHECK(s.outsiders == 10);
  CHECK(s.passed());
}

TEST_CASE("octonionic cross product") {
  const Vec7 e1 = unit_vector(0);
  CHECK(cross(e1, unit_vector(5)) == unit_vector(6));
  CHECK(cross(e1, unit_vector(1)) == unit_vector(2));
  for (int i = 0; i < 7; ++i) CHECK(cross(unit_vector(i), unit_vector(i)) == Vec7{});

  const Matrix j1 = j_at_point(e1);
  Vector e4(7);
  e4[3] = 1;
  Vector e5(7);
  e5[4] = 1;
  CHECK(j1 * e4 == e5);
  CHECK(is_identity_on_complement(j1 * j1, 0));
  const Matrix j2 = j_at_point(unit_vector(1));
  CHECK(is_identity_on_complement(j2 * j2, 1));

  Vec7 not_unit = unit_vector(0);
  not_unit[1] = 1;
  CHECK_THROWS_AS(j_at_point(not_unit), std::invalid_argument);
  // A rational unit vector off the axes.
  Vec7 u;
  u[0] = Scalar(3) / Scalar(5);
  u[1] = Scalar(4) / Scalar(5);
  Matrix ju = j_at_point(u);
  Matrix sq = ju * ju;
  for (int k = 0; k < 7; ++k) {
    Vec7 v = unit_vector(k);
    // project onto u-perp
    const Scalar c = dot(u, v);
    for (int i = 0; i < 7; ++i) v[i] -= c * u[i];
    const Vector image = sq * Vector(v.begin(), v.end());
    for (int i = 0; i < 7; ++i) CHECK(image[i] == -v[i]);
  }
}

TEST_CASE("g2 structure checks") {
  const G2StructureChecks s = structure_checks();
  CHECK(s.span_rank == 14);
  CHECK(s.basis_members);
  CHECK(s.basis_preserves_phi);
  CHECK(s.cross_identities);
  CHECK(s.dp_values);
  CHECK(s.dp_kernel_dimension == 8);
  CHECK(s.pseudoholomorphic);
  Vec7 minus_e2;
  minus_e2[1] = -1;
  CHECK(dp(named("f1")) == minus_e2);
  CHECK(dp(named("h3")) == Vec7{});
}

TEST_CASE("S6 basic complex") {
  const SphereComplex s;
  // Dimension of invariant forms on S6 = (Lambda m*)^SU(3) by bidegree.
  CHECK(s.section_basis(0, 0).size() == 1);
  CHECK(s.section_basis(1, 0).size() == 0);
  CHECK(s.section_basis(1, 1).size() == 1);
  CHECK(s.section_basis(3, 0).size() == 1);
  CHECK(s.section_basis(0, 3).size() == 1);
  CHECK(s.section_basis(2, 2).size() == 1);
  CHECK(s.section_basis(3, 3).size() == 1);
  const Form vol = Form::monomial(3, {1, 2, 3}, {});
  CHECK(SphereComplex::project(SphereComplex::lift(vol)) == vol);
  CHECK_THROWS_AS(SphereComplex::project(Form::phi(7, 4)), std::logic_error);
  CHECK_THROWS_AS(SphereComplex::lift(Form::phi(7, 1)), std::invalid_argument);
  CHECK(s.dbar(vol).is_zero());
  // d of the Kaehler-type (1,1)-form is a nonzero combination of the (3,0) and (0,3) generators.
  const Form omega = s.section_basis(1, 1)[0];
  CHECK_FALSE(s.d(omega).is_zero());
}

TEST_CASE("S6 structure equations") {
  const StructurePackage p = s6_structure_package();
  CHECK(p.coframe.diffs().empty());
  CHECK(p.real_d.diffs().empty());
  CHECK(p.dbar_phi.diffs().empty());
  CHECK(p.dbar_20.diffs().empty());
  CHECK(p.dbar_volume_zero);
  CHECK(p.dbar_volume_zero_printed);
  CHECK(p.basic_volume_closed);
  CHECK(p.passed());
}

TEST_CASE("S6 reduction brackets") {
  const IdentityReport r = verify_reduction_brackets();
  CHECK(r.passed());
  const auto diffs = r.diffs();
  REQUIRE(diffs.size() == 1);
  CHECK(diffs[0].label == "[Xbar2,Xbar7]");
  CHECK(diffs[0].computed == "i*Xbar3");
  CHECK(diffs[0].preregistered);
  // An unregistered mismatch fails the report.
  IdentityReport tampered = r;
  tampered.entries.push_back({"[X1,X1]", "X2", "0", false, false});
  CHECK_FALSE(tampered.passed());
}

TEST_CASE("S6 invariant Hodge numbers") {
  const SphereHodgeReport h = s6_hodge_report(8);
  CHECK(h.h10 == 0);
  CHECK(h.h20 == 0);
  CHECK(h.h10_span == 0);
  CHECK(h.h20_span == 0);
  CHECK(h.plurigenera == std::vector<int>(8, 1));
  CHECK(h.kappa == KodairaDimension::of(0));
  CHECK(h.h13 == 0);
  CHECK(h.h23 == 0);
  CHECK(h.serre_20.holds());
  CHECK(h.serre_10.holds());
  CHECK(h.coframe_bundle_sections == 0);
  CHECK(h.connection_ok);
}

TEST_CASE("S6 harmonic forms in every bidegree") {
  // dbar and dbar* act on whole invariant forms; single monomials are not basic.
  const SphereComplex s;
  const int expected[4][4] = {{1, 0, 0, 1}, {0, 1, 0, 0}, {0, 0, 1, 0}, {1, 0, 0, 1}};
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) CHECK(invariant_harmonic_space(s, p, q).dimension == expected[p][q]);
}
