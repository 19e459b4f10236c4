#include <numeric>

#include "doctest.h"
#include "support.hpp"

#include "acx/hodge.hpp"
#include "acx/torus_models.hpp"

using namespace acx;

namespace {

PiParam q_pi(long p, long r) { return PiParam::rational_pi(mpq_class(p, r)); }

// Closed form: P_m = 1 iff m q / 4 is an integer.
int kt_closed_form(const mpq_class& q, int m) {
  const mpq_class v = q * m / 4;
  return v.get_den() == 1 ? 1 : 0;
}

TrigPoly paper_alpha() { return TrigPoly::cos_mode(4, {1, 1, 0, 0}); }
TrigPoly paper_beta() { return TrigPoly::sin_mode(4, {1, 1, 0, 0}); }

}  // namespace

TEST_CASE("trigonometric polynomial arithmetic") {
  const TrigPoly c = TrigPoly::cos_mode(2, {1, 0});
  const TrigPoly s = TrigPoly::sin_mode(2, {1, 0});
  CHECK(c.is_real());
  CHECK(s.is_real());
  CHECK_FALSE(TrigPoly::mode(2, {1, 0}).is_real());
  // cos^2 + sin^2 = 1
  CHECK(c * c + s * s == TrigPoly::constant(2, 1));
  // d/dx1 sin(2 pi x1) = 2 pi cos(2 pi x1)
  CHECK(s.partial(1) == (Scalar(2) * Scalar::pi()) * c);
  CHECK(s.partial(2).is_zero());
  CHECK(TrigPoly::cos_mode(2, {0, 0}) == TrigPoly::constant(2, 1));
  CHECK(TrigPoly::sin_mode(2, {0, 0}).is_zero());
  CHECK(c.conj() == c);
  CHECK_THROWS_AS(TrigPoly::mode(2, {1}), std::invalid_argument);
}

TEST_CASE("Kodaira-Thurston plurigenera match the closed form") {
  const std::vector<mpq_class> qs = {4, 2, mpq_class(4, 3), 1, mpq_class(-8, 5), mpq_class(7, 2), mpq_class(39, 10)};
  for (const auto& q : qs)
    for (int m = 1; m <= 12; ++m) CHECK(kt_plurigenus(PiParam::rational_pi(q), m) == kt_closed_form(q, m));
  for (int m = 1; m <= 12; ++m) CHECK(kt_plurigenus(PiParam::generic(), m) == 0);
  CHECK_THROWS_AS(kt_plurigenus(q_pi(4, 1), 0), std::invalid_argument);
  // The section is exp(2 pi i l x) with a = 4 l pi / m.
  const auto mode = kt_plurigenus_mode(q_pi(4, 1), 3);
  REQUIRE(mode);
  CHECK(*mode == std::pair<long, long>{0, 3});
}

TEST_CASE("Kodaira-Thurston plurigenera agree with twisted harmonic sections") {
  const int window = 4;
  for (const auto& [p, r] : std::vector<std::pair<long, long>>{{4, 1}, {2, 1}, {4, 3}, {1, 1}, {-4, 1}}) {
    const PiParam a = q_pi(p, r);
    const LieComplex kt = models::kodaira_thurston_complex(a.value(), window);
    for (int m = 1; m <= 4; ++m) {
      const Form beta = canonical_dbar(kt, m).beta;
      CHECK(invariant_harmonic_space(kt, 0, 0, beta).dimension == kt_plurigenus(a, m));
    }
  }
}

TEST_CASE("Kodaira-Thurston irregularity") {
  for (const PiParam& a : {q_pi(4, 1), q_pi(1, 1), q_pi(-4, 1), q_pi(7, 3), PiParam::generic()}) {
    const KtIrregularityTrace t = kt_irregularity_trace(a);
    CHECK(t.g1_dimension == 1);
    CHECK(t.g2_dimension == 0);
    CHECK(kt_irregularity(a) == 1);
  }
  CHECK(kt_irregularity_trace(q_pi(4, 1)).g2_mode.has_value());
  CHECK_FALSE(kt_irregularity_trace(q_pi(1, 1)).g2_mode.has_value());
  const LieComplex kt = models::kodaira_thurston_complex(Scalar::pi() * 4, 3);
  CHECK(invariant_harmonic_space(kt, 1, 0).dimension == 1);
}

TEST_CASE("four-torus obstruction") {
  const TrigPoly obs = t4_obstruction(paper_alpha(), paper_beta());
  // beta + i alpha = i exp(-2 pi i (x1 + x2)); d^2/dw dwbar = (1/4) Laplacian in (x1, x2).
  const Scalar pi2 = Scalar::pi() * Scalar::pi();
  CHECK(obs == TrigPoly::mode(4, {-1, -1, 0, 0}, Scalar(-2) * Scalar::i() * pi2));
  CHECK(t4_obstruction(TrigPoly::constant(4, 3), TrigPoly::constant(4, Scalar::rational(1, 2))).is_zero());
  CHECK(t4_obstruction(TrigPoly(4), TrigPoly::cos_mode(4, {0, 0, 2, -1})).is_zero());
  // Linear over real scalars.
  const TrigPoly other = TrigPoly::cos_mode(4, {0, 1, 1, 0});
  CHECK(t4_obstruction(Scalar(3) * paper_alpha() + other, paper_beta()) ==
        Scalar(3) * t4_obstruction(paper_alpha(), TrigPoly(4)) + t4_obstruction(other, TrigPoly(4)) +
            t4_obstruction(TrigPoly(4), paper_beta()));
  CHECK_THROWS_AS(t4_obstruction(TrigPoly::mode(4, {1, 0, 0, 0}), TrigPoly(4)), std::invalid_argument);
}

TEST_CASE("four-torus plurigenera and irregularity") {
  for (int m = 1; m <= 8; ++m) CHECK(t4_plurigenus(paper_alpha(), paper_beta(), m) == 0);
  CHECK(t4_irregularity(paper_alpha(), paper_beta()) == 1);
  CHECK(t4_plurigenus(TrigPoly(4), TrigPoly(4), 1) == 1);
  CHECK(t4_irregularity(TrigPoly(4), TrigPoly(4)) == 2);
  const TrigPoly half = TrigPoly::constant(4, Scalar::rational(1, 2));
  CHECK(t4_plurigenus(half, half, 3) == 1);
  CHECK(t4_irregularity(half, half) == 2);
  const TrigPoly fiber_only = TrigPoly::cos_mode(4, {0, 0, 1, 0});
  CHECK_THROWS_AS(t4_plurigenus(TrigPoly(4), fiber_only, 1), OutsideDerivationError);
  CHECK_THROWS_AS(t4_irregularity(TrigPoly(4), fiber_only), OutsideDerivationError);
}

TEST_CASE("Riemann-Roch plurigenera") {
  CHECK(rr_plurigenus(2, 2) == Interval{3, 3});
  CHECK(rr_plurigenus(3, 5) == Interval{18, 18});
  CHECK(rr_plurigenus(2, 1) == Interval{1, 2});
  for (int g = 2; g <= 5; ++g)
    for (int m = 2; m <= 10; ++m) CHECK(rr_plurigenus(g, m + 1).lo - rr_plurigenus(g, m).lo == 2 * (g - 1));
  CHECK_THROWS_AS(rr_plurigenus(1, 2), std::invalid_argument);
}

TEST_CASE("profile classification") {
  CHECK(kodaira_dimension(PlurigeneraProfile::exact(std::vector<long>(12, 0))).minus_infinity);
  CHECK(kodaira_dimension(PlurigeneraProfile::exact(std::vector<long>(12, 1))) == KodairaDimension::of(0));
  std::vector<long> cubic;
  for (long m = 1; m <= 12; ++m) cubic.push_back(m * m * m + 2);
  CHECK(kodaira_dimension(PlurigeneraProfile::exact(cubic)) == KodairaDimension::of(3));
  // Periodic: P_m = 1 iff 4 | m.
  std::vector<long> periodic;
  for (long m = 1; m <= 16; ++m) periodic.push_back(m % 4 == 0 ? 1 : 0);
  CHECK(kodaira_dimension(PlurigeneraProfile::exact(periodic)) == KodairaDimension::of(0));
  // Exponential growth is refused.
  std::vector<long> expo;
  for (long m = 1; m <= 12; ++m) expo.push_back(1L << m);
  CHECK_THROWS_AS(kodaira_dimension(PlurigeneraProfile::exact(expo)), OutsideDerivationError);
  std::vector<long> dying(12, 0);
  dying[0] = 1;
  CHECK_THROWS_AS(kodaira_dimension(PlurigeneraProfile::exact(dying)), OutsideDerivationError);
}

TEST_CASE("presets and products") {
  const int big_m = 12;
  const auto kt4 = presets::kodaira_thurston(q_pi(4, 1), big_m);
  const auto ktg = presets::kodaira_thurston(PiParam::generic(), big_m);
  const auto t2 = presets::torus(big_m);
  const auto sigma = presets::riemann_surface(2, big_m);
  const auto ts = presets::torus_times_surface(2, big_m);
  CHECK(kodaira_dimension(kt4) == KodairaDimension::of(0));
  CHECK(kodaira_dimension(ktg).minus_infinity);
  CHECK(kodaira_dimension(t2) == KodairaDimension::of(0));
  CHECK(kodaira_dimension(sigma) == KodairaDimension::of(1));
  CHECK(kodaira_dimension(ts) == KodairaDimension::of(1));
  CHECK(kunneth(kt4, kt4).at(1) == Interval{1, 1});
  CHECK(kunneth(ts, ts).at(2) == Interval{9, 9});
  CHECK(kunneth(ts, ts).at(1) == Interval{1, 4});
  CHECK(kodaira_dimension(kunneth(ts, ktg)).minus_infinity);
  CHECK(kunneth(sigma, ts) == kunneth(ts, sigma));
  CHECK(kunneth(kunneth(sigma, ts), kt4) == kunneth(sigma, kunneth(ts, kt4)));
  CHECK(kodaira_dimension(kunneth(kunneth(ts, sigma), sigma)) == KodairaDimension::of(3));
  CHECK_THROWS_AS(kunneth(kt4, presets::torus(5)), std::invalid_argument);
  CHECK(presets::kt_profile_length(q_pi(1, 3)) == 48);
  CHECK(presets::kt_profile_length(q_pi(4, 1)) == 12);
}

TEST_CASE("P1 jumps across a = 4 pi") {
  const auto rows = kt_deformation_table({q_pi(39, 10), q_pi(4, 1), q_pi(41, 10)});
  REQUIRE(rows.size() == 3);
  CHECK(rows[0].p1 == 0);
  CHECK(rows[1].p1 == 1);
  CHECK(rows[2].p1 == 0);
}
