#include "acx/torus_models.hpp"

#include <algorithm>

#include "acx/bundles.hpp"
#include "acx/invariant_complex.hpp"

namespace acx {

namespace {

TrigPoly::Frequency negated(TrigPoly::Frequency nu) {
  for (int& v : nu) v = -v;
  return nu;
}

bool is_integer(const mpq_class& q) { return q.get_den() == 1; }

}  // namespace

// ---- TrigPoly ----------------------------------------------------------------------------

TrigPoly TrigPoly::constant(int k, const Scalar& c) { return mode(k, Frequency(k, 0), c); }

TrigPoly TrigPoly::mode(int k, const Frequency& nu, const Scalar& c) {
  if (static_cast<int>(nu.size()) != k) throw std::invalid_argument("frequency vector has the wrong length");
  TrigPoly p(k);
  p.add_term(nu, c);
  return p;
}

TrigPoly TrigPoly::cos_mode(int k, const Frequency& nu) {
  return mode(k, nu, Scalar::rational(1, 2)) + mode(k, negated(nu), Scalar::rational(1, 2));
}

TrigPoly TrigPoly::sin_mode(int k, const Frequency& nu) {
  const Scalar half_i = Scalar::rational(1, 2) * Scalar::i();
  return mode(k, nu, -half_i) + mode(k, negated(nu), half_i);
}

Scalar TrigPoly::coefficient(const Frequency& nu) const {
  auto it = terms_.find(nu);
  return it == terms_.end() ? Scalar() : it->second;
}

bool TrigPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && std::all_of(terms_.begin()->first.begin(), terms_.begin()->first.end(),
                                                               [](int v) { return v == 0; }));
}

bool TrigPoly::is_real() const {
  for (const auto& [nu, c] : terms_)
    if (!(coefficient(negated(nu)) == c.conj())) return false;
  return true;
}

void TrigPoly::add_term(const Frequency& nu, const Scalar& c) {
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(nu, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TrigPoly TrigPoly::operator-() const { return Scalar(-1) * *this; }

TrigPoly& TrigPoly::operator+=(const TrigPoly& o) {
  if (o.k_ != k_) throw std::invalid_argument("trigonometric polynomials on different tori");
  for (const auto& [nu, c] : o.terms_) add_term(nu, c);
  return *this;
}

TrigPoly& TrigPoly::operator-=(const TrigPoly& o) { return *this += -o; }

TrigPoly operator*(const Scalar& c, const TrigPoly& x) {
  TrigPoly r(x.k_);
  for (const auto& [nu, v] : x.terms_) r.add_term(nu, c * v);
  return r;
}

TrigPoly operator*(const TrigPoly& x, const TrigPoly& y) {
  if (x.k_ != y.k_) throw std::invalid_argument("trigonometric polynomials on different tori");
  TrigPoly r(x.k_);
  for (const auto& [nu, c] : x.terms_)
    for (const auto& [mu, d] : y.terms_) {
      TrigPoly::Frequency sum(nu);
      for (size_t j = 0; j < sum.size(); ++j) sum[j] += mu[j];
      r.add_term(sum, c * d);
    }
  return r;
}

TrigPoly TrigPoly::conj() const {
  TrigPoly r(k_);
  for (const auto& [nu, c] : terms_) r.add_term(negated(nu), c.conj());
  return r;
}

TrigPoly TrigPoly::partial(int j) const {
  if (j < 1 || j > k_) throw std::out_of_range("partial derivative index out of range");
  const Scalar two_pi_i = Scalar(2) * Scalar::pi() * Scalar::i();
  TrigPoly r(k_);
  for (const auto& [nu, c] : terms_) r.add_term(nu, two_pi_i * Scalar(nu[j - 1]) * c);
  return r;
}

TrigPoly TrigPoly::d_dw() const { return Scalar::rational(1, 2) * (partial(1) - Scalar::i() * partial(2)); }

TrigPoly TrigPoly::d_dwbar() const { return Scalar::rational(1, 2) * (partial(1) + Scalar::i() * partial(2)); }

std::string TrigPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [nu, c] : terms_) {
    if (!out.empty()) out += " + ";
    out += "(" + c.to_string() + ")*e(";
    for (size_t j = 0; j < nu.size(); ++j) out += (j ? "," : "") + std::to_string(nu[j]);
    out += ")";
  }
  return out;
}

// ---- Kodaira-Thurston ---------------------------------------------------------------------

std::optional<std::pair<long, long>> kt_base_mode(const Scalar& c) {
  // c + pi (i k - l) = 0  <=>  c / pi = l - i k.
  const Scalar r = c / Scalar::pi();
  if (!r.is_constant()) return std::nullopt;
  const GaussRational v = r.constant();
  if (!is_integer(v.re()) || !is_integer(v.im())) return std::nullopt;
  return std::pair<long, long>{-v.im().get_num().get_si(), v.re().get_num().get_si()};
}

namespace {

// Reading coefficients off the invariant structure equations: dbar g = dg/dwbar phibar1 + V(g) phibar2.
Scalar phibar_coefficient(const Form& f, int j) { return f.coefficient(Form::mask(f.n(), {}, {j})); }

LieComplex kt_complex(const PiParam& a) { return models::kodaira_thurston_complex(a.value(), 0); }

}  // namespace

std::optional<std::pair<long, long>> kt_plurigenus_mode(const PiParam& a, int m) {
  if (m < 1) throw std::invalid_argument("plurigenus index must be at least 1");
  const CanonicalPower k = canonical_dbar(kt_complex(a), m);
  // dbar_m(f vol^m) = 0 splits into V(f) = 0, which forces f to be constant on the (y, z) fibers
  // (maximum principle for Vbar V), and df/dwbar + c f = 0 on the base.
  if (!phibar_coefficient(k.beta, 2).is_zero()) throw std::logic_error("unexpected fiber component in beta_m");
  return kt_base_mode(phibar_coefficient(k.beta, 1));
}

int kt_plurigenus(const PiParam& a, int m) { return kt_plurigenus_mode(a, m) ? 1 : 0; }

KtIrregularityTrace kt_irregularity_trace(const PiParam& a) {
  const LieComplex complex = kt_complex(a);
  // dbar(g1 phi1 + g2 phi2) = 0  <=>  dbar g_j + sum_i g_i theta_i^j = 0.
  const PseudoholStructure ps = coframe_bundle(complex, {1, 2});
  if (!ps.theta(0, 0).is_zero() || !ps.theta(0, 1).is_zero()) throw std::logic_error("dbar phi1 is expected to vanish");
  const Form& t22 = ps.theta(1, 1);
  const Form& t21 = ps.theta(1, 0);
  if (!phibar_coefficient(t22, 2).is_zero() || !phibar_coefficient(t21, 1).is_zero())
    throw std::logic_error("unexpected shape of the coframe connection");

  KtIrregularityTrace trace;
  // j = 2: V(g2) = 0 (so g2 lives on the base) and dg2/dwbar + c g2 = 0, the pluricanonical mode equation.
  trace.g2_mode = kt_base_mode(phibar_coefficient(t22, 1));
  // j = 1: dg1/dwbar = 0 makes g1 a fiber function; Vbar applied to V(g1) + c' g2 = 0 gives
  // Vbar V g1 = 0, so g1 is constant.
  trace.g1_dimension = 1;
  // With g1 constant, the remaining equation is c' g2 = 0.
  const Scalar c_prime = phibar_coefficient(t21, 2);
  trace.g2_dimension = trace.g2_mode && c_prime.is_zero() ? 1 : 0;
  return trace;
}

int kt_irregularity(const PiParam& a) { return kt_irregularity_trace(a).dimension(); }

// ---- four-torus ----------------------------------------------------------------------------

TrigPoly t4_obstruction(const TrigPoly& alpha, const TrigPoly& beta) {
  if (alpha.k() != beta.k() || alpha.k() < 2) throw std::invalid_argument("alpha and beta must live on the same torus of dimension >= 2");
  if (!alpha.is_real() || !beta.is_real()) throw std::invalid_argument("alpha and beta must be real");
  return (beta + Scalar::i() * alpha).d_dwbar().d_dw();
}

namespace {

// Complex torus with the constant structure J(alpha, beta); its holomorphic functions are constant,
// so invariant sections are all sections.
enum class T4Branch { Obstructed, Constant };

T4Branch t4_branch(const TrigPoly& alpha, const TrigPoly& beta) {
  if (!t4_obstruction(alpha, beta).is_zero()) return T4Branch::Obstructed;
  if (alpha.is_constant() && beta.is_constant()) return T4Branch::Constant;
  throw OutsideDerivationError("derivation does not cover this input: the obstruction vanishes but alpha, beta are not constant");
}

}  // namespace

LieComplex t4_constant_complex(const TrigPoly& alpha, const TrigPoly& beta) {
  if (!alpha.is_constant() || !beta.is_constant()) throw OutsideDerivationError("alpha and beta are not constant");
  const Scalar a = alpha.coefficient(TrigPoly::Frequency(alpha.k(), 0));
  const Scalar b = beta.coefficient(TrigPoly::Frequency(beta.k(), 0));
  const Matrix j = Matrix::from_rows({{0, -1, a, b}, {1, 0, -b, a}, {0, 0, 0, 1}, {0, 0, -1, 0}});
  const LieAlgebra alg = LieAlgebra::abelian(4);
  return LieComplex(alg, build_coframe(alg, ACStructure(j)));
}

int t4_plurigenus(const TrigPoly& alpha, const TrigPoly& beta, int m) {
  if (m < 1) throw std::invalid_argument("plurigenus index must be at least 1");
  if (t4_branch(alpha, beta) == T4Branch::Obstructed) return 0;
  const LieComplex complex = t4_constant_complex(alpha, beta);
  return invariant_sections(complex, canonical_dbar(complex, m).structure(), 0).dimension;
}

int t4_irregularity(const TrigPoly& alpha, const TrigPoly& beta) {
  // Obstructed: g1 = 0 by the plurigenus argument, then g2 is holomorphic, hence constant.
  if (t4_branch(alpha, beta) == T4Branch::Obstructed) return 1;
  const LieComplex complex = t4_constant_complex(alpha, beta);
  return invariant_sections(complex, PseudoholStructure::trivial(2, 1), 1).dimension;
}

// ---- profiles -------------------------------------------------------------------------------

std::string Interval::to_string() const {
  return exact() ? std::to_string(lo) : "[" + std::to_string(lo) + "," + std::to_string(hi) + "]";
}

Interval rr_plurigenus(int genus, int m) {
  if (genus < 2) throw std::invalid_argument("genus must be at least 2");
  if (m < 1) throw std::invalid_argument("plurigenus index must be at least 1");
  if (m == 1) return {genus - 1, genus};
  const long v = static_cast<long>(2 * m - 1) * (genus - 1);
  return {v, v};
}

PlurigeneraProfile::PlurigeneraProfile(std::vector<Interval> values) : values_(std::move(values)) {
  if (values_.empty()) throw std::invalid_argument("empty plurigenera profile");
  for (const Interval& v : values_)
    if (v.lo < 0 || v.hi < v.lo) throw std::invalid_argument("invalid plurigenus interval " + v.to_string());

  if (std::all_of(values_.begin(), values_.end(), [](const Interval& v) { return v.hi == 0; })) {
    growth_ = Growth::AllZero;
    return;
  }
  const int big_m = max_m();
  const int start = (big_m + 1) / 2;  // ceil(M/2), 1-based
  std::vector<long> tail;
  for (int m = start; m <= big_m; ++m) {
    if (!at(m).exact()) {
      refusal_ = "tail value P_" + std::to_string(m) + " is only known as an interval";
      return;
    }
    tail.push_back(at(m).lo);
  }
  const int len = static_cast<int>(tail.size());
  if (std::all_of(tail.begin(), tail.end(), [&](long v) { return v == tail[0]; })) {
    if (tail[0] == 0) {
      refusal_ = "tail vanishes after nonzero values";
      return;
    }
    growth_ = Growth::Bounded;
    return;
  }
  for (int p = 1; 2 * p <= len; ++p) {
    bool periodic = true;
    for (int i = 0; i + p < len && periodic; ++i) periodic = tail[i + p] == tail[i];
    if (periodic) {
      growth_ = Growth::Bounded;
      return;
    }
  }
  std::vector<long> diff = tail;
  for (int d = 1; static_cast<int>(diff.size()) >= 3; ++d) {
    for (size_t i = 0; i + 1 < diff.size(); ++i) diff[i] = diff[i + 1] - diff[i];
    diff.pop_back();
    if (std::all_of(diff.begin(), diff.end(), [&](long v) { return v == diff[0]; }) && diff[0] != 0) {
      if (diff[0] < 0) break;
      growth_ = Growth::Polynomial;
      degree_ = d;
      return;
    }
  }
  refusal_ = "tail is neither periodic nor polynomial";
}

PlurigeneraProfile PlurigeneraProfile::exact(const std::vector<long>& values) {
  std::vector<Interval> v;
  v.reserve(values.size());
  for (long x : values) v.push_back({x, x});
  return PlurigeneraProfile(std::move(v));
}

Growth PlurigeneraProfile::growth() const {
  if (refusal_) throw OutsideDerivationError("cannot classify plurigenera: " + *refusal_);
  return growth_;
}

int PlurigeneraProfile::degree() const {
  growth();
  return degree_;
}

PlurigeneraProfile kunneth(const PlurigeneraProfile& x, const PlurigeneraProfile& y) {
  if (x.max_m() != y.max_m()) throw std::invalid_argument("profiles have different lengths");
  std::vector<Interval> v;
  for (int m = 1; m <= x.max_m(); ++m) v.push_back({x.at(m).lo * y.at(m).lo, x.at(m).hi * y.at(m).hi});
  return PlurigeneraProfile(std::move(v));
}

KodairaDimension operator+(const KodairaDimension& x, const KodairaDimension& y) {
  if (x.minus_infinity || y.minus_infinity) return {};
  return KodairaDimension::of(x.value + y.value);
}

std::string KodairaDimension::to_string() const { return minus_infinity ? "-inf" : std::to_string(value); }

KodairaDimension kodaira_dimension(const PlurigeneraProfile& profile) {
  switch (profile.growth()) {
    case Growth::AllZero:
      return {};
    case Growth::Bounded:
      return KodairaDimension::of(0);
    case Growth::Polynomial:
      return KodairaDimension::of(profile.degree());
  }
  throw std::logic_error("unknown growth class");
}

namespace presets {

int kt_profile_length(const PiParam& a) {
  if (a.is_generic()) return kDefaultProfileLength;
  // P_m = 1 iff m q / 4 is an integer, i.e. iff den(q/4) divides m.
  const mpq_class quarter = a.q() / 4;
  const long period = mpz_class(quarter.get_den()).get_si();
  return std::max<long>(kDefaultProfileLength, 4 * period);
}

PlurigeneraProfile kodaira_thurston(const PiParam& a, int max_m) {
  std::vector<long> v;
  for (int m = 1; m <= max_m; ++m) v.push_back(kt_plurigenus(a, m));
  return PlurigeneraProfile::exact(v);
}

PlurigeneraProfile torus(int max_m) {
  const LieComplex complex = models::complex_torus(1);
  std::vector<long> v;
  for (int m = 1; m <= max_m; ++m) v.push_back(invariant_sections(complex, canonical_dbar(complex, m).structure(), 0).dimension);
  return PlurigeneraProfile::exact(v);
}

PlurigeneraProfile riemann_surface(int genus, int max_m) {
  std::vector<Interval> v;
  for (int m = 1; m <= max_m; ++m) {
    const Interval rr = rr_plurigenus(genus, m);
    v.push_back(m == 1 ? Interval{genus, genus} : rr);
  }
  return PlurigeneraProfile(std::move(v));
}

PlurigeneraProfile torus_times_surface(int genus, int max_m) {
  std::vector<Interval> v;
  for (int m = 1; m <= max_m; ++m) v.push_back(rr_plurigenus(genus, m));
  return PlurigeneraProfile(std::move(v));
}

}  // namespace presets

std::vector<DeformationRow> kt_deformation_table(const std::vector<PiParam>& values) {
  std::vector<DeformationRow> rows;
  for (const PiParam& a : values) rows.push_back({a, kt_plurigenus(a, 1)});
  return rows;
}

}  // namespace acx
