#include "acx/hodge.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace acx {

namespace {

Scalar power_of_two(int e) {
  mpq_class v(1);
  if (e >= 0)
    v = mpq_class(mpz_class(1) << e);
  else
    v = mpq_class(mpz_class(1), mpz_class(1) << -e);
  return Scalar(GaussRational(v));
}

Scalar minus_i_power(int n) {
  static const Scalar values[4] = {Scalar(1), -Scalar::i(), Scalar(-1), Scalar::i()};
  return values[n % 4];
}

int permutation_sign(const std::vector<int>& seq) {
  int inversions = 0;
  for (size_t a = 0; a < seq.size(); ++a)
    for (size_t b = a + 1; b < seq.size(); ++b)
      if (seq[a] > seq[b]) ++inversions;
  return inversions % 2 == 0 ? 1 : -1;
}

std::vector<int> indices(uint32_t bits) {
  std::vector<int> out;
  for (; bits != 0; bits &= bits - 1) out.push_back(std::countr_zero(bits));
  return out;
}

/// Applies f to each bidegree component separately.
template <class F>
Form by_bidegree(const Form& x, F f) {
  std::map<std::pair<int, int>, Form> parts;
  for (const auto& [m, c] : x.terms()) {
    auto [it, inserted] = parts.try_emplace(Form::bidegree(x.n(), m), x.n());
    it->second.add_term(m, c);
  }
  Form out(x.n());
  for (const auto& [pq, part] : parts) out += f(part);
  return out;
}

Form star_monomial(int n, uint32_t m, const Scalar& c) {
  const uint32_t full = (1U << n) - 1;
  const uint32_t alpha = m & full;
  const uint32_t beta = m >> n;
  const uint32_t beta_hat = full & ~beta;
  const uint32_t alpha_hat = full & ~alpha;
  const int p = std::popcount(alpha);
  const int q = std::popcount(beta);
  // Target slots: index i unprimed -> 2i, primed -> 2i + 1.
  std::vector<int> seq;
  for (int i : indices(alpha)) seq.push_back(2 * i);
  for (int j : indices(beta)) seq.push_back(2 * j + 1);
  for (int j : indices(beta_hat)) seq.push_back(2 * j + 1);
  for (int i : indices(alpha_hat)) seq.push_back(2 * i);
  const Scalar coef = power_of_two(p + q - n) * minus_i_power(n) * Scalar(permutation_sign(seq));
  return Form::from_mask(n, beta_hat | (alpha_hat << n), c * coef);
}

Form wedge_theta(const Form& x, const Form& theta) {
  Form out(x.n());
  for (const auto& [m, c] : x.terms()) {
    const Form w = wedge(Form::from_mask(x.n(), m, c), theta);
    out += std::popcount(m) % 2 != 0 ? -w : w;
  }
  return out;
}

void require_stokes(const InvariantComplex& complex) {
  if (!complex.stokes_holds())
    throw NonUnimodularError("invariant Stokes fails (non-unimodular algebra); the invariant adjoint is not defined");
}

std::vector<uint32_t> collect_masks(const std::vector<Form>& forms) {
  std::vector<uint32_t> keys;
  for (const Form& f : forms)
    for (const auto& [m, c] : f.terms()) keys.push_back(m);
  std::sort(keys.begin(), keys.end());
  keys.erase(std::unique(keys.begin(), keys.end()), keys.end());
  return keys;
}

/// Matrix whose columns are the coefficient vectors of the given forms (stacked blocks).
Matrix coefficient_matrix(const std::vector<std::vector<Form>>& blocks, int cols) {
  std::vector<std::vector<uint32_t>> keys;
  int rows = 0;
  for (const auto& block : blocks) {
    keys.push_back(collect_masks(block));
    rows += static_cast<int>(keys.back().size());
  }
  Matrix a(rows, cols);
  int offset = 0;
  for (size_t b = 0; b < blocks.size(); ++b) {
    for (int col = 0; col < cols; ++col)
      for (size_t r = 0; r < keys[b].size(); ++r) a(offset + static_cast<int>(r), col) = blocks[b][col].coefficient(keys[b][r]);
    offset += static_cast<int>(keys[b].size());
  }
  return a;
}

Form combine(const std::vector<Form>& basis, const Vector& v, int n) {
  Form out(n);
  for (size_t k = 0; k < basis.size(); ++k)
    if (!v[k].is_zero()) out += v[k] * basis[k];
  return out;
}

int span_rank(const std::vector<Form>& forms) {
  if (forms.empty()) return 0;
  return coefficient_matrix({forms}, static_cast<int>(forms.size())).rank();
}

std::vector<Form> harmonic_component(const InvariantComplex& complex, const std::vector<Form>& basis, const Form& theta) {
  const int cols = static_cast<int>(basis.size());
  if (cols == 0) return {};
  std::vector<Form> lap;
  std::vector<Form> db;
  std::vector<Form> dbs;
  for (const Form& b : basis) {
    db.push_back(dbar_e(complex, theta, b));
    dbs.push_back(dbar_star(complex, theta, b));
    lap.push_back(dbar_e(complex, theta, dbs.back()) + dbar_star(complex, theta, db.back()));
  }
  std::vector<Form> by_laplacian;
  for (const Vector& v : coefficient_matrix({lap}, cols).kernel()) by_laplacian.push_back(combine(basis, v, complex.n()));
  std::vector<Form> by_pair;
  for (const Vector& v : coefficient_matrix({db, dbs}, cols).kernel()) by_pair.push_back(combine(basis, v, complex.n()));
  std::vector<Form> both = by_laplacian;
  both.insert(both.end(), by_pair.begin(), by_pair.end());
  if (by_laplacian.size() != by_pair.size() || span_rank(both) != static_cast<int>(by_pair.size()))
    throw std::logic_error("Laplacian kernel differs from ker dbar cap ker dbar*");
  return by_pair;
}

}  // namespace

Form volume_form(int n) {
  Form v = Form::constant(n, 1);
  const Scalar half_i = Scalar::i() / 2;
  for (int j = 1; j <= n; ++j) v = half_i * wedge(wedge(v, Form::phi(n, j)), Form::phibar(n, j));
  return v;
}

Scalar hermitian_product(const Form& x, const Form& y) {
  if (x.n() != y.n()) throw std::invalid_argument("form dimension mismatch");
  Scalar out;
  for (const auto& [m, c] : x.terms()) {
    auto it = y.terms().find(m);
    if (it != y.terms().end()) out += power_of_two(std::popcount(m)) * c * it->second.conj();
  }
  return out;
}

Scalar top_coefficient(const Form& x) { return x.coefficient((1U << (2 * x.n())) - 1); }

Form star(const Form& x) {
  if (!x.is_zero() && !x.bidegree()) throw std::invalid_argument("star needs a form of pure bidegree");
  Form out(x.n());
  for (const auto& [m, c] : x.terms()) out += star_monomial(x.n(), m, c);
  return out;
}

Form star_by_duality(const Form& x) {
  if (!x.is_zero() && !x.bidegree()) throw std::invalid_argument("star needs a form of pure bidegree");
  const int n = x.n();
  const uint32_t full = (1U << n) - 1;
  const Scalar dv = top_coefficient(volume_form(n));
  Form out(n);
  for (const auto& [m, c] : x.terms()) {
    const uint32_t target = (full & ~(m >> n)) | ((full & ~(m & full)) << n);
    // y ^ conj(k * target) = h(y, y) dV fixes k.
    const Scalar s = top_coefficient(wedge(Form::from_mask(n, m), conjugate(Form::from_mask(n, target))));
    const Scalar k = (power_of_two(std::popcount(m)) * dv / s).conj();
    out.add_term(target, c * k);
  }
  return out;
}

Form dbar_e(const InvariantComplex& complex, const Form& theta, const Form& x) {
  return complex.dbar(x) + wedge_theta(x, theta);
}

Form nabla10_e(const InvariantComplex& complex, const Form& theta, const Form& x) {
  return complex.del(x) - wedge_theta(x, conjugate(theta));
}

Form dbar_star(const InvariantComplex& complex, const Form& theta, const Form& x) {
  return by_bidegree(x, [&](const Form& part) {
    const Form inner = nabla10_e(complex, theta, star(part));
    return -by_bidegree(inner, [](const Form& y) { return star(y); });
  });
}

Form laplacian(const InvariantComplex& complex, const Form& theta, const Form& x) {
  return dbar_e(complex, theta, dbar_star(complex, theta, x)) + dbar_star(complex, theta, dbar_e(complex, theta, x));
}

HarmonicSpace invariant_harmonic_space(const InvariantComplex& complex, int p, int q, const Form& theta) {
  require_stokes(complex);
  if (theta.n() != complex.n()) throw std::invalid_argument("bundle form has the wrong dimension");
  const std::vector<Form> basis = complex.section_basis(p, q);
  HarmonicSpace out;
  auto add = [&](std::vector<int> character, const Form& total) {
    std::vector<Form> h = harmonic_component(complex, basis, total);
    if (h.empty()) return;
    out.dimension += static_cast<int>(h.size());
    out.components.push_back({std::move(character), std::move(h)});
  };
  if (const auto& lattice = complex.characters()) {
    for (const auto& v : lattice->enumerate()) add(v, theta + lattice->twist(v));
  } else {
    add({}, theta);
  }
  return out;
}

HarmonicSpace invariant_harmonic_space(const InvariantComplex& complex, int p, int q) {
  return invariant_harmonic_space(complex, p, q, Form(complex.n()));
}

SerreReport serre_pairing_check(const InvariantComplex& complex, int p, int q, const Form& theta) {
  const int n = complex.n();
  const HarmonicSpace h = invariant_harmonic_space(complex, p, q, theta);
  const HarmonicSpace dual = invariant_harmonic_space(complex, n - p, n - q, -theta);
  SerreReport r;
  r.dimension = h.dimension;
  r.dual_dimension = dual.dimension;
  r.maps_into_dual = true;
  r.pairing_nonsingular = true;
  for (const auto& comp : h.components) {
    std::vector<int> opposite = comp.character;
    for (int& v : opposite) v = -v;
    auto it = std::find_if(dual.components.begin(), dual.components.end(),
                           [&](const HarmonicComponent& c) { return c.character == opposite; });
    if (it == dual.components.end()) {
      r.maps_into_dual = false;
      r.pairing_nonsingular = false;
      continue;
    }
    std::vector<Form> images;
    for (const Form& s : comp.basis) images.push_back(conjugate(star(s)));
    std::vector<Form> joint = it->basis;
    joint.insert(joint.end(), images.begin(), images.end());
    if (span_rank(images) != static_cast<int>(images.size()) || span_rank(joint) != static_cast<int>(it->basis.size()))
      r.maps_into_dual = false;
    const int k = static_cast<int>(comp.basis.size());
    if (static_cast<int>(it->basis.size()) != k) {
      r.pairing_nonsingular = false;
      continue;
    }
    Matrix pairing(k, k);
    for (int a = 0; a < k; ++a)
      for (int b = 0; b < k; ++b) pairing(a, b) = top_coefficient(wedge(comp.basis[a], it->basis[b]));
    if (pairing.rank() != k) r.pairing_nonsingular = false;
  }
  return r;
}

}  // namespace acx
