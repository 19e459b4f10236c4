#include "acx/invariant_complex.hpp"

#include <bit>
#include <cstdlib>
#include <map>
#include <stdexcept>
#include <string>

namespace acx {

Form interior(const Vector& components, const Form& x) {
  const int n = x.n();
  if (static_cast<int>(components.size()) != 2 * n) throw std::invalid_argument("vector has wrong number of components");
  Form out(n);
  for (const auto& [m, c] : x.terms()) {
    int position = 0;
    for (uint32_t rest = m; rest != 0; rest &= rest - 1, ++position) {
      const int b = std::countr_zero(rest);
      if (components[b].is_zero()) continue;
      const Scalar v = c * components[b];
      out.add_term(m & ~(1U << b), position % 2 == 0 ? v : -v);
    }
  }
  return out;
}

Form CharacterLattice::twist(const std::vector<int>& v) const {
  if (v.size() != tau.size()) throw std::invalid_argument("character has wrong rank");
  Form out(tau.empty() ? 0 : tau[0].n());
  for (size_t c = 0; c < v.size(); ++c)
    if (v[c] != 0) out += Scalar(v[c]) * tau[c];
  return out;
}

std::vector<std::vector<int>> CharacterLattice::enumerate() const {
  std::vector<std::vector<int>> out;
  std::vector<int> v(tau.size(), -window);
  while (true) {
    out.push_back(v);
    size_t c = v.size();
    while (c > 0 && v[c - 1] == window) v[--c] = -window;
    if (c == 0) break;
    ++v[c - 1];
  }
  return out;
}

int mode_window_from_env() {
  const char* env = std::getenv("ACX_MODE_WINDOW");
  if (env == nullptr || *env == '\0') return 32;
  try {
    size_t used = 0;
    const int w = std::stoi(env, &used);
    if (used != std::string(env).size() || w < 0) throw std::invalid_argument("bad window");
    return w;
  } catch (const std::exception&) {
    throw std::invalid_argument(std::string("ACX_MODE_WINDOW must be a nonnegative integer, got '") + env + "'");
  }
}

std::vector<Form> InvariantComplex::section_basis(int p, int q) const {
  const int nn = n();
  std::vector<Form> out;
  if (p < 0 || q < 0 || p > nn || q > nn) return out;
  for (uint32_t m = 0; m < (1U << (2 * nn)); ++m)
    if (Form::bidegree(nn, m) == std::pair{p, q}) out.push_back(Form::from_mask(nn, m));
  return out;
}

Form InvariantComplex::shifted(const Form& x, int dp, int dq) const {
  const int nn = n();
  // d is applied to whole bidegree components, so complexes whose d is only defined on invariant
  // forms see invariant inputs.
  std::map<std::pair<int, int>, Form> parts;
  for (const auto& [m, c] : x.terms()) {
    const auto bd = Form::bidegree(nn, m);
    auto it = parts.try_emplace(bd, nn).first;
    it->second.add_term(m, c);
  }
  Form out(nn);
  for (const auto& [bd, part] : parts) {
    if (bd.first + dp > nn || bd.second + dq > nn) continue;
    out += project_bidegree(d(part), bd.first + dp, bd.second + dq);
  }
  return out;
}

Form InvariantComplex::dbar(const Form& x) const { return shifted(x, 0, 1); }
Form InvariantComplex::del(const Form& x) const { return shifted(x, 1, 0); }

bool InvariantComplex::stokes_holds() const {
  const int nn = n();
  const uint32_t top = (1U << (2 * nn)) - 1;
  for (int p = 0; p <= nn; ++p) {
    const int q = 2 * nn - 1 - p;
    if (q < 0 || q > nn) continue;
    for (const Form& s : section_basis(p, q))
      if (!d(s).coefficient(top).is_zero()) return false;
  }
  return true;
}

LieComplex::LieComplex(LieAlgebra alg, ComplexCoframe coframe)
    : alg_(std::move(alg)), coframe_(std::move(coframe)), equations_(alg_, coframe_) {}

void LieComplex::set_characters(const std::vector<Vector>& covectors, std::vector<std::string> names, int window) {
  if (names.size() != covectors.size()) throw std::invalid_argument("one name per character generator");
  if (window < 0) throw std::invalid_argument("character window must be nonnegative");
  CharacterLattice lattice;
  lattice.names = std::move(names);
  lattice.window = window;
  const Scalar two_pi_i = 2 * Scalar::pi() * Scalar::i();
  for (const Vector& xi : covectors) {
    if (!chevalley_eilenberg_d(alg_, xi).is_zero()) throw std::invalid_argument("character covector is not closed");
    RealForm r(alg_.dim());
    for (int k = 0; k < alg_.dim(); ++k) r.add_term(1U << k, xi[k]);
    lattice.tau.push_back(project_bidegree(two_pi_i * coframe_.to_complex(r), 0, 1));
  }
  characters_ = std::move(lattice);
}

namespace models {

LieComplex kodaira_thurston_complex(const Scalar& a, int window) {
  LieAlgebra alg = kodaira_thurston();
  ComplexCoframe cf = build_coframe(alg, kodaira_thurston_j(a));
  LieComplex c(std::move(alg), std::move(cf));
  c.set_characters({{1, 0, 0, 0}, {0, 1, 0, 0}}, {"t", "x"}, window);
  return c;
}

LieComplex complex_torus(int n) {
  LieAlgebra alg = LieAlgebra::abelian(2 * n);
  ComplexCoframe cf = build_coframe(alg, ACStructure::standard(n));
  return {std::move(alg), std::move(cf)};
}

}  // namespace models

}  // namespace acx
