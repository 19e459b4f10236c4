#include "acx/bundles.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace acx {

namespace {

bool is_01_or_zero(const Form& f) {
  const auto bd = f.bidegree();
  return f.is_zero() || (bd && *bd == std::pair{0, 1});
}

FormMatrix zero_matrix(int n, int rank) { return FormMatrix(rank, std::vector<Form>(rank, Form(n))); }

}  // namespace

PseudoholStructure::PseudoholStructure(int n, FormMatrix theta) : n_(n), theta_(std::move(theta)) {
  for (const auto& row : theta_) {
    if (row.size() != theta_.size()) throw std::invalid_argument("connection matrix must be square");
    for (const auto& f : row) {
      if (f.n() != n_) throw std::invalid_argument("connection form has the wrong dimension");
      if (!is_01_or_zero(f)) throw std::invalid_argument("connection entries must be (0,1)-forms");
    }
  }
}

PseudoholStructure::PseudoholStructure(int n, FormMatrix theta, const Matrix& gram) : PseudoholStructure(n, std::move(theta)) {
  if (!(gram == Matrix::identity(rank()))) throw std::invalid_argument("frame is not unitary");
}

PseudoholStructure PseudoholStructure::line(const Form& theta) { return {theta.n(), FormMatrix{{theta}}}; }

PseudoholStructure PseudoholStructure::trivial(int n, int rank) { return {n, zero_matrix(n, rank)}; }

PseudoholStructure PseudoholStructure::change_frame(const Matrix& unitary) const {
  const int r = rank();
  if (unitary.rows() != r || unitary.cols() != r) throw std::invalid_argument("frame change has the wrong size");
  const Matrix adj = unitary.conj_transpose();
  if (!(unitary * adj == Matrix::identity(r))) throw std::invalid_argument("frame change is not unitary");
  FormMatrix out = zero_matrix(n_, r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j)
      for (int k = 0; k < r; ++k)
        for (int l = 0; l < r; ++l) {
          const Scalar c = unitary(i, k) * adj(l, j);
          if (!c.is_zero()) out[i][j] += c * theta_[k][l];
        }
  return {n_, std::move(out)};
}

FormMatrix hermitian_connection(const PseudoholStructure& ps) {
  const int r = ps.rank();
  FormMatrix omega = zero_matrix(ps.n(), r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) omega[i][j] = ps.theta(i, j) - conjugate(ps.theta(j, i));
  return omega;
}

bool is_skew_hermitian(const FormMatrix& omega) {
  for (size_t i = 0; i < omega.size(); ++i)
    for (size_t j = 0; j < omega.size(); ++j)
      if (!(omega[i][j] + conjugate(omega[j][i])).is_zero()) return false;
  return true;
}

FormMatrix project_bidegree(const FormMatrix& m, int p, int q) {
  FormMatrix out = m;
  for (auto& row : out)
    for (auto& f : row) f = project_bidegree(f, p, q);
  return out;
}

PseudoholStructure dual_structure(const PseudoholStructure& ps) {
  const int r = ps.rank();
  FormMatrix t = zero_matrix(ps.n(), r);
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) t[i][j] = -ps.theta(j, i);
  return {ps.n(), std::move(t)};
}

bool pairing_leibniz_holds(const PseudoholStructure& ps, const PseudoholStructure& dual) {
  const int r = ps.rank();
  if (dual.rank() != r) return false;
  // s*_i(s_j) is constant, so the left side vanishes.
  for (int i = 0; i < r; ++i)
    for (int j = 0; j < r; ++j) {
      Form rhs(ps.n());
      for (int k = 0; k < r; ++k) {
        if (k == j) rhs += dual.theta(i, k);
        if (k == i) rhs += ps.theta(j, k);
      }
      if (!rhs.is_zero()) return false;
    }
  return true;
}

std::vector<Form> dbar_e(const InvariantComplex& complex, const PseudoholStructure& ps, const std::vector<Form>& x) {
  const int r = ps.rank();
  if (static_cast<int>(x.size()) != r) throw std::invalid_argument("section has the wrong rank");
  std::vector<Form> out(r, Form(complex.n()));
  for (int i = 0; i < r; ++i) {
    out[i] += complex.dbar(x[i]);
    for (const auto& [m, c] : x[i].terms()) {
      const Form term = Form::from_mask(complex.n(), m, c);
      const bool odd = std::popcount(m) % 2 != 0;
      for (int j = 0; j < r; ++j) {
        if (ps.theta(i, j).is_zero()) continue;
        const Form w = wedge(term, ps.theta(i, j));
        out[j] += odd ? -w : w;
      }
    }
  }
  return out;
}

SectionSpace invariant_sections(const InvariantComplex& complex, const PseudoholStructure& ps, int p) {
  return sections_on_span(complex, ps, complex.section_basis(p, 0));
}

SectionSpace sections_on_span(const InvariantComplex& complex, const PseudoholStructure& ps, const std::vector<Form>& basis) {
  const int r = ps.rank();
  const int cols = static_cast<int>(basis.size()) * r;
  std::vector<std::vector<Form>> images;
  for (int i = 0; i < r; ++i)
    for (const Form& b : basis) {
      std::vector<Form> x(r, Form(complex.n()));
      x[i] = b;
      images.push_back(dbar_e(complex, ps, x));
    }
  // Rows indexed by (frame element, output monomial).
  std::vector<std::pair<int, uint32_t>> keys;
  for (const auto& img : images)
    for (int j = 0; j < r; ++j)
      for (const auto& [m, c] : img[j].terms())
        if (std::find(keys.begin(), keys.end(), std::pair{j, m}) == keys.end()) keys.emplace_back(j, m);
  Matrix a(static_cast<int>(keys.size()), cols);
  for (int col = 0; col < cols; ++col)
    for (size_t row = 0; row < keys.size(); ++row) a(static_cast<int>(row), col) = images[col][keys[row].first].coefficient(keys[row].second);
  SectionSpace out;
  for (const Vector& v : a.kernel()) {
    std::vector<Form> s(r, Form(complex.n()));
    for (int col = 0; col < cols; ++col)
      if (!v[col].is_zero()) s[col / basis.size()] += v[col] * basis[col % basis.size()];
    out.basis.push_back(std::move(s));
  }
  out.dimension = static_cast<int>(out.basis.size());
  return out;
}

CanonicalPower canonical_dbar(const InvariantComplex& complex, int m) {
  std::vector<int> all(complex.n());
  for (int i = 0; i < complex.n(); ++i) all[i] = i + 1;
  return canonical_dbar(complex, m, all);
}

CanonicalPower canonical_dbar(const InvariantComplex& complex, int m, const std::vector<int>& indices) {
  if (m < 1) throw std::invalid_argument("canonical power must be at least 1");
  const int n = complex.n();
  std::vector<int> sorted = indices;
  std::sort(sorted.begin(), sorted.end());
  Form vol = Form::constant(n, 1);
  uint32_t holo = 0;
  for (int i : sorted) {
    vol = wedge(vol, Form::phi(n, i));
    holo |= 1U << (i - 1);
  }
  if (vol.is_zero()) throw std::invalid_argument("repeated index in the volume form");
  const int r = static_cast<int>(indices.size());
  // dbar vol = sum_k c_k vol ^ phibar^k = beta_1 ^ vol with beta_1 = (-1)^r sum_k c_k phibar^k.
  const Form dv = complex.dbar(vol);
  Form beta1(n);
  const uint32_t holo_all = (1U << n) - 1;
  for (const auto& [mask, c] : dv.terms()) {
    if ((mask & holo_all) != holo) throw std::invalid_argument("dbar of the volume form leaves the line it spans");
    beta1.add_term(mask & ~holo_all, r % 2 == 0 ? c : -c);
  }
  if (!(wedge(beta1, vol) == dv)) throw std::logic_error("dbar of the volume form is not beta ^ vol");
  CanonicalPower k{1, vol, beta1};
  for (int j = 2; j <= m; ++j) k = CanonicalPower{j, vol, beta1 + k.beta};
  return k;
}

PseudoholStructure coframe_bundle(const InvariantComplex& complex, const std::vector<int>& indices) {
  const int n = complex.n();
  const int r = static_cast<int>(indices.size());
  FormMatrix theta = zero_matrix(n, r);
  for (int a = 0; a < r; ++a) {
    const Form img = complex.dbar(Form::phi(n, indices[a]));
    Form rebuilt(n);
    for (int b = 0; b < r; ++b) {
      const uint32_t bit = 1U << (indices[b] - 1);
      // theta ^ phi^j: collect the terms containing phi^j and strip it.
      Form part(n);
      for (const auto& [m, c] : img.terms())
        if ((m & bit) != 0) part.add_term(m & ~bit, c);
      // (phibar^k ^ phi^j) = -(phi^j ^ phibar^k), and phi^j is the lowest bit in each monomial.
      theta[a][b] = -part;
      rebuilt += wedge(theta[a][b], Form::phi(n, indices[b]));
    }
    if (!(rebuilt == img)) throw std::invalid_argument("the chosen coframe span is not preserved by dbar");
  }
  return {n, std::move(theta)};
}

}  // namespace acx
