#include "acx/lie_frame.hpp"

#include <algorithm>
#include <stdexcept>

#include "acx/detail/masks.hpp"

namespace acx {

namespace {

Vector zero_vector(int n) { return Vector(n); }

Vector add(Vector x, const Vector& y) {
  for (size_t k = 0; k < x.size(); ++k) x[k] += y[k];
  return x;
}

Vector scale(const Scalar& c, Vector x) {
  for (auto& v : x) v *= c;
  return x;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (!x.is_zero()) return false;
  return true;
}

std::vector<int> bits_of(uint32_t m) {
  std::vector<int> out;
  while (m != 0) {
    out.push_back(std::countr_zero(m));
    m &= m - 1;
  }
  return out;
}

}  // namespace

LieAlgebra::LieAlgebra(int dim, const std::vector<Bracket>& brackets, std::vector<std::string> names)
    : dim_(dim), names_(std::move(names)), table_(static_cast<size_t>(dim) * dim, zero_vector(dim)) {
  if (dim < 1 || dim > 32) throw std::invalid_argument("Lie algebra dimension out of range");
  if (names_.empty())
    for (int k = 1; k <= dim; ++k) names_.push_back("e" + std::to_string(k));
  if (static_cast<int>(names_.size()) != dim) throw std::invalid_argument("wrong number of basis names");
  for (const auto& b : brackets) {
    if (b.i < 1 || b.j > dim || b.i >= b.j) throw std::invalid_argument("brackets must be listed with 1 <= i < j <= dim");
    if (static_cast<int>(b.out.size()) != dim) throw std::invalid_argument("bracket vector has wrong length");
    Vector& slot = table_[static_cast<size_t>(b.i - 1) * dim + (b.j - 1)];
    if (!is_zero(slot)) throw std::invalid_argument("bracket listed twice");
    slot = b.out;
    table_[static_cast<size_t>(b.j - 1) * dim + (b.i - 1)] = scale(-1, b.out);
  }
  for (int i = 0; i < dim; ++i)
    for (int j = i + 1; j < dim; ++j)
      for (int k = j + 1; k < dim; ++k) {
        auto unit = [&](int a) {
          Vector v = zero_vector(dim);
          v[a] = 1;
          return v;
        };
        Vector s = bracket(basis_bracket(i, j), unit(k));
        s = add(s, bracket(basis_bracket(j, k), unit(i)));
        s = add(s, bracket(basis_bracket(k, i), unit(j)));
        if (!is_zero(s))
          throw std::invalid_argument("Jacobi identity fails on (" + names_[i] + ", " + names_[j] + ", " + names_[k] + ")");
      }
  for (int k = 0; k < dim; ++k) {
    RealForm dk(dim);
    for (int i = 0; i < dim; ++i)
      for (int j = i + 1; j < dim; ++j) dk.add_term((1U << i) | (1U << j), -structure_constant(k, i, j));
    d_basis_.push_back(std::move(dk));
  }
}

LieAlgebra LieAlgebra::abelian(int dim) { return {dim, {}}; }

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  if (static_cast<int>(x.size()) != dim_ || static_cast<int>(y.size()) != dim_)
    throw std::invalid_argument("vector length does not match the algebra");
  Vector r = zero_vector(dim_);
  for (int i = 0; i < dim_; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 0; j < dim_; ++j) {
      if (i == j || y[j].is_zero()) continue;
      const Vector& b = basis_bracket(i, j);
      const Scalar c = x[i] * y[j];
      for (int k = 0; k < dim_; ++k)
        if (!b[k].is_zero()) r[k] += c * b[k];
    }
  }
  return r;
}

bool LieAlgebra::is_unimodular() const {
  for (int i = 0; i < dim_; ++i) {
    Scalar trace;
    for (int k = 0; k < dim_; ++k) trace += structure_constant(k, i, k);
    if (!trace.is_zero()) return false;
  }
  return true;
}

RealForm LieAlgebra::d(const RealForm& x) const {
  if (x.dim() != dim_) throw std::invalid_argument("form dimension does not match the algebra");
  RealForm out(dim_);
  for (const auto& [m, c] : x.terms()) {
    const std::vector<int> bits = bits_of(m);
    for (size_t r = 0; r < bits.size(); ++r) {
      const uint32_t below = m & ((1U << bits[r]) - 1);
      const uint32_t above = m & ~((2U << bits[r]) - 1);
      RealForm t = wedge(wedge(RealForm::from_mask(dim_, below), d_basis_[bits[r]]), RealForm::from_mask(dim_, above));
      out += (r % 2 == 0 ? c : -c) * t;
    }
  }
  return out;
}

RealForm chevalley_eilenberg_d(const LieAlgebra& alg, const Vector& xi) {
  if (static_cast<int>(xi.size()) != alg.dim()) throw std::invalid_argument("covector length does not match the algebra");
  RealForm x(alg.dim());
  for (int k = 0; k < alg.dim(); ++k) x.add_term(1U << k, xi[k]);
  return alg.d(x);
}

ACStructure::ACStructure(Matrix j) : j_(std::move(j)) {
  if (j_.rows() != j_.cols() || j_.rows() % 2 != 0) throw std::invalid_argument("J must be a square matrix of even size");
  if (!(j_ * j_ == -Matrix::identity(j_.rows()))) throw std::invalid_argument("J^2 != -I");
}

ACStructure ACStructure::standard(int n) {
  Matrix j(2 * n, 2 * n);
  for (int a = 0; a < n; ++a) {
    j(2 * a + 1, 2 * a) = 1;
    j(2 * a, 2 * a + 1) = -1;
  }
  return ACStructure(std::move(j));
}

ComplexCoframe::ComplexCoframe(Matrix rows) : n_(rows.rows()), rows_(std::move(rows)) {
  if (rows_.cols() != 2 * n_) throw std::invalid_argument("coframe needs n covectors on a 2n-dimensional space");
  frame_ = Matrix(2 * n_, 2 * n_);
  for (int i = 0; i < n_; ++i)
    for (int k = 0; k < 2 * n_; ++k) {
      frame_(i, k) = rows_(i, k);
      frame_(n_ + i, k) = rows_(i, k).conj();
    }
  try {
    inverse_ = frame_.inverse();
  } catch (const std::domain_error&) {
    throw std::invalid_argument("phi and phibar do not form a basis");
  }
  for (int k = 0; k < 2 * n_; ++k) {
    Form e(n_);
    for (int m = 0; m < 2 * n_; ++m) e.add_term(1U << m, inverse_(k, m));
    real_covectors_.push_back(std::move(e));
  }
}

Form ComplexCoframe::to_complex(const RealForm& x) const {
  if (x.dim() != 2 * n_) throw std::invalid_argument("real form dimension does not match the coframe");
  Form out(n_);
  for (const auto& [m, c] : x.terms()) {
    Form t = Form::constant(n_, c);
    for (int b : bits_of(m)) t = wedge(t, real_covectors_[b]);
    out += t;
  }
  return out;
}

bool ComplexCoframe::matches_up_to_scaling(const Matrix& expected) const {
  if (expected.rows() != n_ || expected.cols() != 2 * n_) return false;
  for (int i = 0; i < n_; ++i) {
    Matrix pair(2, 2 * n_);
    for (int k = 0; k < 2 * n_; ++k) {
      pair(0, k) = rows_(i, k);
      pair(1, k) = expected(i, k);
    }
    if (pair.rank() != 1) return false;
  }
  return true;
}

ComplexCoframe build_coframe(const LieAlgebra& alg, const ACStructure& j) {
  if (alg.dim() != j.dim()) throw std::invalid_argument("J does not act on this algebra");
  const int dim = alg.dim();
  Matrix m = j.matrix().transpose();
  for (int k = 0; k < dim; ++k) m(k, k) -= Scalar::i();
  std::vector<Vector> ker = m.kernel();
  if (static_cast<int>(ker.size()) * 2 != dim) throw std::logic_error("+i eigenspace has the wrong dimension");
  std::vector<std::pair<int, Vector>> keyed;
  for (auto& v : ker) {
    int lead = 0;
    while (v[lead].is_zero()) ++lead;
    const Scalar inv = v[lead].inverse();
    for (auto& x : v) x *= inv;
    keyed.emplace_back(lead, std::move(v));
  }
  std::stable_sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
  std::vector<Vector> rows;
  for (auto& kv : keyed) rows.push_back(std::move(kv.second));
  return ComplexCoframe(Matrix::from_rows(rows));
}

StructureEquations::StructureEquations(const LieAlgebra& alg, const ComplexCoframe& coframe) : n_(coframe.n()) {
  if (alg.dim() != coframe.real_dim()) throw std::invalid_argument("coframe does not match the algebra");
  std::vector<Form> de;
  for (int k = 0; k < alg.dim(); ++k) de.push_back(coframe.to_complex(alg.d(RealForm::basis(alg.dim(), k + 1))));
  for (int i = 0; i < n_; ++i) {
    Form d(n_);
    for (int k = 0; k < alg.dim(); ++k)
      if (!coframe.rows()(i, k).is_zero()) d += coframe.rows()(i, k) * de[k];
    dpsi_.push_back(std::move(d));
  }
  for (int i = 0; i < n_; ++i) dpsi_.push_back(conjugate(dpsi_[i]));
}

Form StructureEquations::d(const Form& x) const {
  if (x.n() != n_) throw std::invalid_argument("form dimension does not match the structure equations");
  Form out(n_);
  for (const auto& [m, c] : x.terms()) {
    const std::vector<int> bits = bits_of(m);
    for (size_t r = 0; r < bits.size(); ++r) {
      const uint32_t below = m & ((1U << bits[r]) - 1);
      const uint32_t above = m & ~((2U << bits[r]) - 1);
      Form t = wedge(wedge(Form::from_mask(n_, below), dpsi_[bits[r]]), Form::from_mask(n_, above));
      out += (r % 2 == 0 ? c : -c) * t;
    }
  }
  return out;
}

Form StructureEquations::shifted(const Form& x, int dp, int dq) const {
  Form out(n_);
  for (const auto& [m, c] : x.terms()) {
    const auto [p, q] = Form::bidegree(n_, m);
    const int tp = p + dp;
    const int tq = q + dq;
    if (tp < 0 || tq < 0 || tp > n_ || tq > n_) continue;
    out += project_bidegree(d(Form::from_mask(n_, m, c)), tp, tq);
  }
  return out;
}

Form StructureEquations::del(const Form& x) const { return shifted(x, 1, 0); }
Form StructureEquations::dbar(const Form& x) const { return shifted(x, 0, 1); }
Form StructureEquations::mu(const Form& x) const { return shifted(x, 2, -1); }
Form StructureEquations::mubar(const Form& x) const { return shifted(x, -1, 2); }

StructureEquations structure_equations(const LieAlgebra& alg, const ComplexCoframe& coframe) { return {alg, coframe}; }

bool NijenhuisTensor::is_zero() const {
  for (const auto& v : values_)
    if (!acx::is_zero(v)) return false;
  return true;
}

NijenhuisTensor nijenhuis(const LieAlgebra& alg, const ACStructure& j) {
  if (alg.dim() != j.dim()) throw std::invalid_argument("J does not act on this algebra");
  const int dim = alg.dim();
  std::vector<Vector> values(static_cast<size_t>(dim) * dim, zero_vector(dim));
  for (int a = 0; a < dim; ++a)
    for (int b = a + 1; b < dim; ++b) {
      Vector x = zero_vector(dim);
      Vector y = zero_vector(dim);
      x[a] = 1;
      y[b] = 1;
      const Vector jx = j.apply(x);
      const Vector jy = j.apply(y);
      Vector n = alg.bracket(x, y);
      n = add(n, j.apply(alg.bracket(jx, y)));
      n = add(n, j.apply(alg.bracket(x, jy)));
      n = add(n, scale(-1, alg.bracket(jx, jy)));
      values[static_cast<size_t>(b) * dim + a] = scale(-1, n);
      values[static_cast<size_t>(a) * dim + b] = std::move(n);
    }
  return {dim, std::move(values)};
}

bool is_integrable(const LieAlgebra& alg, const ACStructure& j) {
  const bool tensor_zero = nijenhuis(alg, j).is_zero();
  const ComplexCoframe coframe = build_coframe(alg, j);
  const int n = coframe.n();
  bool closed = true;
  for (int a = 0; a < n && closed; ++a)
    for (int b = a + 1; b < n && closed; ++b) {
      const Vector c = coframe.components(alg.bracket(coframe.dual_vector(a), coframe.dual_vector(b)));
      for (int k = n; k < 2 * n; ++k)
        if (!c[k].is_zero()) closed = false;
    }
  const StructureEquations eqs(alg, coframe);
  bool no_02 = true;
  for (int i = 0; i < n; ++i)
    if (!project_bidegree(eqs.dphi(i), 0, 2).is_zero()) no_02 = false;
  if (tensor_zero != closed || closed != no_02) throw std::logic_error("integrability criteria disagree");
  return tensor_zero;
}

namespace models {

LieAlgebra kodaira_thurston() {
  return {4, {{2, 3, {0, 0, 0, 1}}}};
}

ACStructure kodaira_thurston_j(const Scalar& a) {
  if (a.is_zero()) throw std::invalid_argument("parameter a must be nonzero");
  Matrix j(4, 4);
  j(1, 0) = 1;
  j(0, 1) = -1;
  j(3, 2) = a.inverse();
  j(2, 3) = -a;
  return ACStructure(std::move(j));
}

ACStructure kodaira_thurston_integrable_j() {
  Matrix j(4, 4);
  j(3, 0) = 1;
  j(2, 1) = 1;
  j(1, 2) = -1;
  j(0, 3) = -1;
  return ACStructure(std::move(j));
}

}  // namespace models

}  // namespace acx
