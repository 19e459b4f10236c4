#pragma once

#include <string>
#include <vector>

#include "acx/form.hpp"
#include "acx/matrix.hpp"

namespace acx {

/// Real Lie algebra given by structure constants [e_i, e_j] = sum_k c^k_ij e_k.
/// Antisymmetry is built in; the Jacobi identity is checked on construction.
class LieAlgebra {
 public:
  /// One bracket [e_i, e_j] (1-based, i < j) as a coefficient vector.
  struct Bracket {
    int i;
    int j;
    Vector out;
  };

  LieAlgebra(int dim, const std::vector<Bracket>& brackets, std::vector<std::string> names = {});
  static LieAlgebra abelian(int dim);

  int dim() const { return dim_; }
  const std::vector<std::string>& names() const { return names_; }
  /// [e_i, e_j], 0-based.
  const Vector& basis_bracket(int i, int j) const { return table_[static_cast<size_t>(i) * dim_ + j]; }
  Scalar structure_constant(int k, int i, int j) const { return basis_bracket(i, j)[k]; }
  Vector bracket(const Vector& x, const Vector& y) const;
  /// tr ad(e_i) = 0 for all i.
  bool is_unimodular() const;

  /// Chevalley-Eilenberg differential, d xi(X, Y) = -xi([X, Y]), extended by Leibniz.
  RealForm d(const RealForm& x) const;

 private:
  int dim_;
  std::vector<std::string> names_;
  std::vector<Vector> table_;
  std::vector<RealForm> d_basis_;
};

/// d of a covector xi = sum_k xi_k e^k.
RealForm chevalley_eilenberg_d(const LieAlgebra& alg, const Vector& xi);

/// Almost complex structure on the real basis: column j holds J e_j.
class ACStructure {
 public:
  /// Throws std::invalid_argument unless J is square with J^2 = -I.
  explicit ACStructure(Matrix j);
  static ACStructure standard(int n);

  const Matrix& matrix() const { return j_; }
  int dim() const { return j_.rows(); }
  Vector apply(const Vector& v) const { return j_ * v; }

 private:
  Matrix j_;
};

/// n complex covectors phi^i (rows, over the real dual basis) spanning the +i eigenspace of
/// J^T, together with the dual (1,0) vectors X_i.
class ComplexCoframe {
 public:
  /// rows: n x 2n. Throws std::invalid_argument if (phi, phibar) is not a basis.
  explicit ComplexCoframe(Matrix rows);

  int n() const { return n_; }
  int real_dim() const { return 2 * n_; }
  const Matrix& rows() const { return rows_; }
  Vector phi(int i) const { return rows_.row(i); }
  /// X_i (0-based) on the real basis; phi^j(X_i) = delta, phibar^j(X_i) = 0.
  Vector dual_vector(int i) const { return inverse_.column(i); }
  Vector dual_vector_bar(int i) const { return inverse_.column(n_ + i); }
  /// Components of a complex vector along (X_1..X_n, Xbar_1..Xbar_n).
  Vector components(const Vector& v) const { return frame_ * v; }
  /// The real dual basis element e^k written in the complex coframe.
  const Form& real_covector(int k) const { return real_covectors_[k]; }
  Form to_complex(const RealForm& x) const;

  /// True if each phi^i agrees with the given rows up to a nonzero complex factor.
  bool matches_up_to_scaling(const Matrix& expected) const;

 private:
  int n_;
  Matrix rows_;
  Matrix frame_;
  Matrix inverse_;
  std::vector<Form> real_covectors_;
};

/// Kernel of (J^T - i) with each covector scaled so its leading coefficient is 1.
ComplexCoframe build_coframe(const LieAlgebra& alg, const ACStructure& j);

/// dphi^i and dphibar^i on a coframe, with the derived operators on all forms.
class StructureEquations {
 public:
  StructureEquations(const LieAlgebra& alg, const ComplexCoframe& coframe);

  int n() const { return n_; }
  const Form& dphi(int i) const { return dpsi_[i]; }
  const Form& dphibar(int i) const { return dpsi_[n_ + i]; }
  /// d on complex forms via Leibniz.
  Form d(const Form& x) const;
  Form del(const Form& x) const;
  Form dbar(const Form& x) const;
  /// The (p+2, q-1) and (p-1, q+2) components of d.
  Form mu(const Form& x) const;
  Form mubar(const Form& x) const;

 private:
  Form shifted(const Form& x, int dp, int dq) const;
  int n_;
  std::vector<Form> dpsi_;
};

StructureEquations structure_equations(const LieAlgebra& alg, const ComplexCoframe& coframe);

/// N(X,Y) = [X,Y] + J[JX,Y] + J[X,JY] - [JX,JY] on basis pairs.
class NijenhuisTensor {
 public:
  NijenhuisTensor(int dim, std::vector<Vector> values) : dim_(dim), values_(std::move(values)) {}
  int dim() const { return dim_; }
  /// N(e_i, e_j), 0-based.
  const Vector& at(int i, int j) const { return values_[static_cast<size_t>(i) * dim_ + j]; }
  bool is_zero() const;

 private:
  int dim_;
  std::vector<Vector> values_;
};

NijenhuisTensor nijenhuis(const LieAlgebra& alg, const ACStructure& j);
/// Nijenhuis vanishing, closure of the (1,0) span under brackets, and vanishing of the (0,2)
/// parts of dphi^i are computed independently; throws std::logic_error if they disagree.
bool is_integrable(const LieAlgebra& alg, const ACStructure& j);

namespace models {

/// Invariant frame e1 = dt, e2 = dx, e3 = dy + x dz, e4 = dz on S^1 x Nil^3: [e2, e3] = e4.
LieAlgebra kodaira_thurston();
/// J_a: Je1 = e2, Je3 = (1/a) e4.
ACStructure kodaira_thurston_j(const Scalar& a);
/// Integrable structure Je1 = e4, Je2 = e3.
ACStructure kodaira_thurston_integrable_j();

}  // namespace models

}  // namespace acx
