#pragma once

#include <optional>
#include <string>
#include <vector>

#include "acx/lie_frame.hpp"

namespace acx {

/// Contraction i_X x, with X given by its components along (X_1..X_n, Xbar_1..Xbar_n).
Form interior(const Vector& components, const Form& x);

/// Unitary characters exp(2 pi i <v, xi>) attached to closed real covectors xi_1..xi_r.
/// A character twists a line bundle by the (0,1)-form sum_c v_c tau_c.
struct CharacterLattice {
  std::vector<Form> tau;  ///< (0,1)-part of 2 pi i xi_c
  std::vector<std::string> names;
  int window = 32;

  Form twist(const std::vector<int>& v) const;
  /// All v with |v_c| <= window, in lexicographic order.
  std::vector<std::vector<int>> enumerate() const;
};

/// Window for character enumeration: ACX_MODE_WINDOW if set, else 32.
int mode_window_from_env();

/// Invariant forms of bounded type on a homogeneous space: a finite complex with d, the
/// coframe declared unitary, and an explicit basis of invariant sections in each bidegree.
class InvariantComplex {
 public:
  virtual ~InvariantComplex() = default;
  virtual int n() const = 0;
  virtual Form d(const Form& x) const = 0;
  /// Basis of invariant (p,q)-forms; all monomials unless overridden.
  virtual std::vector<Form> section_basis(int p, int q) const;

  Form dbar(const Form& x) const;
  Form del(const Form& x) const;
  /// Top coefficient of d vanishes on every invariant (2n-1)-form (invariant Stokes).
  bool stokes_holds() const;

  const std::optional<CharacterLattice>& characters() const { return characters_; }

 protected:
  std::optional<CharacterLattice> characters_;

 private:
  Form shifted(const Form& x, int dp, int dq) const;
};

/// Left-invariant forms on a Lie group with an invariant almost complex structure.
class LieComplex : public InvariantComplex {
 public:
  LieComplex(LieAlgebra alg, ComplexCoframe coframe);

  int n() const override { return coframe_.n(); }
  Form d(const Form& x) const override { return equations_.d(x); }

  const LieAlgebra& algebra() const { return alg_; }
  const ComplexCoframe& coframe() const { return coframe_; }
  const StructureEquations& equations() const { return equations_; }
  bool is_unimodular() const { return alg_.is_unimodular(); }

  /// Declares the characters attached to closed real covectors (rows over the real dual basis).
  /// Throws std::invalid_argument if a covector is not closed.
  void set_characters(const std::vector<Vector>& covectors, std::vector<std::string> names, int window);

 private:
  LieAlgebra alg_;
  ComplexCoframe coframe_;
  StructureEquations equations_;
};

namespace models {

/// Kodaira-Thurston invariant complex for J_a, with characters along the base (dt, dx).
LieComplex kodaira_thurston_complex(const Scalar& a, int window);
/// Complex torus of complex dimension n (abelian algebra, standard J).
LieComplex complex_torus(int n);

}  // namespace models

}  // namespace acx
