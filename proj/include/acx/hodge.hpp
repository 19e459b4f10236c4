#pragma once

#include <stdexcept>
#include <vector>

#include "acx/bundles.hpp"

namespace acx {

/// Raised for harmonic-space requests on complexes where invariant Stokes fails.
class NonUnimodularError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// dV = (i/2)^n phi^1 ^ phibar^1 ^ ... ^ phi^n ^ phibar^n, the form with h(1,1) dV = 1 ^ conj(*1).
Form volume_form(int n);
/// h(x, y) with the monomials phi_alpha ^ phibar_beta orthogonal of squared length 2^(p+q).
Scalar hermitian_product(const Form& x, const Form& y);
/// Coefficient of the top monomial in the canonical order.
Scalar top_coefficient(const Form& x);

/// Star operator via the explicit formula
/// *(phi_a ^ phibar_b) = 2^(p+q-n) (-i)^n eps phi_bhat ^ phibar_ahat, where eps is the sign of the
/// permutation taking (a, b', bhat', ahat) to (1, 1', ..., n, n').
/// Throws std::invalid_argument on inhomogeneous input.
Form star(const Form& x);
/// Star obtained by solving h(x, y) dV = x ^ conj(*y) monomial by monomial.
Form star_by_duality(const Form& x);

/// Line bundle operators; theta is the (0,1) connection form on a unitary frame (zero: trivial bundle).
Form dbar_e(const InvariantComplex& complex, const Form& theta, const Form& x);
/// (1,0)-part of the Hermitian connection: del x + (-1)^deg x ^ (-conj theta).
Form nabla10_e(const InvariantComplex& complex, const Form& theta, const Form& x);
/// dbar*_E = -* nabla^{1,0}_E *.
Form dbar_star(const InvariantComplex& complex, const Form& theta, const Form& x);
Form laplacian(const InvariantComplex& complex, const Form& theta, const Form& x);

struct HarmonicComponent {
  std::vector<int> character;  ///< empty when the complex carries no characters
  std::vector<Form> basis;
};

struct HarmonicSpace {
  int dimension = 0;
  /// Nonzero components only, in character order.
  std::vector<HarmonicComponent> components;
};

/// Kernel of the dbar_E Laplacian on invariant (p,q)-forms twisted by theta (and by every character
/// in the complex's window, if it has characters). The kernel is computed twice, as ker(Laplacian)
/// and as ker(dbar_E) cap ker(dbar*_E); a disagreement throws std::logic_error.
/// Throws NonUnimodularError if invariant Stokes fails.
HarmonicSpace invariant_harmonic_space(const InvariantComplex& complex, int p, int q, const Form& theta);
HarmonicSpace invariant_harmonic_space(const InvariantComplex& complex, int p, int q);

struct SerreReport {
  int dimension = 0;       ///< dim H^{p,q}(E)
  int dual_dimension = 0;  ///< dim H^{n-p,n-q}(E*)
  bool maps_into_dual = false;
  bool pairing_nonsingular = false;
  bool holds() const { return dimension == dual_dimension && maps_into_dual && pairing_nonsingular; }
};

/// Checks that s -> conj(*s) sends harmonic (p,q)-forms of E injectively onto harmonic
/// (n-p,n-q)-forms of E* (theta* = -theta) and that the wedge pairing is nonsingular.
SerreReport serre_pairing_check(const InvariantComplex& complex, int p, int q, const Form& theta);

}  // namespace acx
