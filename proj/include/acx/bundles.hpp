#pragma once

#include <vector>

#include "acx/invariant_complex.hpp"

namespace acx {

/// Square matrix of forms; entry (i, j) is the coefficient of frame element s_j in the image of s_i.
using FormMatrix = std::vector<std::vector<Form>>;

/// Pseudoholomorphic structure on a trivialized bundle: dbar_E s_i = sum_j theta_i^j s_j on a
/// unitary frame s_1..s_r. Entries of theta are (0,1)-forms.
class PseudoholStructure {
 public:
  /// Throws std::invalid_argument if theta is not square or has entries of another bidegree.
  PseudoholStructure(int n, FormMatrix theta);
  /// As above, but with the Gram matrix of the frame; anything other than the identity is
  /// rejected (frames are never silently orthonormalized).
  PseudoholStructure(int n, FormMatrix theta, const Matrix& gram);
  static PseudoholStructure line(const Form& theta);
  static PseudoholStructure trivial(int n, int rank);

  int n() const { return n_; }
  int rank() const { return static_cast<int>(theta_.size()); }
  const FormMatrix& theta() const { return theta_; }
  const Form& theta(int i, int j) const { return theta_[i][j]; }

  /// Same structure in the frame s'_i = sum_k U_ik s_k (U unitary): theta' = U theta U^*.
  PseudoholStructure change_frame(const Matrix& unitary) const;

  friend bool operator==(const PseudoholStructure&, const PseudoholStructure&) = default;

 private:
  int n_;
  FormMatrix theta_;
};

/// omega_i^j = theta_i^j - conj(theta_j^i): the Hermitian connection whose (0,1)-part is theta.
FormMatrix hermitian_connection(const PseudoholStructure& ps);
bool is_skew_hermitian(const FormMatrix& omega);
FormMatrix project_bidegree(const FormMatrix& m, int p, int q);

/// theta* = -theta^T on the dual frame.
PseudoholStructure dual_structure(const PseudoholStructure& ps);
/// dbar(s*_i(s_j)) = (dbar_{E*} s*_i)(s_j) + s*_i(dbar_E s_j) on all frame pairs.
bool pairing_leibniz_holds(const PseudoholStructure& ps, const PseudoholStructure& dual);

/// dbar_E on E-valued forms sum_i x_i (x) s_i: dbar x_i (x) s_i + (-1)^deg x_i ^ theta_i^j (x) s_j.
std::vector<Form> dbar_e(const InvariantComplex& complex, const PseudoholStructure& ps, const std::vector<Form>& x);

/// Kernel of dbar_E on invariant (p,0)-form sections.
struct SectionSpace {
  int dimension = 0;
  std::vector<std::vector<Form>> basis;  ///< one component per frame element
};
SectionSpace invariant_sections(const InvariantComplex& complex, const PseudoholStructure& ps, int p);
/// Kernel of dbar_E on E-valued forms with coefficients in the given span.
SectionSpace sections_on_span(const InvariantComplex& complex, const PseudoholStructure& ps, const std::vector<Form>& basis);

/// The canonical bundle power K^m with frame vol^m, vol = phi^1 ^ ... ^ phi^n, and
/// dbar_m(vol^m) = beta_m ^ vol^m.
struct CanonicalPower {
  int m = 1;
  Form volume;
  Form beta;
  PseudoholStructure structure() const { return PseudoholStructure::line(beta); }
};
/// beta_m built through the product rule dbar_m(s1 (x) s2) = dbar s1 (x) s2 + s1 (x) dbar_{m-1} s2.
CanonicalPower canonical_dbar(const InvariantComplex& complex, int m);
/// Same for the line spanned by phi^i, i in indices (1-based); throws std::invalid_argument if
/// dbar does not preserve that line.
CanonicalPower canonical_dbar(const InvariantComplex& complex, int m, const std::vector<int>& indices);

/// Lambda^{1,0} restricted to the span of phi^i, i in indices (1-based): dbar phi^i = sum_j theta_i^j ^ phi^j.
/// Throws std::invalid_argument if the span is not preserved.
PseudoholStructure coframe_bundle(const InvariantComplex& complex, const std::vector<int>& indices);

}  // namespace acx
