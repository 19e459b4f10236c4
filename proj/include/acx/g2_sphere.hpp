#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "acx/bundles.hpp"
#include "acx/hodge.hpp"
#include "acx/invariant_complex.hpp"
#include "acx/torus_models.hpp"

namespace acx::g2 {

/// Basis order of g2 used throughout: f1..f6, h1..h8 (indices 0..13).
const std::vector<std::string>& basis_names();

/// Element of g2 given by its coordinates (x1..x6, y1..y8); the matrix is the 7x7 block pattern
/// in which f_i carries x_i and h_j carries y_j. Coordinates may be complex.
struct G2Element {
  std::array<Scalar, 6> x;
  std::array<Scalar, 8> y;

  static G2Element from_coordinates(const Vector& c);
  /// Reads the coordinates off a matrix; throws std::invalid_argument if the matrix is not in g2.
  static G2Element from_matrix(const Matrix& a);

  Matrix matrix() const;
  Vector coordinates() const;
  friend bool operator==(const G2Element&, const G2Element&) = default;
};

/// epsilon_ijk (0-based) from Phi = e123 + e145 + e167 + e246 - e257 - e347 - e356.
int epsilon(int i, int j, int k);
/// Skew and sum_{j,k} eps_ijk a_jk = 0 for every i.
bool satisfies_membership(const Matrix& a);
/// (A.Phi)(e_i, e_j, e_k) = 0 on all 35 triples: the infinitesimal form of g^* Phi = Phi.
bool preserves_phi(const Matrix& a);

std::vector<G2Element> basis();
/// Matrix commutator, re-expressed in coordinates. Throws std::logic_error if the result leaves g2.
G2Element bracket(const G2Element& a, const G2Element& b);
/// Structure constants from matrix commutators.
LieAlgebra algebra();

using Vec7 = std::array<Scalar, 7>;
Vec7 unit_vector(int k);
Scalar dot(const Vec7& u, const Vec7& v);
/// (u x v) . w = Phi(u, v, w).
Vec7 cross(const Vec7& u, const Vec7& v);
/// v -> u x v as a 7x7 matrix. Throws std::invalid_argument unless u . u = 1.
Matrix j_at_point(const Vec7& u);

/// dp(A) = A e_1 for the orbit map p(g) = g e_1.
Vec7 dp(const G2Element& a);
/// J~ f1 = -f2, J~ f3 = -f4, ..., J~ h7 = -h8.
ACStructure j_tilde();

// ---- verification reports -------------------------------------------------------------------

/// Printed identity compared with its recomputation.
struct IdentityCheck {
  std::string label;
  std::string printed;
  std::string computed;
  bool match = false;
  /// Mismatch listed in the errata registry with exactly this recomputed value.
  bool preregistered = false;
};

struct KnownErratum {
  std::string label;
  std::string printed;
  std::string recomputed;
};
/// Discrepancies between the printed formulas and the computation that are already catalogued.
const std::vector<KnownErratum>& known_errata();

struct IdentityReport {
  std::vector<IdentityCheck> entries;
  /// Mismatches, whether or not they are registered.
  std::vector<IdentityCheck> diffs() const;
  /// Every entry matches or is a registered erratum.
  bool passed() const;
};

struct BracketTableReport {
  IdentityReport table;
  int pairs_listed = 0;
  int jacobi_triples = 0;
  int jacobi_failures = 0;
  bool h_closed = false;  ///< every [h_i, h_j] has zero x-part
  bool passed() const { return table.passed() && jacobi_failures == 0 && h_closed; }
};
BracketTableReport verify_bracket_table();

struct G2StructureChecks {
  int span_rank = 0;
  bool basis_members = false;
  bool basis_preserves_phi = false;
  bool cross_identities = false;  ///< (u x v).u = 0 and u x (u x v) = (u.v)u - (u.u)v on basis pairs
  bool dp_values = false;         ///< dp(f_i) = (-1)^i e_{i+1}, dp(h_j) = 0
  int dp_kernel_dimension = 0;
  bool pseudoholomorphic = false;  ///< dp J~ = J_{e1} dp
  bool passed() const;
};
G2StructureChecks structure_checks();

/// Randomized check of the membership criterion: random integer combinations of the basis must
/// pass, random skew matrices outside the span (certified by rank) must fail.
struct MembershipSample {
  int members = 0;
  int members_passed = 0;
  int outsiders = 0;
  int outsiders_rejected = 0;
  bool passed() const { return members_passed == members && outsiders_rejected == outsiders; }
};
MembershipSample random_membership_check(unsigned seed, int members, int outsiders);

/// Left-invariant structure on G2 (complex dimension 7) for J~.
LieComplex ambient_complex();

/// Forms on S^6 = G2/SU(3) pulled back to G2: basic forms in phi^1..phi^3 and their conjugates.
/// Forms are stored over n = 3 and lifted into the ambient complex to differentiate.
class SphereComplex : public InvariantComplex {
 public:
  SphereComplex();

  int n() const override { return 3; }
  /// Throws std::logic_error if d leaves the basic forms (only basic inputs are meaningful).
  Form d(const Form& x) const override;
  /// Horizontal (p,q)-forms with i_X dx = 0 for all X in h.
  std::vector<Form> section_basis(int p, int q) const override;

  const LieComplex& ambient() const { return ambient_; }
  static Form lift(const Form& x);
  /// Throws std::logic_error on any term outside phi^1..phi^3 and their conjugates.
  static Form project(const Form& x);

 private:
  LieComplex ambient_;
  std::vector<std::vector<Form>> sections_;  // indexed by 4 p + q
};

struct StructurePackage {
  IdentityReport coframe;      ///< phi^a = f^{2a-1} - i f^{2a}
  IdentityReport real_d;       ///< df^1..df^6
  IdentityReport dbar_phi;     ///< dbar phi^1..phi^3
  IdentityReport dbar_20;      ///< dbar of phi^1^phi^2, phi^2^phi^3, phi^3^phi^1
  bool dbar_volume_zero = false;          ///< recomputed dbar(phi^1 ^ phi^2 ^ phi^3) = 0
  bool dbar_volume_zero_printed = false;  ///< same, by Leibniz from the printed dbar phi^i
  bool basic_volume_closed = false;       ///< phi^123 is basic and dbar-closed on S^6
  bool passed() const;
};
StructurePackage s6_structure_package();

/// Brackets of X_1..X_7 (X_a dual to phi^a) used in the vanishing arguments.
IdentityReport verify_reduction_brackets();

struct SphereHodgeReport {
  int h10 = 0;  ///< invariant dbar-closed (1,0)-forms on S^6
  int h20 = 0;
  int h10_span = 0;  ///< kernel of dbar on span{phi^1, phi^2, phi^3} in the ambient complex
  int h20_span = 0;
  std::vector<int> plurigenera;  ///< P_1..P_M on the basic complex
  KodairaDimension kappa;
  SerreReport serre_20;  ///< H^{2,0} vs H^{1,3}
  SerreReport serre_10;  ///< H^{1,0} vs H^{2,3}
  int h13 = 0;
  int h23 = 0;
  int coframe_bundle_sections = 0;  ///< dbar-closed constant sections of span{phi^1..phi^3}
  bool connection_ok = false;        ///< omega = theta - conj(theta)^T is skew-Hermitian with (0,1)-part theta
};
SphereHodgeReport s6_hodge_report(int max_m);

}  // namespace acx::g2
