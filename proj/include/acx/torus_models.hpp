#pragma once

#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "acx/invariant_complex.hpp"
#include "acx/pi_param.hpp"
#include "acx/scalar.hpp"

namespace acx {

/// Raised when an input falls outside the cases a derivation covers; callers must not guess.
class OutsideDerivationError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Finite Fourier sum  sum_nu c_nu exp(2 pi i nu.x)  on the k-torus R^k / Z^k.
/// Coefficients are exact scalars, so derivatives (which bring down 2 pi i nu_j) stay exact.
class TrigPoly {
 public:
  using Frequency = std::vector<int>;

  explicit TrigPoly(int k = 0) : k_(k) {}
  static TrigPoly constant(int k, const Scalar& c);
  static TrigPoly mode(int k, const Frequency& nu, const Scalar& c = 1);
  /// cos 2 pi nu.x and sin 2 pi nu.x
  static TrigPoly cos_mode(int k, const Frequency& nu);
  static TrigPoly sin_mode(int k, const Frequency& nu);

  int k() const { return k_; }
  const std::map<Frequency, Scalar>& terms() const { return terms_; }
  Scalar coefficient(const Frequency& nu) const;
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// c_{-nu} = conj(c_nu) for every nu.
  bool is_real() const;

  TrigPoly operator-() const;
  TrigPoly& operator+=(const TrigPoly& o);
  TrigPoly& operator-=(const TrigPoly& o);
  friend TrigPoly operator+(TrigPoly x, const TrigPoly& y) { return x += y; }
  friend TrigPoly operator-(TrigPoly x, const TrigPoly& y) { return x -= y; }
  friend TrigPoly operator*(const Scalar& c, const TrigPoly& x);
  friend TrigPoly operator*(const TrigPoly& x, const TrigPoly& y);
  friend bool operator==(const TrigPoly&, const TrigPoly&) = default;

  TrigPoly conj() const;
  /// d/dx_j, j 1-based.
  TrigPoly partial(int j) const;
  /// d/dw and d/dwbar for w = x_1 + i x_2.
  TrigPoly d_dw() const;
  TrigPoly d_dwbar() const;

  /// "(-2*i*pi^2)*e(-1,-1,0,0)"; "0" when empty.
  std::string to_string() const;

 private:
  void add_term(const Frequency& nu, const Scalar& c);
  int k_;
  std::map<Frequency, Scalar> terms_;
};

// ---- Kodaira-Thurston family -------------------------------------------------------------

/// Fourier mode (k, l) on the base torus (t, x) solving c + pi (i k - l) = 0, if any.
std::optional<std::pair<long, long>> kt_base_mode(const Scalar& c);
/// P_m of J_a: fiberwise-constant f on the base solving df/dwbar + (m a / 4) f = 0.
/// Throws std::invalid_argument for m < 1.
int kt_plurigenus(const PiParam& a, int m);
/// The mode carrying the nonzero pluricanonical section, if P_m = 1.
std::optional<std::pair<long, long>> kt_plurigenus_mode(const PiParam& a, int m);

/// Intermediate data of the irregularity elimination for gamma = g1 phi1 + g2 phi2.
struct KtIrregularityTrace {
  std::optional<std::pair<long, long>> g2_mode;  ///< base mode allowed by dbar g2 = (a/4) g2 phibar1
  int g1_dimension = 0;                          ///< fiber functions killed by Vbar V: constants
  int g2_dimension = 0;                          ///< surviving g2 modes after V(g1) + (a/4) g2 = 0
  int dimension() const { return g1_dimension + g2_dimension; }
};
KtIrregularityTrace kt_irregularity_trace(const PiParam& a);
int kt_irregularity(const PiParam& a);

// ---- four-torus family ---------------------------------------------------------------------

/// d^2 (beta + i alpha) / dw dwbar. Throws std::invalid_argument unless alpha and beta are real
/// trigonometric polynomials on the same torus of dimension >= 2.
TrigPoly t4_obstruction(const TrigPoly& alpha, const TrigPoly& beta);
/// P_m for J(alpha, beta): 0 when the obstruction is nonzero, the complex-torus value when alpha
/// and beta are constant. Throws OutsideDerivationError otherwise.
int t4_plurigenus(const TrigPoly& alpha, const TrigPoly& beta, int m);
/// Invariant complex of the member with constant alpha, beta (an abelian R^4 with constant J).
/// Throws OutsideDerivationError for non-constant input.
LieComplex t4_constant_complex(const TrigPoly& alpha, const TrigPoly& beta);
/// h^{1,0}: 1 when the obstruction is nonzero, the complex-torus value for constants.
int t4_irregularity(const TrigPoly& alpha, const TrigPoly& beta);

// ---- plurigenera profiles ------------------------------------------------------------------

/// Closed integer interval; exact values have lo == hi.
struct Interval {
  long lo = 0;
  long hi = 0;
  bool exact() const { return lo == hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
  std::string to_string() const;
};

/// m = 1 gives [g-1, g]; m > 1 gives (2m-1)(g-1). Throws std::invalid_argument for g < 2 or m < 1.
Interval rr_plurigenus(int genus, int m);

enum class Growth { AllZero, Bounded, Polynomial };

class PlurigeneraProfile {
 public:
  /// values[m-1] = P_m. Throws std::invalid_argument when empty or with a negative or inverted interval.
  explicit PlurigeneraProfile(std::vector<Interval> values);
  static PlurigeneraProfile exact(const std::vector<long>& values);

  int max_m() const { return static_cast<int>(values_.size()); }
  const std::vector<Interval>& values() const { return values_; }
  const Interval& at(int m) const { return values_.at(m - 1); }

  /// Classification from the tail m in [ceil(M/2), M]: constant or periodic nonzero tails are
  /// Bounded, tails with constant nonzero d-th differences are Polynomial(d).
  /// Throws OutsideDerivationError when the tail fits neither.
  Growth growth() const;
  int degree() const;

  friend bool operator==(const PlurigeneraProfile& x, const PlurigeneraProfile& y) { return x.values_ == y.values_; }

 private:
  std::vector<Interval> values_;
  Growth growth_ = Growth::AllZero;
  int degree_ = 0;
  std::optional<std::string> refusal_;
};

/// Pointwise product; throws std::invalid_argument unless both profiles have the same M.
PlurigeneraProfile kunneth(const PlurigeneraProfile& x, const PlurigeneraProfile& y);

/// Kodaira dimension: -infinity or a nonnegative integer.
struct KodairaDimension {
  bool minus_infinity = true;
  int value = 0;
  static KodairaDimension of(int d) { return {false, d}; }
  friend bool operator==(const KodairaDimension&, const KodairaDimension&) = default;
  /// Sum on products.
  friend KodairaDimension operator+(const KodairaDimension& x, const KodairaDimension& y);
  std::string to_string() const;
};
KodairaDimension kodaira_dimension(const PlurigeneraProfile& profile);

namespace presets {

constexpr int kDefaultProfileLength = 12;

/// Smallest M >= 12 whose tail covers two periods of the Kodaira-Thurston sequence.
int kt_profile_length(const PiParam& a);
PlurigeneraProfile kodaira_thurston(const PiParam& a, int max_m);
/// Complex torus of dimension 1: P_m = 1, computed on the invariant complex.
PlurigeneraProfile torus(int max_m);
/// Compact Riemann surface of genus g >= 2: P_1 = g, P_m = (2m-1)(g-1).
PlurigeneraProfile riemann_surface(int genus, int max_m);
/// T^2 x S with the non-integrable structure built from a nonconstant h on S.
PlurigeneraProfile torus_times_surface(int genus, int max_m);

}  // namespace presets

/// P_1 of J_a across consecutive parameter values, for watching it jump.
struct DeformationRow {
  PiParam a;
  int p1;
};
std::vector<DeformationRow> kt_deformation_table(const std::vector<PiParam>& values);

}  // namespace acx
