#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "acx/scalar.hpp"

namespace acx {

/// Strictly increasing list of 1-based indices.
class MultiIndex {
 public:
  MultiIndex() = default;
  MultiIndex(std::initializer_list<int> idx) : MultiIndex(std::vector<int>(idx)) {}
  explicit MultiIndex(std::vector<int> idx);
  static MultiIndex from_bits(uint32_t bits);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }
  /// Bit i-1 set for each index i.
  uint32_t bits() const;

  friend bool operator==(const MultiIndex&, const MultiIndex&) = default;

 private:
  std::vector<int> indices_;
};

/// Complex form over the coframe {phi^1..phi^n, phibar^1..phibar^n} with constant coefficients.
/// A monomial is a bitmask: bit j-1 is phi^j, bit n+j-1 is phibar^j. The canonical order of
/// factors is ascending bit order (holomorphic indices first).
class Form {
 public:
  using Mask = uint32_t;

  explicit Form(int n = 0);
  static Form constant(int n, Scalar c);
  static Form phi(int n, int i);
  static Form phibar(int n, int i);
  static Form monomial(int n, const MultiIndex& alpha, const MultiIndex& beta, Scalar c = 1);
  static Form from_mask(int n, Mask m, Scalar c = 1);

  int n() const { return n_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Mask m) const;
  Scalar coefficient(const MultiIndex& alpha, const MultiIndex& beta) const;

  static Mask mask(int n, const MultiIndex& alpha, const MultiIndex& beta);
  static MultiIndex holo_part(int n, Mask m) { return MultiIndex::from_bits(m & ((1U << n) - 1)); }
  static MultiIndex anti_part(int n, Mask m) { return MultiIndex::from_bits(m >> n); }
  static std::pair<int, int> bidegree(int n, Mask m);
  /// Bidegree if homogeneous and nonzero.
  std::optional<std::pair<int, int>> bidegree() const;
  /// Total degree if all terms share it (zero form: nullopt).
  std::optional<int> degree() const;

  Form operator-() const;
  Form& operator+=(const Form& o);
  Form& operator-=(const Form& o);
  Form& operator*=(const Scalar& c);
  friend Form operator+(Form x, const Form& y) { return x += y; }
  friend Form operator-(Form x, const Form& y) { return x -= y; }
  friend Form operator*(const Scalar& c, Form x) { return x *= c; }
  friend Form operator*(Form x, const Scalar& c) { return x *= c; }
  friend bool operator==(const Form&, const Form&) = default;

  void add_term(Mask m, const Scalar& c);
  /// Applies f to every coefficient, dropping zeros.
  template <class F>
  Form map_coefficients(F f) const {
    Form r(n_);
    for (const auto& [m, c] : terms_) r.add_term(m, f(c));
    return r;
  }

  std::string to_string() const;

 private:
  void check_same_n(const Form& o) const;
  int n_;
  std::map<Mask, Scalar> terms_;
};

/// Exterior product. Throws std::invalid_argument on dimension mismatch.
Form wedge(const Form& x, const Form& y);
/// Homogeneous (p,q) part.
Form project_bidegree(const Form& x, int p, int q);
/// Real structure: phi^j <-> phibar^j, coefficients conjugated.
Form conjugate(const Form& x);

/// Form over a real dual basis e^1..e^dim (dim <= 32) with scalar coefficients.
class RealForm {
 public:
  using Mask = uint32_t;

  explicit RealForm(int dim = 0);
  static RealForm basis(int dim, int k);
  static RealForm from_mask(int dim, Mask m, Scalar c = 1);

  int dim() const { return dim_; }
  const std::map<Mask, Scalar>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Scalar coefficient(Mask m) const;
  std::optional<int> degree() const;

  RealForm operator-() const;
  RealForm& operator+=(const RealForm& o);
  RealForm& operator-=(const RealForm& o);
  RealForm& operator*=(const Scalar& c);
  friend RealForm operator+(RealForm x, const RealForm& y) { return x += y; }
  friend RealForm operator-(RealForm x, const RealForm& y) { return x -= y; }
  friend RealForm operator*(const Scalar& c, RealForm x) { return x *= c; }
  friend bool operator==(const RealForm&, const RealForm&) = default;

  void add_term(Mask m, const Scalar& c);

  /// Terms rendered with the given generator names ("f1^h2"); default names e1..edim.
  std::string to_string(const std::vector<std::string>& names = {}) const;

 private:
  int dim_;
  std::map<Mask, Scalar> terms_;
};

RealForm wedge(const RealForm& x, const RealForm& y);

/// Coefficient rendering shared by form printers: "", "-", "3*", "(1+i)*" for a factor in front of a monomial.
std::string coefficient_prefix(const Scalar& c, bool first);

}  // namespace acx
