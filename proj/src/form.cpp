#include "acx/form.hpp"

#include <algorithm>
#include <stdexcept>

#include "acx/detail/masks.hpp"

namespace acx {

MultiIndex::MultiIndex(std::vector<int> idx) : indices_(std::move(idx)) {
  for (size_t k = 0; k < indices_.size(); ++k) {
    if (indices_[k] < 1 || indices_[k] > 32) throw std::invalid_argument("multi-index entry out of range");
    if (k > 0 && indices_[k] <= indices_[k - 1])
      throw std::invalid_argument("multi-index must be strictly increasing");
  }
}

MultiIndex MultiIndex::from_bits(uint32_t bits) {
  std::vector<int> idx;
  for (int j = 0; j < 32; ++j)
    if ((bits >> j) & 1U) idx.push_back(j + 1);
  return MultiIndex(std::move(idx));
}

uint32_t MultiIndex::bits() const {
  uint32_t b = 0;
  for (int i : indices_) b |= 1U << (i - 1);
  return b;
}

std::string coefficient_prefix(const Scalar& c, bool first) {
  const bool simple = c.den().is_constant() && c.num().terms().size() == 1 &&
                      (c.num().leading().second.is_real() || sgn(c.num().leading().second.re()) == 0);
  std::string s = c.to_string();
  bool negative = false;
  if (simple && s.front() == '-') {
    negative = true;
    s.erase(0, 1);
  }
  std::string body;
  if (!simple)
    body = "(" + s + ")*";
  else if (s != "1")
    body = s + "*";
  if (first) return (negative ? "-" : "") + body;
  return (negative ? " - " : " + ") + body;
}

namespace {

std::string render_term(const Scalar& c, bool first, const std::string& mono) {
  std::string prefix = coefficient_prefix(c, first);
  if (!mono.empty()) return prefix + mono;
  if (!prefix.empty() && prefix.back() == '*') {
    prefix.pop_back();
    return prefix;
  }
  return prefix + "1";
}

/// Masks ordered by degree, then lexicographically by their sorted generator lists.
template <class Map>
std::vector<std::pair<uint32_t, Scalar>> display_order(const Map& terms) {
  std::vector<std::pair<uint32_t, Scalar>> v(terms.begin(), terms.end());
  std::sort(v.begin(), v.end(), [](const auto& x, const auto& y) {
    const int dx = detail::bit_count(x.first);
    const int dy = detail::bit_count(y.first);
    if (dx != dy) return dx < dy;
    const uint32_t diff = x.first ^ y.first;
    return (x.first & diff & (~diff + 1)) != 0;
  });
  return v;
}

}  // namespace

Form::Form(int n) : n_(n) {
  if (n < 0 || n > 16) throw std::invalid_argument("complex dimension out of range");
}

Form Form::constant(int n, Scalar c) { return from_mask(n, 0, std::move(c)); }

Form Form::phi(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("coframe index out of range");
  return from_mask(n, 1U << (i - 1));
}

Form Form::phibar(int n, int i) {
  if (i < 1 || i > n) throw std::invalid_argument("coframe index out of range");
  return from_mask(n, 1U << (n + i - 1));
}

Form Form::monomial(int n, const MultiIndex& alpha, const MultiIndex& beta, Scalar c) {
  return from_mask(n, mask(n, alpha, beta), std::move(c));
}

Form Form::from_mask(int n, Mask m, Scalar c) {
  Form f(n);
  f.add_term(m, c);
  return f;
}

Form::Mask Form::mask(int n, const MultiIndex& alpha, const MultiIndex& beta) {
  const Mask a = alpha.bits();
  const Mask b = beta.bits();
  if ((a >> n) != 0 || (b >> n) != 0) throw std::invalid_argument("multi-index exceeds dimension");
  return a | (b << n);
}

std::pair<int, int> Form::bidegree(int n, Mask m) {
  return {detail::bit_count(m & ((1U << n) - 1)), detail::bit_count(m >> n)};
}

std::optional<std::pair<int, int>> Form::bidegree() const {
  std::optional<std::pair<int, int>> out;
  for (const auto& [m, c] : terms_) {
    const auto pq = bidegree(n_, m);
    if (out && *out != pq) return std::nullopt;
    out = pq;
  }
  return out;
}

std::optional<int> Form::degree() const {
  std::optional<int> out;
  for (const auto& [m, c] : terms_) {
    const int d = detail::bit_count(m);
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out;
}

Scalar Form::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

Scalar Form::coefficient(const MultiIndex& alpha, const MultiIndex& beta) const {
  return coefficient(mask(n_, alpha, beta));
}

void Form::check_same_n(const Form& o) const {
  if (n_ != o.n_) throw std::invalid_argument("form dimension mismatch");
}

void Form::add_term(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  if ((m >> (2 * n_)) != 0) throw std::invalid_argument("monomial exceeds dimension");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

Form Form::operator-() const {
  Form r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

Form& Form::operator+=(const Form& o) {
  check_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Form& Form::operator-=(const Form& o) {
  check_same_n(o);
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

Form& Form::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

Form wedge(const Form& x, const Form& y) {
  if (x.n() != y.n()) throw std::invalid_argument("form dimension mismatch");
  Form r(x.n());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      if ((mx & my) != 0) continue;
      const Scalar c = cx * cy;
      r.add_term(mx | my, detail::merge_sign(mx, my) < 0 ? -c : c);
    }
  return r;
}

Form project_bidegree(const Form& x, int p, int q) {
  if (p < 0 || q < 0 || p > x.n() || q > x.n()) throw std::invalid_argument("bidegree out of range");
  Form r(x.n());
  for (const auto& [m, c] : x.terms())
    if (Form::bidegree(x.n(), m) == std::pair{p, q}) r.add_term(m, c);
  return r;
}

Form conjugate(const Form& x) {
  const int n = x.n();
  const Form::Mask low = (1U << n) - 1;
  Form r(n);
  for (const auto& [m, c] : x.terms()) {
    const Form::Mask holo = m & low;
    const Form::Mask anti = m >> n;
    const Form::Mask swapped = anti | (holo << n);
    const bool odd = (detail::bit_count(holo) * detail::bit_count(anti)) % 2 != 0;
    const Scalar cc = c.conj();
    r.add_term(swapped, odd ? -cc : cc);
  }
  return r;
}

std::string Form::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_order(terms_)) {
    std::string mono;
    for (int b = 0; b < 2 * n_; ++b) {
      if (((m >> b) & 1U) == 0) continue;
      if (!mono.empty()) mono += "^";
      mono += b < n_ ? "phi" + std::to_string(b + 1) : "phibar" + std::to_string(b - n_ + 1);
    }
    out += render_term(c, first, mono);
    first = false;
  }
  return out;
}

RealForm::RealForm(int dim) : dim_(dim) {
  if (dim < 0 || dim > 32) throw std::invalid_argument("real dimension out of range");
}

RealForm RealForm::basis(int dim, int k) {
  if (k < 1 || k > dim) throw std::invalid_argument("basis index out of range");
  return from_mask(dim, 1U << (k - 1));
}

RealForm RealForm::from_mask(int dim, Mask m, Scalar c) {
  RealForm f(dim);
  f.add_term(m, c);
  return f;
}

Scalar RealForm::coefficient(Mask m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Scalar() : it->second;
}

std::optional<int> RealForm::degree() const {
  std::optional<int> out;
  for (const auto& [m, c] : terms_) {
    const int d = detail::bit_count(m);
    if (out && *out != d) return std::nullopt;
    out = d;
  }
  return out;
}

void RealForm::add_term(Mask m, const Scalar& c) {
  if (c.is_zero()) return;
  if (dim_ < 32 && (m >> dim_) != 0) throw std::invalid_argument("monomial exceeds dimension");
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

RealForm RealForm::operator-() const {
  RealForm r = *this;
  for (auto& [m, c] : r.terms_) c = -c;
  return r;
}

RealForm& RealForm::operator+=(const RealForm& o) {
  if (dim_ != o.dim_) throw std::invalid_argument("form dimension mismatch");
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

RealForm& RealForm::operator-=(const RealForm& o) { return *this += -o; }

RealForm& RealForm::operator*=(const Scalar& c) {
  if (c.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

RealForm wedge(const RealForm& x, const RealForm& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("form dimension mismatch");
  RealForm r(x.dim());
  for (const auto& [mx, cx] : x.terms())
    for (const auto& [my, cy] : y.terms()) {
      if ((mx & my) != 0) continue;
      const Scalar c = cx * cy;
      r.add_term(mx | my, detail::merge_sign(mx, my) < 0 ? -c : c);
    }
  return r;
}

std::string RealForm::to_string(const std::vector<std::string>& names) const {
  if (terms_.empty()) return "0";
  auto name = [&](int k) { return names.empty() ? "e" + std::to_string(k + 1) : names.at(k); };
  std::string out;
  bool first = true;
  for (const auto& [m, c] : display_order(terms_)) {
    std::string mono;
    for (int b = 0; b < dim_; ++b) {
      if (((m >> b) & 1U) == 0) continue;
      if (!mono.empty()) mono += "^";
      mono += name(b);
    }
    out += render_term(c, first, mono);
    first = false;
  }
  return out;
}

}  // namespace acx
