#include "acx/polynomial.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace acx {

namespace {

// Dense univariate polynomial in pi over Q(i); index = degree, no trailing zeros.
using UPoly = std::vector<GaussRational>;

void trim(UPoly& p) {
  while (!p.empty() && p.back().is_zero()) p.pop_back();
}

int udeg(const UPoly& p) { return static_cast<int>(p.size()) - 1; }

UPoly usub_scaled_shift(UPoly a, const UPoly& b, const GaussRational& c, int shift) {
  if (static_cast<int>(a.size()) < udeg(b) + 1 + shift) a.resize(udeg(b) + 1 + shift);
  for (int k = 0; k <= udeg(b); ++k) a[k + shift] -= c * b[k];
  trim(a);
  return a;
}

// Returns {quotient, remainder}.
std::pair<UPoly, UPoly> udivmod(UPoly a, const UPoly& b) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  UPoly q;
  const GaussRational lead_inv = b.back().inverse();
  while (!a.empty() && udeg(a) >= udeg(b)) {
    const int shift = udeg(a) - udeg(b);
    const GaussRational c = a.back() * lead_inv;
    if (static_cast<int>(q.size()) < shift + 1) q.resize(shift + 1);
    q[shift] += c;
    a = usub_scaled_shift(std::move(a), b, c, shift);
  }
  trim(q);
  return {q, a};
}

UPoly umonic(UPoly p) {
  if (p.empty()) return p;
  const GaussRational inv = p.back().inverse();
  for (auto& c : p) c *= inv;
  return p;
}

UPoly ugcd(UPoly a, UPoly b) {
  while (!b.empty()) {
    UPoly r = udivmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return umonic(std::move(a));
}

UPoly umul(const UPoly& a, const UPoly& b) {
  if (a.empty() || b.empty()) return {};
  UPoly r(a.size() + b.size() - 1);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

UPoly uexact_div(const UPoly& a, const UPoly& b) {
  auto [q, r] = udivmod(a, b);
  if (!r.empty()) throw std::logic_error("inexact univariate division");
  return q;
}

// Bivariate polynomial viewed as a polynomial in a with coefficients in Q(i)[pi].
using Nested = std::vector<UPoly>;

void ntrim(Nested& p) {
  while (!p.empty() && p.back().empty()) p.pop_back();
}

int ndeg(const Nested& p) { return static_cast<int>(p.size()) - 1; }

Nested to_nested(const Poly& p) {
  Nested n;
  for (const auto& [e, c] : p.terms()) {
    if (static_cast<int>(n.size()) <= e.a) n.resize(e.a + 1);
    UPoly& u = n[e.a];
    if (static_cast<int>(u.size()) <= e.pi) u.resize(e.pi + 1);
    u[e.pi] += c;
  }
  for (auto& u : n) trim(u);
  ntrim(n);
  return n;
}

Poly from_nested(const Nested& n) {
  Poly out;
  for (int i = 0; i < static_cast<int>(n.size()); ++i)
    for (int j = 0; j < static_cast<int>(n[i].size()); ++j)
      if (!n[i][j].is_zero()) out += Poly::monomial({i, j}, n[i][j]);
  return out;
}

UPoly content(const Nested& n) {
  UPoly g;
  for (const auto& u : n) {
    g = ugcd(g, u);
    if (g.size() == 1) break;
  }
  return g;
}

Nested divide_content(const Nested& n, const UPoly& c) {
  Nested out;
  out.reserve(n.size());
  for (const auto& u : n) out.push_back(u.empty() ? UPoly{} : uexact_div(u, c));
  return out;
}

// Pseudo-remainder of a by b (deg a >= deg b, b != 0).
Nested prem(Nested a, const Nested& b) {
  const UPoly& lb = b.back();
  while (!a.empty() && ndeg(a) >= ndeg(b)) {
    const int shift = ndeg(a) - ndeg(b);
    const UPoly la = a.back();
    for (auto& u : a) u = umul(u, lb);
    for (int k = 0; k <= ndeg(b); ++k) {
      UPoly t = umul(la, b[k]);
      UPoly& target = a[k + shift];
      if (target.size() < t.size()) target.resize(t.size());
      for (size_t j = 0; j < t.size(); ++j) target[j] -= t[j];
      trim(target);
    }
    ntrim(a);
  }
  return a;
}

}  // namespace

Poly::Poly(GaussRational c) {
  if (!c.is_zero()) terms_.emplace_back(Exponent{}, std::move(c));
}

Poly Poly::symbol(Symbol s) {
  return monomial(s == Symbol::A ? Exponent{1, 0} : Exponent{0, 1}, GaussRational(1));
}

Poly Poly::monomial(Exponent e, GaussRational c) {
  if (e.a < 0 || e.pi < 0) throw std::invalid_argument("negative exponent");
  Poly p;
  if (!c.is_zero()) p.terms_.emplace_back(e, std::move(c));
  return p;
}

GaussRational Poly::constant_term() const {
  if (!terms_.empty() && terms_.back().first == Exponent{}) return terms_.back().second;
  return {};
}

int Poly::degree(Symbol s) const {
  int d = 0;
  for (const auto& [e, c] : terms_) d = std::max(d, s == Symbol::A ? e.a : e.pi);
  return d;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = -t.second;
  return r;
}

void Poly::add_term(const Exponent& e, const GaussRational& c) {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), e,
                             [](const Term& t, const Exponent& x) { return t.first > x; });
  if (it != terms_.end() && it->first == e) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  } else if (!c.is_zero()) {
    terms_.insert(it, {e, c});
  }
}

Poly& Poly::operator+=(const Poly& o) {
  std::vector<Term> merged;
  merged.reserve(terms_.size() + o.terms_.size());
  size_t i = 0;
  size_t j = 0;
  while (i < terms_.size() || j < o.terms_.size()) {
    if (j == o.terms_.size() || (i < terms_.size() && terms_[i].first > o.terms_[j].first)) {
      merged.push_back(std::move(terms_[i++]));
    } else if (i == terms_.size() || o.terms_[j].first > terms_[i].first) {
      merged.push_back(o.terms_[j++]);
    } else {
      GaussRational c = terms_[i].second + o.terms_[j].second;
      if (!c.is_zero()) merged.emplace_back(terms_[i].first, std::move(c));
      ++i;
      ++j;
    }
  }
  terms_ = std::move(merged);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) { return *this += -o; }

Poly operator*(const Poly& x, const Poly& y) {
  if (x.is_zero() || y.is_zero()) return {};
  if (x.is_constant()) return y.scaled(x.terms_[0].second);
  if (y.is_constant()) return x.scaled(y.terms_[0].second);
  std::map<Exponent, GaussRational, std::greater<>> acc;
  for (const auto& [ex, cx] : x.terms_)
    for (const auto& [ey, cy] : y.terms_) acc[ex + ey] += cx * cy;
  Poly r;
  for (auto& [e, c] : acc)
    if (!c.is_zero()) r.terms_.emplace_back(e, std::move(c));
  return r;
}

Poly Poly::scaled(const GaussRational& c) const {
  if (c.is_zero()) return {};
  Poly r = *this;
  for (auto& t : r.terms_) t.second *= c;
  return r;
}

Poly Poly::conj() const {
  Poly r = *this;
  for (auto& t : r.terms_) t.second = t.second.conj();
  return r;
}

std::optional<Poly> Poly::divide_exact(const Poly& divisor) const {
  if (divisor.is_zero()) throw std::domain_error("polynomial division by zero");
  if (divisor.is_constant()) return scaled(divisor.terms_[0].second.inverse());
  Poly rem = *this;
  Poly quot;
  const auto& [ld_exp, ld_coef] = divisor.leading();
  const GaussRational ld_inv = ld_coef.inverse();
  while (!rem.is_zero()) {
    const auto& [lr_exp, lr_coef] = rem.leading();
    if (!ld_exp.divides(lr_exp)) return std::nullopt;
    Poly t = monomial(lr_exp - ld_exp, lr_coef * ld_inv);
    rem -= t * divisor;
    quot += t;
  }
  return quot;
}

Poly Poly::gcd(const Poly& x, const Poly& y) {
  auto normalize = [](Poly p) {
    if (p.is_zero()) return p;
    return p.scaled(p.leading().second.inverse());
  };
  if (x.is_zero()) return normalize(y);
  if (y.is_zero()) return normalize(x);
  if (x.is_constant() || y.is_constant()) return Poly(1);

  Nested a = to_nested(x);
  Nested b = to_nested(y);
  const UPoly ca = content(a);
  const UPoly cb = content(b);
  const UPoly c = ugcd(ca, cb);
  a = divide_content(a, ca);
  b = divide_content(b, cb);
  if (ndeg(a) < ndeg(b)) std::swap(a, b);
  while (!b.empty() && ndeg(b) > 0) {
    Nested r = prem(a, b);
    a = std::move(b);
    if (r.empty()) {
      b.clear();
      break;
    }
    b = divide_content(r, content(r));
  }
  // A nonzero remainder of a-degree 0 means the primitive parts are coprime.
  Nested g = b.empty() ? a : Nested{UPoly{GaussRational(1)}};
  for (auto& u : g) u = umul(u, c);
  return normalize(from_nested(g));
}

Poly Poly::substitute(Symbol s, const Poly& value) const {
  Poly out;
  for (const auto& [e, c] : terms_) {
    const int power = s == Symbol::A ? e.a : e.pi;
    Poly term = monomial(s == Symbol::A ? Exponent{0, e.pi} : Exponent{e.a, 0}, c);
    for (int k = 0; k < power; ++k) term = term * value;
    out += term;
  }
  return out;
}

std::string Poly::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    std::string symbols;
    auto append_symbol = [&](const char* name, int power) {
      if (power == 0) return;
      if (!symbols.empty()) symbols += "*";
      symbols += name;
      if (power > 1) symbols += "^" + std::to_string(power);
    };
    append_symbol("a", e.a);
    append_symbol("pi", e.pi);

    std::string coef;
    bool negative = false;
    if (c.is_real()) {
      negative = sgn(c.re()) < 0;
      const mpq_class mag = abs(c.re());
      if (!(mag == 1 && !symbols.empty())) coef = mag.get_str();
    } else if (sgn(c.re()) == 0) {
      negative = sgn(c.im()) < 0;
      const mpq_class mag = abs(c.im());
      coef = mag == 1 ? "i" : mag.get_str() + "*i";
    } else {
      coef = terms_.size() == 1 && symbols.empty() ? c.to_string() : "(" + c.to_string() + ")";
    }
    std::string body = coef;
    if (!symbols.empty()) body = coef.empty() ? symbols : coef + "*" + symbols;
    if (first)
      out += negative ? "-" + body : body;
    else
      out += (negative ? "-" : "+") + body;
    first = false;
  }
  return out;
}

}  // namespace acx
