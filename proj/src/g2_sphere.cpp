#include "acx/g2_sphere.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include "acx/expression.hpp"

namespace acx::g2 {

namespace {

constexpr int kDim = 14;

// Phi = e123 + e145 + e167 + e246 - e257 - e347 - e356 (1-based).
struct PhiTerm {
  int i, j, k, sign;
};
constexpr PhiTerm kPhi[] = {{1, 2, 3, 1}, {1, 4, 5, 1}, {1, 6, 7, 1}, {2, 4, 6, 1},
                            {2, 5, 7, -1}, {3, 4, 7, -1}, {3, 5, 6, -1}};

// The bracket table as printed; "[a,b]=[c,d]=v" lists two brackets with the same value.
constexpr const char* kBracketTable[] = {
    "[f1,f2]=h1+h2",        "[f1,f3]=2f6",          "[f1,f4]=f5",          "[f1,f5]=-f4",
    "[f1,f6]=-2f3",         "[f1,h1]=-(f2-h8)",     "[f1,h2]=-h8",         "[f1,h3]=-(f4+h6)",
    "[f1,h4]=f3",           "[f1,h5]=f6",           "[f1,h6]=-f5+h3",      "[f1,h7]=0",
    "[f1,h8]=h2",           "[f2,f3]=f5-h3",        "[f2,f4]=-h4",         "[f2,f5]=-f3+h5",
    "[f2,f6]=h6",           "[f2,h1]=f1+h7",        "[f2,h2]=-h7",         "[f2,h3]=f3-h5",
    "[f2,h4]=f4",           "[f2,h5]=-f5+h3",       "[f2,h6]=-f6",         "[f2,h7]=h2",
    "[f2,h8]=0",            "[f3,f4]=h2",           "[f3,f5]=h8",          "[f3,f6]=2f1",
    "[f3,h1]=f4+h6",        "[f3,h2]=-f4",          "[f3,h3]=-(f2-h8)",    "[f3,h4]=-f1",
    "[f3,h5]=0",            "[f3,h6]=-(h1+h2)",     "[f3,h7]=f6",          "[f3,h8]=-f5",
    "[f4,f5]=2(f1+h7)",     "[f4,f6]=h8",           "[f4,h1]=h5-f3",       "[f4,h2]=f3",
    "[f4,h3]=f1+h7",        "[f4,h4]=-f2",          "[f4,h5]=-(h1+h2)",    "[f4,h6]=0",
    "[f4,h7]=-f5",          "[f4,h8]=-f6",          "[f5,f6]=-h2",         "[f5,h1]=h4",
    "[f5,h2]=f6",           "[f5,h3]=0",            "[f5,h4]=-h1",         "[f5,h5]=f2-h8",
    "[f5,h6]=f1+h7",        "[f5,h7]=f4",           "[f5,h8]=f3",          "[f6,h1]=h3",
    "[f6,h2]=-f5",          "[f6,h3]=-h1",          "[f6,h4]=0",           "[f6,h5]=-f1",
    "[f6,h6]=f2",           "[f6,h7]=-f3",          "[f6,h8]=f4",          "[h1,h2]=0",
    "[h1,h3]=-2h4",         "[h2,h3]=h4",           "[h1,h4]=2h3",         "[h2,h4]=-h3",
    "[h1,h5]=[h2,h5]=-h6",  "[h1,h6]=[h2,h6]=h5",   "[h1,h7]=h8",          "[h2,h7]=-2h8",
    "[h1,h8]=-h7",          "[h2,h8]=2h7",
};

constexpr const char* kCoframe[] = {"f1 - i*f2", "f3 - i*f4", "f5 - i*f6", "h1 - i*h2",
                                    "h3 - i*h4", "h5 - i*h6", "h7 - i*h8"};

constexpr const char* kRealD[] = {
    "-f2^h1 - 2f3^f6 + f3^h4 - 2f4^f5 - f4^h3 - f5^h6 + f6^h5",
    "f3^h3 + f4^h4 - f5^h5 - f6^h6 + f1^h1",
    "-f1^h4 + 2f1^f6 + f2^f5 - f2^h3 + f4^h1 - f4^h2 - f5^h8 + f6^h7",
    "f1^f5 + f1^h3 - f2^h4 - f3^h1 + f3^h2 - f5^h7 - f6^h8",
    "-f1^f4 + f1^h6 - f2^f3 + f2^h5 + f3^h8 + f4^h7 + f6^h2",
    "-2f1^f3 - f1^h5 + f2^h6 - f3^h7 + f4^h8 - f5^h2",
};

constexpr const char* kDbarPhi[] = {
    "-i/2*phi1^phibar4 - i*phi2^phibar5 + i*phi3^phibar6",
    "-i/2*phi1^phibar3 - (1-i)/2*phi2^phibar4 + i*phi3^phibar7",
    "i/2*phi1^phibar2 - i/2*phi2^phibar1 + 1/2*phi3^phibar4",
};

// dbar of phi1^phi2, phi2^phi3, phi3^phi1.
constexpr int kPairs[3][2] = {{1, 2}, {2, 3}, {3, 1}};
constexpr const char* kDbar20[] = {
    "1/2*phi1^phi2^phibar4 + i*phi2^phi3^phibar6 - i*phi1^phi3^phibar7",
    "i/2*phi1^phi3^phibar3 - i/2*phi2^phi3^phibar4 + i/2*phi1^phi2^phibar2",
    "-i/2*phi1^phi2^phibar1 + (1-i)/2*phi1^phi3^phibar4 - i*phi2^phi3^phibar5",
};

struct PrintedBracket {
  const char* lhs;
  const char* rhs;
};
constexpr PrintedBracket kReductionBrackets[] = {
    {"[Xbar1,Xbar2]", "-i*X3 + i/2*Xbar5"}, {"[Xbar3,Xbar5]", "i/2*h1"},  {"[X3,Xbar3]", "i/2*h2"},
    {"[Xbar1,Xbar7]", "-i/2*h2"},           {"[Xbar2,Xbar7]", "i*Xbar6"}, {"[Xbar2,Xbar6]", "i/2*(h1+h2)"},
};

constexpr const char* kDualVectors[] = {"1/2*(f1+i*f2)", "1/2*(f3+i*f4)", "1/2*(f5+i*f6)", "1/2*(h1+i*h2)",
                                        "1/2*(h3+i*h4)", "1/2*(h5+i*h6)", "1/2*(h7+i*h8)"};

// dbar k3 = i k1 phibar6 + i k2 phibar7 + 1/2 k3 phibar4 and
// dbar l2 = -i l1 phibar6 + i/2 l2 phibar4 + i l3 phibar5, listed by coefficient function.
constexpr const char* kK3Equation[] = {"i*phibar6", "i*phibar7", "1/2*phibar4"};
constexpr const char* kL2Equation[] = {"-i*phibar6", "i/2*phibar4", "i*phibar5"};

int name_index(std::string_view name) {
  const auto& names = basis_names();
  auto it = std::find(names.begin(), names.end(), name);
  if (it == names.end()) throw std::invalid_argument("unknown g2 basis element '" + std::string(name) + "'");
  return static_cast<int>(it - names.begin());
}

int trailing_index(std::string_view name, std::string_view prefix, int max) {
  if (name.substr(0, prefix.size()) != prefix) return 0;
  const std::string_view digits = name.substr(prefix.size());
  if (digits.size() != 1 || digits[0] < '1' || digits[0] > '0' + max) return 0;
  return digits[0] - '0';
}

RealForm to_real_vector(const Vector& v) {
  RealForm r(kDim);
  for (int k = 0; k < kDim; ++k) r.add_term(1U << k, v[k]);
  return r;
}

RealForm parse_real(std::string_view text) {
  ExpressionParser<RealForm> p([](std::string_view name) { return RealForm::basis(kDim, name_index(name) + 1); },
                               RealForm::from_mask(kDim, 0));
  return p.parse(text);
}

Form parse_ambient_form(std::string_view text) {
  ExpressionParser<Form> p(
      [](std::string_view name) {
        if (int k = trailing_index(name, "phibar", 7)) return Form::phibar(7, k);
        if (int k = trailing_index(name, "phi", 7)) return Form::phi(7, k);
        throw std::invalid_argument("unknown coframe element '" + std::string(name) + "'");
      },
      Form::constant(7, 1));
  return p.parse(text);
}

const ComplexCoframe& ambient_coframe() {
  static const ComplexCoframe coframe = build_coframe(algebra(), j_tilde());
  return coframe;
}

// Complex vectors named X1..X7, Xbar1..Xbar7 or by the real basis.
Vector named_vector(std::string_view name) {
  if (int k = trailing_index(name, "Xbar", 7)) return ambient_coframe().dual_vector_bar(k - 1);
  if (int k = trailing_index(name, "X", 7)) return ambient_coframe().dual_vector(k - 1);
  Vector v(kDim);
  v[name_index(name)] = 1;
  return v;
}

RealForm parse_complex_vector(std::string_view text) {
  ExpressionParser<RealForm> p([](std::string_view name) { return to_real_vector(named_vector(name)); },
                               RealForm::from_mask(kDim, 0));
  return p.parse(text);
}

std::string render_in_frame(const Vector& v) {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> n;
    for (int a = 1; a <= 7; ++a) n.push_back("X" + std::to_string(a));
    for (int a = 1; a <= 7; ++a) n.push_back("Xbar" + std::to_string(a));
    return n;
  }();
  return to_real_vector(ambient_coframe().components(v)).to_string(names);
}

const KnownErratum* find_erratum(const std::string& label) {
  for (const KnownErratum& e : known_errata())
    if (e.label == label) return &e;
  return nullptr;
}

template <class V, class Parse>
IdentityCheck compare(std::string label, std::string printed, const V& computed, std::string computed_text, Parse parse) {
  IdentityCheck c{std::move(label), std::move(printed), std::move(computed_text), false, false};
  c.match = parse(c.printed) == computed;
  if (!c.match)
    if (const KnownErratum* e = find_erratum(c.label)) c.preregistered = parse(e->recomputed) == computed;
  return c;
}

// Splits "[a,b]" into its two names.
std::pair<std::string, std::string> bracket_operands(std::string_view lhs) {
  if (lhs.size() < 5 || lhs.front() != '[' || lhs.back() != ']') throw std::invalid_argument("malformed bracket '" + std::string(lhs) + "'");
  const auto comma = lhs.find(',');
  if (comma == std::string_view::npos) throw std::invalid_argument("malformed bracket '" + std::string(lhs) + "'");
  return {std::string(lhs.substr(1, comma - 1)), std::string(lhs.substr(comma + 1, lhs.size() - comma - 2))};
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

// dbar sigma_a = sum_b theta_a^b ^ sigma_b for (p,0)-forms sigma_a that are +-monomials.
FormMatrix connection_on_span(const InvariantComplex& complex, const std::vector<Form>& span) {
  const int n = complex.n();
  const uint32_t holo_all = (1U << n) - 1;
  std::vector<std::pair<uint32_t, Scalar>> monos;
  for (const Form& s : span) {
    if (s.terms().size() != 1) throw std::invalid_argument("span elements must be single monomials");
    monos.push_back(*s.terms().begin());
  }
  FormMatrix theta(span.size(), std::vector<Form>(span.size(), Form(n)));
  for (size_t a = 0; a < span.size(); ++a) {
    const int p = std::popcount(monos[a].first);
    const Form image = complex.dbar(span[a]);
    for (const auto& [m, c] : image.terms()) {
      const uint32_t holo = m & holo_all;
      auto it = std::find_if(monos.begin(), monos.end(), [&](const auto& x) { return x.first == holo; });
      if (it == monos.end()) throw std::invalid_argument("dbar leaves the span");
      // mono(H + kbar) = mono(H) ^ phibar^k = (-1)^p phibar^k ^ mono(H), and sigma_b = s_b mono(H).
      const Scalar sign = p % 2 == 0 ? Scalar(1) : Scalar(-1);
      theta[a][it - monos.begin()].add_term(m & ~holo_all, sign * c / it->second);
    }
  }
  return theta;
}

}  // namespace

const std::vector<std::string>& basis_names() {
  static const std::vector<std::string> names = {"f1", "f2", "f3", "f4", "f5", "f6", "h1",
                                                 "h2", "h3", "h4", "h5", "h6", "h7", "h8"};
  return names;
}

// ---- matrices -------------------------------------------------------------------------------

G2Element G2Element::from_coordinates(const Vector& c) {
  if (c.size() != kDim) throw std::invalid_argument("g2 coordinates need 14 entries");
  G2Element e;
  std::copy(c.begin(), c.begin() + 6, e.x.begin());
  std::copy(c.begin() + 6, c.end(), e.y.begin());
  return e;
}

Matrix G2Element::matrix() const {
  const auto& [x1, x2, x3, x4, x5, x6] = x;
  const auto& [y1, y2, y3, y4, y5, y6, y7, y8] = y;
  const Scalar z;
  return Matrix::from_rows({
      {z, x1, -x2, x3, -x4, x5, -x6},
      {-x1, z, y1, -x6 + y4, x5 + y3, x4 - y6, -x3 - y5},
      {x2, -y1, z, -y3, y4, y5, -y6},
      {-x3, x6 - y4, y3, z, -y1 + y2, -x2 - y8, x1 - y7},
      {x4, -x5 - y3, -y4, y1 - y2, z, y7, -y8},
      {-x5, -x4 + y6, -y5, x2 + y8, -y7, z, -y2},
      {x6, x3 + y5, y6, -x1 + y7, y8, y2, z},
  });
}

G2Element G2Element::from_matrix(const Matrix& a) {
  if (a.rows() != 7 || a.cols() != 7) throw std::invalid_argument("g2 matrices are 7x7");
  G2Element e;
  e.x = {a(0, 1), -a(0, 2), a(0, 3), -a(0, 4), a(0, 5), -a(0, 6)};
  e.y = {a(1, 2), -a(5, 6), -a(2, 3), a(2, 4), a(2, 5), -a(2, 6), a(4, 5), -a(4, 6)};
  if (!(e.matrix() == a)) throw std::invalid_argument("matrix is not in g2");
  return e;
}

Vector G2Element::coordinates() const {
  Vector c(x.begin(), x.end());
  c.insert(c.end(), y.begin(), y.end());
  return c;
}

int epsilon(int i, int j, int k) {
  static const std::vector<int> table = [] {
    std::vector<int> t(343, 0);
    for (const PhiTerm& term : kPhi) {
      const int idx[3] = {term.i - 1, term.j - 1, term.k - 1};
      // The six permutations with their signs.
      const int perms[6][4] = {{0, 1, 2, 1}, {1, 2, 0, 1}, {2, 0, 1, 1}, {1, 0, 2, -1}, {0, 2, 1, -1}, {2, 1, 0, -1}};
      for (const auto& p : perms) t[idx[p[0]] * 49 + idx[p[1]] * 7 + idx[p[2]]] = term.sign * p[3];
    }
    return t;
  }();
  return table[i * 49 + j * 7 + k];
}

bool satisfies_membership(const Matrix& a) {
  if (a.rows() != 7 || a.cols() != 7) return false;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j)
      if (!(a(i, j) == -a(j, i))) return false;
  for (int i = 0; i < 7; ++i) {
    Scalar s;
    for (int j = 0; j < 7; ++j)
      for (int k = 0; k < 7; ++k)
        if (int e = epsilon(i, j, k)) s += Scalar(e) * a(j, k);
    if (!s.is_zero()) return false;
  }
  return true;
}

bool preserves_phi(const Matrix& a) {
  for (int i = 0; i < 7; ++i)
    for (int j = i + 1; j < 7; ++j)
      for (int k = j + 1; k < 7; ++k) {
        Scalar s;
        for (int l = 0; l < 7; ++l)
          s += a(l, i) * Scalar(epsilon(l, j, k)) + a(l, j) * Scalar(epsilon(i, l, k)) + a(l, k) * Scalar(epsilon(i, j, l));
        if (!s.is_zero()) return false;
      }
  return true;
}

std::vector<G2Element> basis() {
  std::vector<G2Element> out;
  for (int k = 0; k < kDim; ++k) {
    Vector c(kDim);
    c[k] = 1;
    out.push_back(G2Element::from_coordinates(c));
  }
  return out;
}

G2Element bracket(const G2Element& a, const G2Element& b) {
  const Matrix c = commutator(a.matrix(), b.matrix());
  if (!satisfies_membership(c)) throw std::logic_error("commutator left g2");
  try {
    return G2Element::from_matrix(c);
  } catch (const std::invalid_argument&) {
    throw std::logic_error("commutator is not in the span of the g2 basis");
  }
}

LieAlgebra algebra() {
  static const LieAlgebra alg = [] {
    const std::vector<G2Element> b = basis();
    std::vector<LieAlgebra::Bracket> brackets;
    for (int i = 0; i < kDim; ++i)
      for (int j = i + 1; j < kDim; ++j) {
        Vector out = bracket(b[i], b[j]).coordinates();
        if (std::any_of(out.begin(), out.end(), [](const Scalar& s) { return !s.is_zero(); }))
          brackets.push_back({i + 1, j + 1, std::move(out)});
      }
    return LieAlgebra(kDim, brackets, basis_names());
  }();
  return alg;
}

// ---- cross product ----------------------------------------------------------------------------

Vec7 unit_vector(int k) {
  Vec7 v;
  v.at(k) = 1;
  return v;
}

Scalar dot(const Vec7& u, const Vec7& v) {
  Scalar s;
  for (int i = 0; i < 7; ++i) s += u[i] * v[i];
  return s;
}

Vec7 cross(const Vec7& u, const Vec7& v) {
  Vec7 w;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      if (u[i].is_zero() || v[j].is_zero()) continue;
      for (int k = 0; k < 7; ++k)
        if (int e = epsilon(i, j, k)) w[k] += Scalar(e) * u[i] * v[j];
    }
  return w;
}

Matrix j_at_point(const Vec7& u) {
  if (!(dot(u, u) == Scalar(1))) throw std::invalid_argument("J_u needs a unit vector");
  Matrix m(7, 7);
  for (int j = 0; j < 7; ++j) {
    const Vec7 c = cross(u, unit_vector(j));
    for (int i = 0; i < 7; ++i) m(i, j) = c[i];
  }
  return m;
}

Vec7 dp(const G2Element& a) {
  const Matrix m = a.matrix();
  Vec7 v;
  for (int i = 0; i < 7; ++i) v[i] = m(i, 0);
  return v;
}

ACStructure j_tilde() {
  Matrix j(kDim, kDim);
  for (int k = 0; k < kDim; k += 2) {
    j(k + 1, k) = -1;  // J~ e_k = -e_{k+1}
    j(k, k + 1) = 1;
  }
  return ACStructure(j);
}

// ---- reports --------------------------------------------------------------------------------

const std::vector<KnownErratum>& known_errata() {
  static const std::vector<KnownErratum> errata = {
      {"[Xbar2,Xbar7]", "i*Xbar6", "i*Xbar3"},
  };
  return errata;
}

std::vector<IdentityCheck> IdentityReport::diffs() const {
  std::vector<IdentityCheck> out;
  for (const IdentityCheck& c : entries)
    if (!c.match) out.push_back(c);
  return out;
}

bool IdentityReport::passed() const {
  return std::all_of(entries.begin(), entries.end(), [](const IdentityCheck& c) { return c.match || c.preregistered; });
}

BracketTableReport verify_bracket_table() {
  BracketTableReport report;
  const std::vector<G2Element> b = basis();
  std::set<std::pair<int, int>> listed;
  for (const char* line : kBracketTable) {
    const std::string text(line);
    std::vector<std::string> parts;
    size_t start = 0;
    for (size_t eq; (eq = text.find('=', start)) != std::string::npos; start = eq + 1) parts.push_back(text.substr(start, eq - start));
    const std::string rhs = text.substr(start);
    for (const std::string& lhs : parts) {
      const auto [u, v] = bracket_operands(lhs);
      const int i = name_index(u);
      const int j = name_index(v);
      listed.insert({std::min(i, j), std::max(i, j)});
      const RealForm computed = to_real_vector(bracket(b[i], b[j]).coordinates());
      report.table.entries.push_back(compare(lhs, rhs, computed, computed.to_string(basis_names()), parse_real));
    }
  }
  report.pairs_listed = static_cast<int>(listed.size());

  std::vector<Matrix> mats;
  for (const G2Element& e : b) mats.push_back(e.matrix());
  for (int i = 0; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j)
      for (int k = j + 1; k < kDim; ++k) {
        ++report.jacobi_triples;
        const Matrix r = commutator(commutator(mats[i], mats[j]), mats[k]) + commutator(commutator(mats[j], mats[k]), mats[i]) +
                         commutator(commutator(mats[k], mats[i]), mats[j]);
        if (!r.is_zero()) ++report.jacobi_failures;
      }
  report.h_closed = true;
  for (int i = 6; i < kDim; ++i)
    for (int j = i + 1; j < kDim; ++j) {
      const G2Element c = bracket(b[i], b[j]);
      if (std::any_of(c.x.begin(), c.x.end(), [](const Scalar& s) { return !s.is_zero(); })) report.h_closed = false;
    }
  return report;
}

bool G2StructureChecks::passed() const {
  return span_rank == kDim && basis_members && basis_preserves_phi && cross_identities && dp_values && dp_kernel_dimension == 8 &&
         pseudoholomorphic;
}

G2StructureChecks structure_checks() {
  G2StructureChecks out;
  const std::vector<G2Element> b = basis();
  Matrix flat(kDim, 49);
  for (int k = 0; k < kDim; ++k) {
    const Matrix m = b[k].matrix();
    for (int i = 0; i < 49; ++i) flat(k, i) = m(i / 7, i % 7);
  }
  out.span_rank = flat.rank();
  out.basis_members = std::all_of(b.begin(), b.end(), [](const G2Element& e) { return satisfies_membership(e.matrix()); });
  out.basis_preserves_phi = std::all_of(b.begin(), b.end(), [](const G2Element& e) { return preserves_phi(e.matrix()); });

  out.cross_identities = true;
  for (int i = 0; i < 7; ++i)
    for (int j = 0; j < 7; ++j) {
      const Vec7 u = unit_vector(i);
      const Vec7 v = unit_vector(j);
      const Vec7 uv = cross(u, v);
      const Vec7 lhs = cross(u, uv);
      Vec7 rhs;
      for (int k = 0; k < 7; ++k) rhs[k] = dot(u, v) * u[k] - dot(u, u) * v[k];
      if (!dot(uv, u).is_zero() || !(lhs == rhs)) out.cross_identities = false;
    }

  out.dp_values = true;
  Matrix dpm(7, kDim);
  for (int k = 0; k < kDim; ++k) {
    const Vec7 v = dp(b[k]);
    Vec7 expected;
    if (k < 6) expected[k + 1] = (k + 1) % 2 == 0 ? 1 : -1;  // dp(f_i) = (-1)^i e_{i+1}
    if (!(v == expected)) out.dp_values = false;
    for (int i = 0; i < 7; ++i) dpm(i, k) = v[i];
  }
  out.dp_kernel_dimension = static_cast<int>(dpm.kernel().size());

  const Matrix j_e1 = j_at_point(unit_vector(0));
  const ACStructure jt = j_tilde();
  out.pseudoholomorphic = true;
  for (int k = 0; k < kDim; ++k) {
    const Vec7 lhs = dp(G2Element::from_coordinates(jt.apply(b[k].coordinates())));
    const Vec7 v = dp(b[k]);
    const Vector rhs = j_e1 * Vector(v.begin(), v.end());
    if (!(Vector(lhs.begin(), lhs.end()) == rhs)) out.pseudoholomorphic = false;
  }
  return out;
}

MembershipSample random_membership_check(unsigned seed, int members, int outsiders) {
  std::mt19937 rng(seed);
  std::uniform_int_distribution<int> coef(-9, 9);
  const std::vector<G2Element> b = basis();
  Matrix span(kDim + 1, 49);
  for (int k = 0; k < kDim; ++k) {
    const Matrix m = b[k].matrix();
    for (int i = 0; i < 49; ++i) span(k, i) = m(i / 7, i % 7);
  }
  MembershipSample out;
  for (int s = 0; s < members; ++s) {
    Vector c(kDim);
    for (Scalar& v : c) v = coef(rng);
    const Matrix m = G2Element::from_coordinates(c).matrix();
    ++out.members;
    if (satisfies_membership(m) && preserves_phi(m)) ++out.members_passed;
  }
  while (out.outsiders < outsiders) {
    Matrix m(7, 7);
    for (int i = 0; i < 7; ++i)
      for (int j = i + 1; j < 7; ++j) {
        m(i, j) = coef(rng);
        m(j, i) = -m(i, j);
      }
    for (int i = 0; i < 49; ++i) span(kDim, i) = m(i / 7, i % 7);
    if (span.rank() != kDim + 1) continue;  // landed in g2; draw again
    ++out.outsiders;
    if (!satisfies_membership(m)) ++out.outsiders_rejected;
  }
  return out;
}

LieComplex ambient_complex() { return LieComplex(algebra(), ambient_coframe()); }

// ---- S^6 --------------------------------------------------------------------------------------

namespace {

// Basic bits: holomorphic 0..2 and antiholomorphic 3..5 over n = 3; 0..2 and 7..9 over n = 7.
uint32_t lift_mask(uint32_t m) { return (m & 0x7U) | ((m & 0x38U) << 4); }

}  // namespace

Form SphereComplex::lift(const Form& x) {
  if (x.n() != 3) throw std::invalid_argument("forms on S^6 have n = 3");
  Form out(7);
  for (const auto& [m, c] : x.terms()) out.add_term(lift_mask(m), c);
  return out;
}

Form SphereComplex::project(const Form& x) {
  constexpr uint32_t kBasicBits = 0x7U | (0x7U << 7);
  Form out(3);
  for (const auto& [m, c] : x.terms()) {
    if ((m & ~kBasicBits) != 0) throw std::logic_error("form is not horizontal for S^6");
    out.add_term((m & 0x7U) | ((m >> 4) & 0x38U), c);
  }
  return out;
}

SphereComplex::SphereComplex() : ambient_(ambient_complex()), sections_(16) {
  std::vector<Vector> h_frames;
  for (int k = 6; k < kDim; ++k) {
    Vector e(kDim);
    e[k] = 1;
    h_frames.push_back(ambient_.coframe().components(e));
  }
  for (uint32_t m = 0; m < 64; ++m) {
    // Collect candidates by bidegree.
    const auto [p, q] = Form::bidegree(3, m);
    sections_[4 * p + q].push_back(Form::from_mask(3, m));
  }
  for (int p = 0; p <= 3; ++p)
    for (int q = 0; q <= 3; ++q) {
      const std::vector<Form> candidates = std::move(sections_[4 * p + q]);
      // Rows: (h element, output monomial); columns: candidates.
      std::map<std::pair<int, uint32_t>, std::vector<Scalar>> rows;
      for (size_t c = 0; c < candidates.size(); ++c) {
        const Form dx = ambient_.d(lift(candidates[c]));
        for (size_t k = 0; k < h_frames.size(); ++k) {
          const Form contracted = interior(h_frames[k], dx);
          for (const auto& [mask, v] : contracted.terms()) {
            auto& row = rows[{static_cast<int>(k), mask}];
            row.resize(candidates.size());
            row[c] = v;
          }
        }
      }
      Matrix a(static_cast<int>(rows.size()), static_cast<int>(candidates.size()));
      int r = 0;
      for (const auto& [key, row] : rows) {
        for (size_t c = 0; c < candidates.size(); ++c) a(r, static_cast<int>(c)) = row[c];
        ++r;
      }
      std::vector<Form>& out = sections_[4 * p + q];
      for (const Vector& v : a.kernel()) {
        Form f(3);
        for (size_t c = 0; c < candidates.size(); ++c) f += v[c] * candidates[c];
        out.push_back(std::move(f));
      }
    }
}

Form SphereComplex::d(const Form& x) const { return project(ambient_.d(lift(x))); }

std::vector<Form> SphereComplex::section_basis(int p, int q) const {
  if (p < 0 || q < 0 || p > 3 || q > 3) return {};
  return sections_[4 * p + q];
}

bool StructurePackage::passed() const {
  return coframe.passed() && real_d.passed() && dbar_phi.passed() && dbar_20.passed() && dbar_volume_zero &&
         dbar_volume_zero_printed && basic_volume_closed;
}

StructurePackage s6_structure_package() {
  StructurePackage out;
  const LieComplex amb = ambient_complex();
  const LieAlgebra& alg = amb.algebra();

  for (int a = 0; a < 7; ++a) {
    const RealForm computed = to_real_vector(amb.coframe().phi(a));
    out.coframe.entries.push_back(
        compare("phi" + std::to_string(a + 1), kCoframe[a], computed, computed.to_string(basis_names()), parse_real));
  }
  for (int k = 0; k < 6; ++k) {
    const RealForm computed = alg.d(RealForm::basis(kDim, k + 1));
    out.real_d.entries.push_back(
        compare("df" + std::to_string(k + 1), kRealD[k], computed, computed.to_string(basis_names()), parse_real));
  }
  std::vector<Form> printed_dbar;
  for (int i = 0; i < 3; ++i) {
    const Form computed = amb.dbar(Form::phi(7, i + 1));
    out.dbar_phi.entries.push_back(
        compare("dbar phi" + std::to_string(i + 1), kDbarPhi[i], computed, computed.to_string(), parse_ambient_form));
    printed_dbar.push_back(parse_ambient_form(kDbarPhi[i]));
  }
  for (int r = 0; r < 3; ++r) {
    const auto [a, b] = std::pair{kPairs[r][0], kPairs[r][1]};
    const Form computed = amb.dbar(wedge(Form::phi(7, a), Form::phi(7, b)));
    out.dbar_20.entries.push_back(compare("dbar(phi" + std::to_string(a) + "^phi" + std::to_string(b) + ")", kDbar20[r], computed,
                                          computed.to_string(), parse_ambient_form));
  }
  const Form p1 = Form::phi(7, 1);
  const Form p2 = Form::phi(7, 2);
  const Form p3 = Form::phi(7, 3);
  const Form vol = wedge(wedge(p1, p2), p3);
  out.dbar_volume_zero = amb.dbar(vol).is_zero();
  out.dbar_volume_zero_printed = (wedge(wedge(printed_dbar[0], p2), p3) - wedge(wedge(p1, printed_dbar[1]), p3) +
                                  wedge(wedge(p1, p2), printed_dbar[2]))
                                     .is_zero();

  const SphereComplex sphere;
  const Form vol3 = Form::monomial(3, {1, 2, 3}, {});
  const std::vector<Form> top = sphere.section_basis(3, 0);
  out.basic_volume_closed = top.size() == 1 && top[0].terms().size() == 1 && top[0].terms().begin()->first == vol3.terms().begin()->first &&
                            sphere.dbar(vol3).is_zero();
  return out;
}

IdentityReport verify_reduction_brackets() {
  IdentityReport out;
  const LieAlgebra alg = algebra();
  const ComplexCoframe& cf = ambient_coframe();
  auto render_real = [](const RealForm& r) { return r.to_string(basis_names()); };

  for (int a = 0; a < 7; ++a) {
    const RealForm computed = to_real_vector(cf.dual_vector(a));
    out.entries.push_back(compare("X" + std::to_string(a + 1), kDualVectors[a], computed, render_real(computed), parse_complex_vector));
  }
  for (const PrintedBracket& pb : kReductionBrackets) {
    const auto [u, v] = bracket_operands(pb.lhs);
    const Vector value = alg.bracket(named_vector(u), named_vector(v));
    out.entries.push_back(compare(pb.lhs, pb.rhs, to_real_vector(value), render_in_frame(value), parse_complex_vector));
  }

  // dbar of the coefficients of k1 phi1 + k2 phi2 + k3 phi3 and of l1 phi12 + l2 phi23 + l3 phi31.
  const LieComplex amb = ambient_complex();
  auto coefficient_checks = [&](const std::vector<Form>& span, int target, const char* const* printed, const std::string& prefix) {
    const FormMatrix theta = connection_on_span(amb, span);
    for (size_t a = 0; a < span.size(); ++a) {
      const Form computed = -theta[a][target];
      out.entries.push_back(compare("dbar " + prefix + std::to_string(target + 1) + " coefficient of " + prefix + std::to_string(a + 1),
                                    printed[a], computed, computed.to_string(), parse_ambient_form));
    }
  };
  coefficient_checks({Form::phi(7, 1), Form::phi(7, 2), Form::phi(7, 3)}, 2, kK3Equation, "k");
  std::vector<Form> pairs;
  for (const auto& pr : kPairs) pairs.push_back(wedge(Form::phi(7, pr[0]), Form::phi(7, pr[1])));
  coefficient_checks(pairs, 1, kL2Equation, "l");
  return out;
}

SphereHodgeReport s6_hodge_report(int max_m) {
  if (max_m < 1) throw std::invalid_argument("profile length must be at least 1");
  SphereHodgeReport out;
  const SphereComplex sphere;
  const LieComplex& amb = sphere.ambient();
  const PseudoholStructure trivial3 = PseudoholStructure::trivial(3, 1);
  out.h10 = invariant_sections(sphere, trivial3, 1).dimension;
  out.h20 = invariant_sections(sphere, trivial3, 2).dimension;

  const PseudoholStructure trivial7 = PseudoholStructure::trivial(7, 1);
  const Form p1 = Form::phi(7, 1);
  const Form p2 = Form::phi(7, 2);
  const Form p3 = Form::phi(7, 3);
  out.h10_span = sections_on_span(amb, trivial7, {p1, p2, p3}).dimension;
  out.h20_span = sections_on_span(amb, trivial7, {wedge(p1, p2), wedge(p2, p3), wedge(p3, p1)}).dimension;

  std::vector<long> values;
  for (int m = 1; m <= max_m; ++m) {
    const int pm = invariant_sections(sphere, canonical_dbar(sphere, m).structure(), 0).dimension;
    out.plurigenera.push_back(pm);
    values.push_back(pm);
  }
  out.kappa = kodaira_dimension(PlurigeneraProfile::exact(values));

  const Form zero(3);
  out.serre_20 = serre_pairing_check(sphere, 2, 0, zero);
  out.serre_10 = serre_pairing_check(sphere, 1, 0, zero);
  out.h13 = invariant_harmonic_space(sphere, 1, 3).dimension;
  out.h23 = invariant_harmonic_space(sphere, 2, 3).dimension;

  const PseudoholStructure tangent = coframe_bundle(amb, {1, 2, 3});
  out.coframe_bundle_sections = invariant_sections(amb, tangent, 0).dimension;
  const FormMatrix omega = hermitian_connection(tangent);
  out.connection_ok = is_skew_hermitian(omega) && project_bidegree(omega, 0, 1) == tangent.theta();
  return out;
}

}  // namespace acx::g2
