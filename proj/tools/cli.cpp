#include "cli.hpp"

#include <algorithm>
#include <filesystem>
#include <iomanip>
#include <map>
#include <memory>
#include <numeric>
#include <optional>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "acx/g2_sphere.hpp"
#include "acx/hodge.hpp"
#include "acx/torus_models.hpp"
#include "model_file.hpp"

namespace acx::cli {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kVersion = "1.0.0";

struct Options {
  std::string model;
  std::string a;
  std::string member = "paper";
  std::string alpha;
  std::string beta;
  std::string m = "1..6";
  std::string sweep;
  std::vector<std::string> factors;
  int genus = 2;
  int p = -1;
  int q = -1;
  int max_m = 0;
  unsigned seed = 1;
};

[[noreturn]] void bad_input(const std::string& what) { throw std::invalid_argument(what); }

// ---- argument parsing ------------------------------------------------------------------------

int parse_int(const std::string& text, const std::string& what) {
  size_t used = 0;
  int v = 0;
  try {
    v = std::stoi(text, &used);
  } catch (const std::exception&) {
    bad_input(what + ": expected an integer, got '" + text + "'");
  }
  if (used != text.size()) bad_input(what + ": expected an integer, got '" + text + "'");
  return v;
}

/// "4", "1..6" or "1,3,5"; every entry >= 1.
std::vector<int> parse_m(const std::string& text) {
  std::vector<int> out;
  const auto dots = text.find("..");
  if (dots != std::string::npos) {
    const int lo = parse_int(text.substr(0, dots), "--m");
    const int hi = parse_int(text.substr(dots + 2), "--m");
    if (hi < lo) bad_input("--m: empty range '" + text + "'");
    for (int m = lo; m <= hi; ++m) out.push_back(m);
  } else {
    std::stringstream ss(text);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(parse_int(item, "--m"));
  }
  if (out.empty()) bad_input("--m: no values");
  for (int m : out)
    if (m < 1) bad_input("--m: plurigenus index must be at least 1");
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

PiParam parse_a(const std::string& text) {
  try {
    return PiParam::parse(text);
  } catch (const std::invalid_argument& e) {
    bad_input(std::string("--a: ") + e.what());
  }
}

/// [[freq-vector, re, im], ...] with rational strings.
TrigPoly parse_trig(const std::string& text, const char* what) {
  Json doc;
  try {
    doc = Json::parse(text);
  } catch (const Json::parse_error& e) {
    bad_input(std::string(what) + ": not valid JSON: " + e.what());
  }
  if (!doc.is_array() || doc.empty()) bad_input(std::string(what) + ": expected a nonempty list of [freq, re, im]");
  std::optional<TrigPoly> out;
  for (size_t t = 0; t < doc.size(); ++t) {
    const std::string path = std::string(what) + "[" + std::to_string(t) + "]";
    const Json& term = doc[t];
    if (!term.is_array() || term.size() != 3 || !term[0].is_array()) bad_input(path + ": expected [freq-vector, re, im]");
    TrigPoly::Frequency nu;
    for (const Json& x : term[0]) {
      if (!x.is_number_integer()) bad_input(path + ": frequencies must be integers");
      nu.push_back(x.get<int>());
    }
    Scalar c;
    for (int part = 1; part <= 2; ++part) {
      const Json& v = term[part];
      std::string s = v.is_string() ? v.get<std::string>() : (v.is_number_integer() ? std::to_string(v.get<long>()) : "");
      if (s.empty()) bad_input(path + ": coefficients must be rational strings");
      try {
        const Scalar r = Scalar::parse_rational(s);
        c += part == 1 ? r : Scalar::i() * r;
      } catch (const std::invalid_argument& e) {
        bad_input(path + ": " + e.what());
      }
    }
    if (!out) out = TrigPoly(static_cast<int>(nu.size()));
    if (static_cast<int>(nu.size()) != out->k()) bad_input(path + ": frequency vectors must have equal length");
    *out += TrigPoly::mode(out->k(), nu, c);
  }
  return *out;
}

// ---- models ----------------------------------------------------------------------------------

enum class Kind { KT, T4, G2, File, Torus, Surface, TorusSurface };

struct Model {
  Kind kind = Kind::KT;
  std::string label;
  std::optional<ModelFile> file;
  std::optional<PiParam> a;
  TrigPoly alpha;
  TrigPoly beta;
  int genus = 2;
};

Model resolve_model(const std::string& name, const Options& o, bool allow_profiles) {
  Model m;
  m.label = name;
  static const std::map<std::string, Kind> presets = {{"kt", Kind::KT}, {"t4", Kind::T4}, {"g2", Kind::G2}};
  static const std::map<std::string, Kind> profile_presets = {
      {"torus", Kind::Torus}, {"surface", Kind::Surface}, {"torus-x-surface", Kind::TorusSurface}};
  if (auto it = presets.find(name); it != presets.end()) {
    m.kind = it->second;
  } else if (auto pt = profile_presets.find(name); allow_profiles && pt != profile_presets.end()) {
    m.kind = pt->second;
  } else if (std::filesystem::exists(name)) {
    m.kind = Kind::File;
    m.file = load_model(name);
  } else {
    bad_input("--model: '" + name + "' is neither a preset nor a readable model file");
  }
  if (!o.a.empty()) m.a = parse_a(o.a);
  if (m.kind == Kind::KT && !m.a) bad_input("the kt model needs --a (\"q*pi\" or \"generic\")");
  if (m.kind == Kind::File) m.a = m.file->parameter(m.a);
  if (m.kind == Kind::T4) {
    if (o.member != "paper" && o.member != "constant") bad_input("--member must be 'paper' or 'constant'");
    if (o.member == "constant") {
      m.alpha = TrigPoly::constant(4, 0);
      m.beta = TrigPoly::constant(4, 0);
    } else {
      m.alpha = TrigPoly::cos_mode(4, {1, 1, 0, 0});
      m.beta = TrigPoly::sin_mode(4, {1, 1, 0, 0});
    }
    if (!o.alpha.empty()) m.alpha = parse_trig(o.alpha, "--alpha");
    if (!o.beta.empty()) m.beta = parse_trig(o.beta, "--beta");
    if (m.alpha.k() != 4 || m.beta.k() != 4) bad_input("--alpha/--beta: the four-torus family needs frequency vectors of length 4");
    if (!m.alpha.is_real() || !m.beta.is_real()) bad_input("--alpha/--beta: coefficients must describe real functions");
  }
  m.genus = o.genus;
  return m;
}

int complex_dimension(const Model& m) {
  switch (m.kind) {
    case Kind::KT:
    case Kind::T4:
    case Kind::TorusSurface:
      return 2;
    case Kind::G2:
      return 3;
    case Kind::Torus:
    case Kind::Surface:
      return 1;
    case Kind::File:
      return m.file->dim / 2;
  }
  return 0;
}

void describe_model(Json& j, const Model& m) {
  j["model"] = m.label;
  if (m.a) j["a"] = m.a->to_string();
  if (m.kind == Kind::T4) {
    j["alpha"] = m.alpha.to_string();
    j["beta"] = m.beta.to_string();
  }
}

/// Invariant structure underlying a model, for the commands that work on one.
struct InvariantModel {
  LieAlgebra algebra;
  ACStructure j;
};

InvariantModel invariant_model(const Model& m) {
  switch (m.kind) {
    case Kind::KT:
      return {models::kodaira_thurston(), models::kodaira_thurston_j(m.a->value())};
    case Kind::G2:
      return {g2::algebra(), g2::j_tilde()};
    case Kind::T4: {
      if (!m.alpha.is_constant() || !m.beta.is_constant())
        throw OutsideDerivationError("the four-torus structure with non-constant alpha, beta is not invariant; use --member constant");
      const LieComplex c = t4_constant_complex(m.alpha, m.beta);
      const Scalar a = m.alpha.coefficient({0, 0, 0, 0});
      const Scalar b = m.beta.coefficient({0, 0, 0, 0});
      return {c.algebra(), ACStructure(Matrix::from_rows({{0, -1, a, b}, {1, 0, -b, a}, {0, 0, 0, 1}, {0, 0, -1, 0}}))};
    }
    case Kind::File:
      return {m.file->algebra(), m.file->structure(m.a)};
    default:
      bad_input("this command needs kt, t4, g2 or a model file");
  }
}

std::unique_ptr<InvariantComplex> complex_for(const Model& m, int window) {
  switch (m.kind) {
    case Kind::KT:
      return std::make_unique<LieComplex>(models::kodaira_thurston_complex(m.a->value(), window));
    case Kind::G2:
      return std::make_unique<g2::SphereComplex>();
    case Kind::T4:
      if (!m.alpha.is_constant() || !m.beta.is_constant())
        throw OutsideDerivationError("the four-torus structure with non-constant alpha, beta is not invariant; use --member constant");
      return std::make_unique<LieComplex>(t4_constant_complex(m.alpha, m.beta));
    case Kind::File:
      return std::make_unique<LieComplex>(m.file->complex(m.a, window));
    default:
      bad_input("this command needs kt, t4, g2 or a model file");
  }
}

bool file_has_characters(const Model& m) { return m.kind == Kind::File && !m.file->characters.empty(); }

int file_plurigenus(const Model& m, const InvariantComplex& c, int pm) {
  const CanonicalPower k = canonical_dbar(c, pm);
  if (file_has_characters(m)) return invariant_harmonic_space(c, 0, 0, k.beta).dimension;
  return invariant_sections(c, k.structure(), 0).dimension;
}

std::vector<int> plurigenera(const Model& m, const std::vector<int>& ms, int window) {
  std::vector<int> out;
  switch (m.kind) {
    case Kind::KT:
      for (int k : ms) out.push_back(kt_plurigenus(*m.a, k));
      return out;
    case Kind::T4:
      for (int k : ms) out.push_back(t4_plurigenus(m.alpha, m.beta, k));
      return out;
    case Kind::G2:
    case Kind::File: {
      const auto c = complex_for(m, window);
      for (int k : ms) out.push_back(file_plurigenus(m, *c, k));
      return out;
    }
    default:
      bad_input("plurigenera needs kt, t4, g2 or a model file");
  }
}

PlurigeneraProfile profile_for(const Model& m, int max_m, int window) {
  switch (m.kind) {
    case Kind::KT:
      return presets::kodaira_thurston(*m.a, max_m);
    case Kind::Torus:
      return presets::torus(max_m);
    case Kind::Surface:
      return presets::riemann_surface(m.genus, max_m);
    case Kind::TorusSurface:
      return presets::torus_times_surface(m.genus, max_m);
    default: {
      std::vector<int> ms(max_m);
      std::iota(ms.begin(), ms.end(), 1);
      const std::vector<int> values = plurigenera(m, ms, window);
      return PlurigeneraProfile::exact(std::vector<long>(values.begin(), values.end()));
    }
  }
}

int default_profile_length(const Model& m) {
  return m.kind == Kind::KT ? presets::kt_profile_length(*m.a) : presets::kDefaultProfileLength;
}

// ---- rendering -------------------------------------------------------------------------------

Json interval_json(const Interval& v) { return v.exact() ? Json(v.lo) : Json::array({v.lo, v.hi}); }

Json profile_json(const PlurigeneraProfile& p) {
  Json values = Json::array();
  for (const Interval& v : p.values()) values.push_back(interval_json(v));
  return values;
}

std::string growth_name(Growth g) {
  switch (g) {
    case Growth::AllZero:
      return "all-zero";
    case Growth::Bounded:
      return "bounded";
    case Growth::Polynomial:
      return "polynomial";
  }
  return "";
}

Json kappa_json(const KodairaDimension& k) { return k.minus_infinity ? Json("-inf") : Json(k.value); }

Json mode_json(const std::optional<std::pair<long, long>>& mode) {
  return mode ? Json::array({mode->first, mode->second}) : Json(nullptr);
}

std::string status_of(const g2::IdentityCheck& c) {
  if (c.match) return "match";
  return c.preregistered ? "registered-erratum" : "mismatch";
}

Json identity_json(const g2::IdentityReport& r) {
  Json entries = Json::array();
  for (const auto& c : r.entries)
    entries.push_back({{"label", c.label}, {"printed", c.printed}, {"computed", c.computed}, {"status", status_of(c)}});
  return entries;
}

std::string vector_string(const Vector& v, const std::vector<std::string>& names) {
  RealForm r(static_cast<int>(v.size()));
  for (size_t k = 0; k < v.size(); ++k) r.add_term(1U << k, v[k]);
  return r.to_string(names);
}

std::string scalar_cell(const Json& v) {
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

bool is_table(const Json& v) {
  return v.is_array() && !v.empty() && std::all_of(v.begin(), v.end(), [](const Json& e) { return e.is_object(); });
}

void flatten(const Json& v, const std::string& prefix, std::vector<std::pair<std::string, std::string>>& rows,
             std::vector<std::pair<std::string, const Json*>>& tables) {
  if (v.is_object()) {
    for (const auto& [k, x] : v.items()) flatten(x, prefix.empty() ? k : prefix + "." + k, rows, tables);
  } else if (is_table(v)) {
    tables.emplace_back(prefix, &v);
  } else if (v.is_array()) {
    std::string s;
    for (const Json& x : v) s += (s.empty() ? "" : " ") + scalar_cell(x);
    rows.emplace_back(prefix, s);
  } else {
    rows.emplace_back(prefix, scalar_cell(v));
  }
}

void render_table(const Json& report, std::ostream& out) {
  std::vector<std::pair<std::string, std::string>> rows;
  std::vector<std::pair<std::string, const Json*>> tables;
  flatten(report, "", rows, tables);
  size_t width = 0;
  for (const auto& r : rows) width = std::max(width, r.first.size());
  for (const auto& [k, v] : rows) out << std::left << std::setw(static_cast<int>(width) + 2) << k << v << "\n";
  for (const auto& [name, table] : tables) {
    std::vector<std::string> columns;
    for (const Json& e : *table)
      for (const auto& [k, x] : e.items())
        if (std::find(columns.begin(), columns.end(), k) == columns.end()) columns.push_back(k);
    std::vector<std::vector<std::string>> cells;
    std::vector<size_t> widths;
    for (const auto& c : columns) widths.push_back(c.size());
    for (const Json& e : *table) {
      std::vector<std::string> line;
      for (size_t c = 0; c < columns.size(); ++c) {
        std::string s;
        if (e.contains(columns[c])) {
          const Json& x = e.at(columns[c]);
          if (x.is_array()) {
            for (const Json& y : x) s += (s.empty() ? "" : " ") + scalar_cell(y);
          } else {
            s = scalar_cell(x);
          }
        }
        widths[c] = std::max(widths[c], s.size());
        line.push_back(std::move(s));
      }
      cells.push_back(std::move(line));
    }
    out << "\n" << name << ":\n";
    auto emit = [&](const std::vector<std::string>& line) {
      std::string text;
      for (size_t c = 0; c < line.size(); ++c) {
        std::ostringstream cell;
        cell << std::left << std::setw(static_cast<int>(widths[c]) + (c + 1 < line.size() ? 2 : 0)) << line[c];
        text += cell.str();
      }
      while (!text.empty() && text.back() == ' ') text.pop_back();
      out << "  " << text << "\n";
    };
    emit(columns);
    for (const auto& line : cells) emit(line);
  }
}

// ---- commands --------------------------------------------------------------------------------

struct Result {
  Json report;
  int code = kOk;
};

Result cmd_nijenhuis(const Model& m) {
  const InvariantModel im = invariant_model(m);
  const NijenhuisTensor n = nijenhuis(im.algebra, im.j);
  Json j;
  j["command"] = "nijenhuis";
  describe_model(j, m);
  j["integrable"] = is_integrable(im.algebra, im.j);
  Json nonzero = Json::array();
  const auto& names = im.algebra.names();
  for (int a = 0; a < n.dim(); ++a)
    for (int b = a + 1; b < n.dim(); ++b) {
      const Vector& v = n.at(a, b);
      if (std::all_of(v.begin(), v.end(), [](const Scalar& s) { return s.is_zero(); })) continue;
      const std::string ea = names.empty() ? "e" + std::to_string(a + 1) : names[a];
      const std::string eb = names.empty() ? "e" + std::to_string(b + 1) : names[b];
      nonzero.push_back({{"pair", "N(" + ea + "," + eb + ")"}, {"value", vector_string(v, names)}});
    }
  j["nonzero_components"] = nonzero;
  return {j};
}

Result cmd_structure_eqs(const Model& m) {
  const InvariantModel im = invariant_model(m);
  const ComplexCoframe cf = build_coframe(im.algebra, im.j);
  const StructureEquations eq(im.algebra, cf);
  Json j;
  j["command"] = "structure-eqs";
  describe_model(j, m);
  Json rows = Json::array();
  for (int i = 0; i < cf.n(); ++i) {
    const std::string name = "phi" + std::to_string(i + 1);
    const Form phi = Form::phi(cf.n(), i + 1);
    rows.push_back({{"form", name},
                    {"covector", vector_string(cf.phi(i), im.algebra.names())},
                    {"d", eq.dphi(i).to_string()},
                    {"dbar", eq.dbar(phi).to_string()},
                    {"mubar", eq.mubar(phi).to_string()}});
  }
  j["unimodular"] = im.algebra.is_unimodular();
  j["equations"] = rows;
  return {j};
}

Result cmd_plurigenera(const Model& m, const Options& o, int window) {
  const std::vector<int> ms = parse_m(o.m);
  Json j;
  j["command"] = "plurigenera";
  if (!o.sweep.empty()) {
    if (m.kind != Kind::KT && m.kind != Kind::File) bad_input("--sweep needs kt or a model file");
    Json rows = Json::array();
    for (const std::string& text : split(o.sweep, ',')) {
      Model at = m;
      at.a = parse_a(text);
      Json row;
      row["a"] = at.a->to_string();
      const std::vector<int> values = plurigenera(at, ms, window);
      for (size_t k = 0; k < ms.size(); ++k) row["P" + std::to_string(ms[k])] = values[k];
      rows.push_back(row);
    }
    j["model"] = m.label;
    j["m"] = ms;
    j["rows"] = rows;
    return {j};
  }
  describe_model(j, m);
  j["m"] = ms;
  j["P"] = plurigenera(m, ms, window);
  if (m.kind == Kind::KT) {
    Json modes = Json::array();
    for (int k : ms) modes.push_back(mode_json(kt_plurigenus_mode(*m.a, k)));
    j["modes"] = modes;
  }
  if (m.kind == Kind::T4) j["obstruction"] = t4_obstruction(m.alpha, m.beta).to_string();
  if (file_has_characters(m)) j["mode_window"] = window;
  return {j};
}

Result cmd_irregularity(const Model& m, int window) {
  Json j;
  j["command"] = "irregularity";
  describe_model(j, m);
  switch (m.kind) {
    case Kind::KT: {
      const KtIrregularityTrace t = kt_irregularity_trace(*m.a);
      j["h10"] = t.dimension();
      j["g2_mode"] = mode_json(t.g2_mode);
      j["g1_dimension"] = t.g1_dimension;
      j["g2_dimension"] = t.g2_dimension;
      break;
    }
    case Kind::T4:
      j["h10"] = t4_irregularity(m.alpha, m.beta);
      j["obstruction"] = t4_obstruction(m.alpha, m.beta).to_string();
      break;
    default: {
      const auto c = complex_for(m, window);
      j["h10"] = file_has_characters(m) ? invariant_harmonic_space(*c, 1, 0).dimension
                                        : invariant_sections(*c, PseudoholStructure::trivial(c->n(), 1), 1).dimension;
    }
  }
  return {j};
}

Result cmd_hodge(const Model& m, const Options& o, int window) {
  const auto c = complex_for(m, window);
  const int n = c->n();
  if ((o.p >= 0) != (o.q >= 0)) bad_input("--p and --q go together");
  if (o.p > n || o.q > n) bad_input("--p/--q exceed the complex dimension");
  Json j;
  j["command"] = "hodge";
  describe_model(j, m);
  j["n"] = n;
  if (c->characters()) j["mode_window"] = c->characters()->window;
  if (o.p >= 0) {
    j["p"] = o.p;
    j["q"] = o.q;
    j["h"] = invariant_harmonic_space(*c, o.p, o.q).dimension;
    return {j};
  }
  std::vector<std::vector<int>> h(n + 1, std::vector<int>(n + 1));
  Json rows = Json::array();
  for (int p = 0; p <= n; ++p) {
    Json row;
    row["p"] = p;
    for (int q = 0; q <= n; ++q) {
      h[p][q] = invariant_harmonic_space(*c, p, q).dimension;
      row["q=" + std::to_string(q)] = h[p][q];
    }
    rows.push_back(row);
  }
  bool serre = true;
  for (int p = 0; p <= n; ++p)
    for (int q = 0; q <= n; ++q) serre = serre && h[p][q] == h[n - p][n - q];
  j["serre_symmetric"] = serre;
  j["numbers"] = rows;
  return {j};
}

Result cmd_kodaira(const Model& m, const Options& o, int window) {
  const int max_m = o.max_m > 0 ? o.max_m : default_profile_length(m);
  const PlurigeneraProfile profile = profile_for(m, max_m, window);
  Json j;
  j["command"] = "kodaira";
  describe_model(j, m);
  if (m.kind == Kind::Surface || m.kind == Kind::TorusSurface) j["genus"] = m.genus;
  j["profile"] = profile_json(profile);
  j["growth"] = growth_name(profile.growth());
  j["kappa"] = kappa_json(kodaira_dimension(profile));
  return {j};
}

Result cmd_kunneth(const Options& o, int window) {
  if (o.factors.empty()) bad_input("kunneth needs at least one --factor");
  std::vector<Model> models;
  int max_m = o.max_m > 0 ? o.max_m : presets::kDefaultProfileLength;
  for (const std::string& f : o.factors) {
    const auto colon = f.find(':');
    Options fo;
    const std::string name = f.substr(0, colon);
    const std::string arg = colon == std::string::npos ? "" : f.substr(colon + 1);
    if (name == "kt") {
      fo.a = arg;
    } else if (name == "surface" || name == "torus-x-surface") {
      fo.genus = arg.empty() ? 2 : parse_int(arg, "--factor " + f);
    } else if (name == "t4") {
      fo.member = arg.empty() ? "paper" : arg;
    } else if (!arg.empty()) {
      bad_input("--factor " + f + ": this factor takes no argument");
    }
    models.push_back(resolve_model(name, fo, true));
    models.back().label = f;
    if (o.max_m <= 0) max_m = std::max(max_m, default_profile_length(models.back()));
  }
  Json factors = Json::array();
  std::optional<PlurigeneraProfile> product;
  std::optional<KodairaDimension> sum;
  int n = 0;
  for (const Model& m : models) {
    const PlurigeneraProfile p = profile_for(m, max_m, window);
    const KodairaDimension k = kodaira_dimension(p);
    n += complex_dimension(m);
    factors.push_back({{"factor", m.label}, {"n", complex_dimension(m)}, {"kappa", kappa_json(k)}, {"profile", profile_json(p)}});
    product = product ? kunneth(*product, p) : p;
    sum = sum ? *sum + k : k;
  }
  const KodairaDimension kp = kodaira_dimension(*product);
  Json j;
  j["command"] = "kunneth";
  j["n"] = n;
  j["max_m"] = max_m;
  j["kappa"] = kappa_json(kp);
  j["kappa_sum"] = kappa_json(*sum);
  j["additive"] = kp == *sum;
  j["profile"] = profile_json(*product);
  j["factors"] = factors;
  return {j, kp == *sum ? kOk : kRefused};
}

Result cmd_g2_verify(const Options& o) {
  const g2::BracketTableReport table = g2::verify_bracket_table();
  const g2::G2StructureChecks checks = g2::structure_checks();
  const g2::MembershipSample sample = g2::random_membership_check(o.seed, 100, 10);
  const std::vector<std::string> e_names = {"e1", "e2", "e3", "e4", "e5", "e6", "e7"};
  const g2::Vec7 e1e6 = g2::cross(g2::unit_vector(0), g2::unit_vector(5));
  const bool e1e6_ok = e1e6 == g2::unit_vector(6);

  Json j;
  j["command"] = "g2-verify";
  j["dimension"] = checks.span_rank;
  Json bt;
  bt["pairs_listed"] = table.pairs_listed;
  bt["pairs_total"] = 91;
  bt["diffs"] = identity_json(g2::IdentityReport{table.table.diffs()});
  bt["entries"] = identity_json(table.table);
  j["bracket_table"] = bt;
  j["jacobi"] = {{"triples", table.jacobi_triples}, {"failures", table.jacobi_failures}};
  j["h_closed"] = table.h_closed;
  j["membership"] = {{"basis_members", checks.basis_members},
                     {"basis_preserves_phi", checks.basis_preserves_phi},
                     {"seed", o.seed},
                     {"members", sample.members},
                     {"members_passed", sample.members_passed},
                     {"outsiders", sample.outsiders},
                     {"outsiders_rejected", sample.outsiders_rejected}};
  j["cross_product"] = {{"identities_on_basis_pairs", checks.cross_identities},
                        {"e1 x e6", vector_string(Vector(e1e6.begin(), e1e6.end()), e_names)}};
  j["orbit_map"] = {{"dp_values", checks.dp_values}, {"kernel_dimension", checks.dp_kernel_dimension}, {"pseudoholomorphic", checks.pseudoholomorphic}};
  const bool passed = table.passed() && checks.passed() && sample.passed() && e1e6_ok;
  j["passed"] = passed;
  return {j, passed ? kOk : kRefused};
}

Result cmd_s6_report(const Options& o) {
  const int max_m = o.max_m > 0 ? o.max_m : 8;
  const g2::StructurePackage pkg = g2::s6_structure_package();
  const g2::IdentityReport red = g2::verify_reduction_brackets();
  const g2::SphereHodgeReport h = g2::s6_hodge_report(max_m);
  Json j;
  j["command"] = "s6-report";
  j["summary"] = {{"h10", h.h10},
                  {"h20", h.h20},
                  {"h13", h.h13},
                  {"h23", h.h23},
                  {"P", h.plurigenera},
                  {"kappa", kappa_json(h.kappa)},
                  {"serre_20", h.serre_20.holds()},
                  {"serre_10", h.serre_10.holds()},
                  {"h10_on_coframe_span", h.h10_span},
                  {"h20_on_coframe_span", h.h20_span},
                  {"dbar_volume_zero", pkg.dbar_volume_zero},
                  {"dbar_volume_zero_from_printed", pkg.dbar_volume_zero_printed},
                  {"volume_basic_and_closed", pkg.basic_volume_closed},
                  {"coframe_bundle_connection", h.connection_ok}};
  Json identities = Json::array();
  for (const g2::IdentityReport* r : {&pkg.coframe, &pkg.real_d, &pkg.dbar_phi, &pkg.dbar_20, &red})
    for (const Json& e : identity_json(*r)) identities.push_back(e);
  j["identities"] = identities;
  const bool passed = pkg.passed() && red.passed() && h.connection_ok;
  j["passed"] = passed;
  return {j, passed ? kOk : kRefused};
}

Result cmd_rr(const Options& o) {
  const std::vector<int> ms = parse_m(o.m);
  Json j;
  j["command"] = "rr";
  j["genus"] = o.genus;
  if (ms.size() == 1) {
    j["m"] = ms[0];
    j["P"] = interval_json(rr_plurigenus(o.genus, ms[0]));
  } else {
    j["m"] = ms;
    Json values = Json::array();
    for (int m : ms) values.push_back(interval_json(rr_plurigenus(o.genus, m)));
    j["P"] = values;
  }
  return {j};
}

void add_model_options(CLI::App* sub, Options& o) {
  sub->add_option("--model", o.model, "kt, t4, g2 or a model file")->required();
  sub->add_option("--a", o.a, "parameter a: \"q*pi\" or \"generic\"");
  sub->add_option("--member", o.member, "t4 member: paper or constant");
  sub->add_option("--alpha", o.alpha, "t4 alpha as JSON [[freq, re, im], ...]");
  sub->add_option("--beta", o.beta, "t4 beta as JSON [[freq, re, im], ...]");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact invariant computations for almost complex manifolds", "acx"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string format = "json";
  bool meta = false;
  app.add_option("--format", format, "json or table")->check(CLI::IsMember({"json", "table"}));
  app.add_flag("--meta", meta, "add tool version, arguments and mode window to the report");
  Options o;

  auto* nij = app.add_subcommand("nijenhuis", "Nijenhuis tensor and integrability");
  add_model_options(nij, o);
  auto* seq = app.add_subcommand("structure-eqs", "complex coframe and its structure equations");
  add_model_options(seq, o);
  auto* plu = app.add_subcommand("plurigenera", "plurigenera P_m");
  add_model_options(plu, o);
  plu->add_option("--m", o.m, "indices: 4, 1..6 or 1,3,5");
  plu->add_option("--sweep", o.sweep, "comma-separated values of a, one row each");
  auto* irr = app.add_subcommand("irregularity", "dimension of dbar-closed (1,0)-forms");
  add_model_options(irr, o);
  auto* hod = app.add_subcommand("hodge", "invariant harmonic (p,q) dimensions");
  add_model_options(hod, o);
  hod->add_option("--p", o.p, "single bidegree: p");
  hod->add_option("--q", o.q, "single bidegree: q");
  auto* kod = app.add_subcommand("kodaira", "plurigenera profile and Kodaira dimension");
  kod->add_option("--model", o.model, "kt, t4, g2, torus, surface, torus-x-surface or a model file")->required();
  kod->add_option("--a", o.a, "parameter a");
  kod->add_option("--member", o.member, "t4 member: paper or constant");
  kod->add_option("--genus", o.genus, "genus for surface presets");
  kod->add_option("--M", o.max_m, "profile length");
  auto* kun = app.add_subcommand("kunneth", "profiles and Kodaira dimension of products");
  kun->add_option("--factor", o.factors, "kt:<a>, t4[:constant], g2, torus, surface:<g>, torus-x-surface:<g>")->required();
  kun->add_option("--M", o.max_m, "profile length");
  auto* g2v = app.add_subcommand("g2-verify", "g2 bracket table, membership and cross product checks");
  g2v->add_option("--seed", o.seed, "seed for the randomized membership check");
  auto* s6 = app.add_subcommand("s6-report", "structure equations and invariant Hodge data of S^6");
  s6->add_option("--M", o.max_m, "number of plurigenera");
  auto* rr = app.add_subcommand("rr", "Riemann-Roch plurigenera of a genus g curve");
  rr->add_option("--genus", o.genus, "genus >= 2")->required();
  rr->add_option("--m", o.m, "indices: 4, 1..6 or 1,3,5")->required();

  std::vector<const char*> argv;
  for (const std::string& a : args) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kInputError;
  }

  try {
    const int window = mode_window_from_env();
    Result r;
    CLI::App* sub = app.get_subcommands().front();
    if (sub == nij) r = cmd_nijenhuis(resolve_model(o.model, o, false));
    if (sub == seq) r = cmd_structure_eqs(resolve_model(o.model, o, false));
    if (sub == plu && !o.sweep.empty() && o.a.empty()) o.a = split(o.sweep, ',').at(0);
    if (sub == plu) r = cmd_plurigenera(resolve_model(o.model, o, false), o, window);
    if (sub == irr) r = cmd_irregularity(resolve_model(o.model, o, false), window);
    if (sub == hod) r = cmd_hodge(resolve_model(o.model, o, false), o, window);
    if (sub == kod) r = cmd_kodaira(resolve_model(o.model, o, true), o, window);
    if (sub == kun) r = cmd_kunneth(o, window);
    if (sub == g2v) r = cmd_g2_verify(o);
    if (sub == s6) r = cmd_s6_report(o);
    if (sub == rr) r = cmd_rr(o);
    if (meta) r.report["meta"] = {{"tool", "acx"}, {"version", kVersion}, {"arguments", std::vector<std::string>(args.begin() + 1, args.end())}, {"mode_window", window}};
    if (format == "table")
      render_table(r.report, out);
    else
      out << r.report.dump(2) << "\n";
    return r.code;
  } catch (const std::invalid_argument& e) {
    err << "acx: " << e.what() << "\n";
    return kInputError;
  } catch (const Json::exception& e) {
    err << "acx: " << e.what() << "\n";
    return kInputError;
  } catch (const std::exception& e) {
    err << "acx: " << e.what() << "\n";
    return kRefused;
  }
}

}  // namespace acx::cli
