#include "model_file.hpp"

#include <cctype>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "json.hpp"

namespace acx::cli {

namespace {

using nlohmann::json;

class ScalarParser {
 public:
  explicit ScalarParser(std::string_view text) : text_(text) {}

  Scalar parse() {
    Scalar v = expr();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return v;
  }

 private:
  [[noreturn]] void fail(const std::string& what) const {
    throw std::invalid_argument("cannot parse '" + std::string(text_) + "' at " + std::to_string(pos_) + ": " + what);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(char c) {
    skip();
    if (pos_ < text_.size() && text_[pos_] == c) {
      ++pos_;
      return true;
    }
    return false;
  }

  Scalar expr() {
    Scalar v = accept('-') ? -term() : (accept('+'), term());
    while (true) {
      if (accept('+'))
        v += term();
      else if (accept('-'))
        v -= term();
      else
        return v;
    }
  }

  Scalar term() {
    Scalar v = factor();
    while (true) {
      if (accept('*')) {
        v *= factor();
      } else if (accept('/')) {
        const Scalar d = factor();
        if (d.is_zero()) fail("division by zero");
        v /= d;
      } else {
        return v;
      }
    }
  }

  Scalar factor() {
    skip();
    if (accept('(')) {
      Scalar v = expr();
      if (!accept(')')) fail("expected ')'");
      return v;
    }
    if (accept('-')) return -factor();
    const size_t start = pos_;
    if (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
      return Scalar::parse_rational(text_.substr(start, pos_ - start));
    }
    while (pos_ < text_.size() && std::isalpha(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    const std::string_view name = text_.substr(start, pos_ - start);
    if (name == "a") return Scalar::a();
    if (name == "pi") return Scalar::pi();
    if (name == "i") return Scalar::i();
    if (name.empty()) fail("expected a number, a symbol or '('");
    fail("unknown symbol '" + std::string(name) + "'");
  }

  std::string_view text_;
  size_t pos_ = 0;
};

[[noreturn]] void field_error(const std::string& path, const std::string& what) {
  throw std::invalid_argument("model file " + path + ": " + what);
}

const json& require(const json& obj, const char* key, const std::string& path) {
  if (!obj.contains(key)) field_error(path, std::string("missing field '") + key + "'");
  return obj.at(key);
}

int require_int(const json& v, const std::string& path) {
  if (!v.is_number_integer()) field_error(path, "expected an integer");
  return v.get<int>();
}

Scalar rational_field(const json& v, const std::string& path) {
  if (v.is_number_integer()) return Scalar(v.get<long>());
  if (!v.is_string()) field_error(path, "expected a rational string");
  try {
    return Scalar::parse_rational(v.get<std::string>());
  } catch (const std::invalid_argument& e) {
    field_error(path, e.what());
  }
}

}  // namespace

Scalar parse_scalar_expression(std::string_view text) { return ScalarParser(text).parse(); }

bool ModelFile::uses_a() const {
  for (const auto& row : j)
    for (const Scalar& s : row)
      if (s.involves(Symbol::A)) return true;
  return false;
}

LieAlgebra ModelFile::algebra() const { return LieAlgebra(dim, brackets, names); }

std::optional<PiParam> ModelFile::parameter(const std::optional<PiParam>& a_override) const {
  std::optional<PiParam> p = a_override ? a_override : a;
  if (uses_a() && !p) throw std::invalid_argument("model uses the parameter a; pass --a or set params.a");
  return p;
}

ACStructure ModelFile::structure(const std::optional<PiParam>& a_override) const {
  const std::optional<PiParam> p = parameter(a_override);
  Matrix m(dim, dim);
  for (int r = 0; r < dim; ++r)
    for (int c = 0; c < dim; ++c) m(r, c) = p ? p->specialize(j[r][c]) : j[r][c];
  return ACStructure(m);
}

LieComplex ModelFile::complex(const std::optional<PiParam>& a_override, int window) const {
  LieAlgebra alg = algebra();
  ComplexCoframe cf = build_coframe(alg, structure(a_override));
  LieComplex c(std::move(alg), std::move(cf));
  if (!characters.empty()) {
    std::vector<std::string> labels;
    for (size_t k = 0; k < characters.size(); ++k) labels.push_back("c" + std::to_string(k + 1));
    c.set_characters(characters, labels, window);
  }
  return c;
}

ModelFile parse_model(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) field_error("$", "expected an object");
  ModelFile m;
  m.dim = require_int(require(doc, "dim", "$"), "$.dim");
  if (m.dim < 2 || m.dim % 2 != 0 || m.dim > 32) field_error("$.dim", "must be an even number between 2 and 32");

  if (doc.contains("names")) {
    const json& names = doc.at("names");
    if (!names.is_array() || static_cast<int>(names.size()) != m.dim) field_error("$.names", "expected dim strings");
    for (size_t k = 0; k < names.size(); ++k) {
      if (!names[k].is_string()) field_error("$.names[" + std::to_string(k) + "]", "expected a string");
      m.names.push_back(names[k].get<std::string>());
    }
  }

  const json& brackets = require(doc, "brackets", "$");
  if (!brackets.is_array()) field_error("$.brackets", "expected an array");
  for (size_t b = 0; b < brackets.size(); ++b) {
    const std::string path = "$.brackets[" + std::to_string(b) + "]";
    const json& entry = brackets[b];
    if (!entry.is_object()) field_error(path, "expected an object");
    LieAlgebra::Bracket br{require_int(require(entry, "i", path), path + ".i"), require_int(require(entry, "j", path), path + ".j"),
                           Vector(m.dim)};
    if (br.i < 1 || br.j > m.dim || br.i >= br.j) field_error(path, "need 1 <= i < j <= dim");
    const json& out = require(entry, "out", path);
    if (!out.is_array()) field_error(path + ".out", "expected an array");
    for (size_t t = 0; t < out.size(); ++t) {
      const std::string tpath = path + ".out[" + std::to_string(t) + "]";
      if (!out[t].is_array() || out[t].size() != 3) field_error(tpath, "expected [k, re, im]");
      const int k = require_int(out[t][0], tpath + "[0]");
      if (k < 1 || k > m.dim) field_error(tpath + "[0]", "index out of range");
      br.out[k - 1] += rational_field(out[t][1], tpath + "[1]") + Scalar::i() * rational_field(out[t][2], tpath + "[2]");
    }
    m.brackets.push_back(std::move(br));
  }

  const json& jm = require(doc, "J", "$");
  if (!jm.is_array() || static_cast<int>(jm.size()) != m.dim) field_error("$.J", "expected dim rows");
  for (int r = 0; r < m.dim; ++r) {
    const std::string rpath = "$.J[" + std::to_string(r) + "]";
    if (!jm[r].is_array() || static_cast<int>(jm[r].size()) != m.dim) field_error(rpath, "expected dim entries");
    std::vector<Scalar> row;
    for (int c = 0; c < m.dim; ++c) {
      const json& v = jm[r][c];
      const std::string cpath = rpath + "[" + std::to_string(c) + "]";
      if (v.is_number_integer()) {
        row.emplace_back(v.get<long>());
      } else if (v.is_string()) {
        try {
          row.push_back(parse_scalar_expression(v.get<std::string>()));
        } catch (const std::exception& e) {
          field_error(cpath, e.what());
        }
      } else {
        field_error(cpath, "expected a rational string");
      }
    }
    m.j.push_back(std::move(row));
  }

  if (doc.contains("characters")) {
    const json& chars = doc.at("characters");
    if (!chars.is_array()) field_error("$.characters", "expected an array");
    for (size_t k = 0; k < chars.size(); ++k) {
      const std::string path = "$.characters[" + std::to_string(k) + "]";
      if (!chars[k].is_array() || static_cast<int>(chars[k].size()) != m.dim) field_error(path, "expected dim entries");
      Vector v;
      for (int c = 0; c < m.dim; ++c) v.push_back(rational_field(chars[k][c], path + "[" + std::to_string(c) + "]"));
      m.characters.push_back(std::move(v));
    }
  }

  if (doc.contains("params")) {
    const json& params = doc.at("params");
    if (!params.is_object()) field_error("$.params", "expected an object");
    if (params.contains("a")) {
      if (!params.at("a").is_string()) field_error("$.params.a", "expected \"q*pi\" or \"generic\"");
      try {
        m.a = PiParam::parse(params.at("a").get<std::string>());
      } catch (const std::invalid_argument& e) {
        field_error("$.params.a", e.what());
      }
    }
  }
  // Build once so structural errors surface at load time.
  try {
    (void)m.algebra();
  } catch (const std::exception& e) {
    field_error("$.brackets", e.what());
  }
  return m;
}

ModelFile load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open model file '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return parse_model(buffer.str());
}

}  // namespace acx::cli
