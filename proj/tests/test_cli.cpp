#include <cstdlib>
#include <sstream>

#include "doctest.h"
#include "json.hpp"
#include "support.hpp"

#include "cli.hpp"
#include "model_file.hpp"

using namespace acx;
using Json = nlohmann::json;

namespace {

struct Output {
  int code;
  std::string out;
  std::string err;
};

Output call(std::vector<std::string> args) {
  args.insert(args.begin(), "acx");
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

Json call_json(std::vector<std::string> args) {
  const Output o = call(std::move(args));
  REQUIRE_MESSAGE(o.code == 0, o.err);
  return Json::parse(o.out);
}

const std::string kKtModel = std::string(ACX_SOURCE_DIR) + "/tools/models/kt.json";

struct WindowGuard {
  explicit WindowGuard(const char* w) { setenv("ACX_MODE_WINDOW", w, 1); }
  ~WindowGuard() { unsetenv("ACX_MODE_WINDOW"); }
};

}  // namespace

TEST_CASE("cli riemann-roch") {
  CHECK(call_json({"rr", "--genus", "2", "--m", "4"})["P"] == 7);
  const Json range = call_json({"rr", "--genus", "3", "--m", "1..3"});
  CHECK(range["P"] == Json::parse("[[2,3],6,10]"));
  CHECK(call({"rr", "--genus", "1", "--m", "2"}).code == cli::kInputError);
}

TEST_CASE("cli plurigenera presets") {
  CHECK(call_json({"plurigenera", "--model", "kt", "--a", "4*pi", "--m", "1..6"})["P"] == Json::parse("[1,1,1,1,1,1]"));
  CHECK(call_json({"plurigenera", "--model", "kt", "--a", "4/3*pi", "--m", "1..6"})["P"] == Json::parse("[0,0,1,0,0,1]"));
  CHECK(call_json({"plurigenera", "--model", "t4", "--m", "1..3"})["P"] == Json::parse("[0,0,0]"));
  CHECK(call_json({"plurigenera", "--model", "t4", "--member", "constant", "--m", "1..3"})["P"] == Json::parse("[1,1,1]"));
  CHECK(call_json({"plurigenera", "--model", "g2", "--m", "1,2,5"})["P"] == Json::parse("[1,1,1]"));
  const Json sweep = call_json({"plurigenera", "--model", "kt", "--sweep", "39/10*pi,4*pi,41/10*pi", "--m", "1"});
  CHECK(sweep["rows"][0]["P1"] == 0);
  CHECK(sweep["rows"][1]["P1"] == 1);
  CHECK(sweep["rows"][2]["P1"] == 0);
}

TEST_CASE("cli model file") {
  const WindowGuard guard("4");
  const Json p = call_json({"plurigenera", "--model", kKtModel, "--m", "1..4"});
  CHECK(p["a"] == "4*pi");
  CHECK(p["P"] == Json::parse("[1,1,1,1]"));
  CHECK(p["mode_window"] == 4);
  CHECK(call_json({"plurigenera", "--model", kKtModel, "--a", "2*pi", "--m", "1..4"})["P"] == Json::parse("[0,1,0,1]"));
  CHECK(call_json({"plurigenera", "--model", kKtModel, "--a", "generic", "--m", "1..2"})["P"] == Json::parse("[0,0]"));
  CHECK(call_json({"irregularity", "--model", kKtModel})["h10"] == 1);
  CHECK(call_json({"nijenhuis", "--model", kKtModel})["integrable"] == false);
}

TEST_CASE("cli model file errors") {
  using cli::parse_model;
  CHECK_THROWS_WITH_AS(parse_model("{"), doctest::Contains("not valid JSON"), std::invalid_argument);
  CHECK_THROWS_WITH_AS(parse_model(R"({"brackets": [], "J": []})"), doctest::Contains("'dim'"), std::invalid_argument);
  const std::string bad_rational = R"({"dim": 2, "brackets": [{"i": 1, "j": 2, "out": [[1, "1/x", "0"]]}], "J": [["0","-1"],["1","0"]]})";
  CHECK_THROWS_WITH_AS(parse_model(bad_rational), doctest::Contains("$.brackets[0].out[0][1]"), std::invalid_argument);
  const std::string bad_order = R"({"dim": 2, "brackets": [{"i": 2, "j": 1, "out": []}], "J": [["0","-1"],["1","0"]]})";
  CHECK_THROWS_WITH_AS(parse_model(bad_order), doctest::Contains("i < j"), std::invalid_argument);
  const std::string bad_j = R"({"dim": 2, "brackets": [], "J": [["0","-1"],["2","0"]]})";
  const cli::ModelFile m = parse_model(bad_j);
  CHECK_THROWS_AS(m.structure(std::nullopt), std::invalid_argument);
  const std::string needs_a = R"({"dim": 2, "brackets": [], "J": [["0","-a"],["1/a","0"]]})";
  CHECK_THROWS_WITH_AS(parse_model(needs_a).parameter(std::nullopt), doctest::Contains("--a"), std::invalid_argument);
  const std::string jacobi = R"({"dim": 4, "brackets": [{"i":1,"j":2,"out":[[3,"1","0"]]},{"i":1,"j":3,"out":[[1,"1","0"]]},{"i":2,"j":3,"out":[[2,"1","0"]]}],
                                 "J": [["0","-1","0","0"],["1","0","0","0"],["0","0","0","-1"],["0","0","1","0"]]})";
  CHECK_THROWS_WITH_AS(parse_model(jacobi), doctest::Contains("$.brackets"), std::invalid_argument);
}

TEST_CASE("cli scalar expressions") {
  using cli::parse_scalar_expression;
  CHECK(parse_scalar_expression("1/a") * Scalar::a() == Scalar(1));
  CHECK(parse_scalar_expression("-(3/4)*pi + 2*i") == Scalar::rational(-3, 4) * Scalar::pi() + Scalar(2) * Scalar::i());
  CHECK(parse_scalar_expression("-a") == -Scalar::a());
  CHECK_THROWS_AS(parse_scalar_expression("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar_expression("b"), std::invalid_argument);
  CHECK_THROWS_AS(parse_scalar_expression("(1"), std::invalid_argument);
}

TEST_CASE("cli exit codes") {
  CHECK(call({}).code == cli::kInputError);
  CHECK(call({"plurigenera", "--model", "kt", "--a", "5"}).code == cli::kInputError);
  CHECK(call({"plurigenera", "--model", "kt"}).code == cli::kInputError);
  CHECK(call({"plurigenera", "--model", "no-such-model"}).code == cli::kInputError);
  CHECK(call({"plurigenera", "--model", "kt", "--a", "pi", "--m", "0"}).code == cli::kInputError);
  CHECK(call({"plurigenera", "--model", "t4", "--alpha", "[[[1,0,0,0],\"1\",\"0\"]]", "--m", "1"}).code == cli::kInputError);
  // Obstruction vanishes but the coefficients are not constant: refused.
  const Output refused = call({"plurigenera", "--model", "t4", "--alpha", "[[[0,0,1,0],\"1/2\",\"0\"],[[0,0,-1,0],\"1/2\",\"0\"]]",
                               "--beta", "[[[0,0,0,0],\"0\",\"0\"]]", "--m", "1"});
  CHECK(refused.code == cli::kRefused);
  CHECK(refused.err.find("not constant") != std::string::npos);
  CHECK(call({"nijenhuis", "--model", "t4"}).code == cli::kRefused);
  CHECK(call({"--help"}).code == cli::kOk);
}

TEST_CASE("cli output is deterministic") {
  const std::vector<std::string> args = {"kunneth", "--factor", "kt:4*pi", "--factor", "surface:2", "--format", "table"};
  const Output a = call(args);
  const Output b = call(args);
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("factors:") != std::string::npos);
  CHECK(a.out.find("meta") == std::string::npos);
  const Json meta = call_json({"rr", "--genus", "2", "--m", "2", "--meta"});
  CHECK(meta["meta"]["tool"] == "acx");
}

TEST_CASE("cli kodaira and kunneth") {
  CHECK(call_json({"kodaira", "--model", "kt", "--a", "generic"})["kappa"] == "-inf");
  CHECK(call_json({"kodaira", "--model", "kt", "--a", "4/7*pi"})["kappa"] == 0);
  CHECK(call_json({"kodaira", "--model", "surface", "--genus", "4"})["kappa"] == 1);
  CHECK(call_json({"kodaira", "--model", "g2", "--M", "6"})["kappa"] == 0);
  const Json k = call_json({"kunneth", "--factor", "surface:2", "--factor", "surface:3", "--factor", "kt:4*pi"});
  CHECK(k["n"] == 4);
  CHECK(k["kappa"] == 2);
  CHECK(k["additive"] == true);
}

TEST_CASE("cli g2 and S6 reports") {
  const Json g = call_json({"g2-verify"});
  CHECK(g["passed"] == true);
  CHECK(g["bracket_table"]["diffs"].empty());
  CHECK(g["cross_product"]["e1 x e6"] == "e7");
  const Json s = call_json({"s6-report", "--M", "4"});
  CHECK(s["passed"] == true);
  CHECK(s["summary"]["P"] == Json::parse("[1,1,1,1]"));
  const Json h = call_json({"hodge", "--model", "g2", "--p", "1", "--q", "0"});
  CHECK(h["h"] == 0);
}
