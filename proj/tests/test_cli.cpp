#include <doctest.h>

#include <algorithm>
#include <set>
#include <sstream>

#include "hess/cli.hpp"
#include "hess/golden.hpp"
#include "hess/io.hpp"

using namespace hess;

namespace {

struct Run {
  int status = -1;
  std::string out, err;
  Json json() const { return Json::parse(out); }
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  Run r;
  r.status = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  return r;
}

std::string error_code(const Run& r) { return r.json().at("error").at("code").get<std::string>(); }

}  // namespace

TEST_CASE("poincare subcommand") {
  auto r = run({"poincare", "--h", "2,3,3"});
  REQUIRE(r.status == kExitOk);
  auto j = r.json();
  CHECK(j["poincare"] == Json::parse("[[0,1],[1,4],[2,1]]"));
  CHECK(j["methods_agree"] == true);
  CHECK(j["h"] == Json::parse("[2,3,3]"));
  for (const char* m : {"closed_form", "via_basis_degrees", "via_gkm", "via_ptableaux"}) CHECK(j["methods"][m] == j["poincare"]);
  auto csv = run({"poincare", "--h", "2,3,3", "--format", "csv"});
  CHECK(csv.out == "degree,coefficient\n0,1\n1,4\n2,1\n");
  // general h: only the tableaux route
  auto g = run({"poincare", "--h", "2,3,4,4"}).json();
  CHECK(g["methods"].size() == 2);  // P-tableaux and GKM (n = 4)
}

TEST_CASE("tableaux subcommand reproduces the six-tableau example") {
  auto r = run({"tableaux", "--h", "4,5,5,5,5", "--shape", "2,1,1,1"});
  REQUIRE(r.status == kExitOk);
  auto shape = r.json()["shapes"][0];
  CHECK(shape["count"] == 6);
  std::vector<int> inv;
  for (const auto& t : shape["tableaux"]) inv.push_back(t["inversions"].get<int>());
  std::sort(inv.begin(), inv.end());
  CHECK(inv == std::vector<int>{3, 4, 4, 5, 5, 6});
  CHECK(shape["inversion_gf"] == Json::parse("[[3,1],[4,2],[5,2],[6,1]]"));
  auto all = run({"tableaux", "--h", "2,3,3"}).json();
  CHECK(all["shapes"].size() == 3);
  auto syt = run({"tableaux", "--standard", "--shape", "3,2"}).json();
  CHECK(syt["shapes"][0]["count"] == 5);
  auto bad = run({"tableaux", "--h", "2,3,3", "--shape", "2,1,1"});
  CHECK(bad.status == kExitValidation);
  CHECK(error_code(bad) == "ShapeMismatch");
}

TEST_CASE("verify-paper passes and covers the figures and worked examples") {
  auto r = run({"verify-paper"});
  REQUIRE(r.status == kExitOk);
  auto j = r.json();
  CHECK(j["all_pass"] == true);
  std::set<std::string> keys;
  for (const auto& c : j["checks"]) {
    CHECK(c["pass"] == true);
    keys.insert(c["key"].get<std::string>());
  }
  for (const char* k : {"fig2a", "fig2b", "fig3a", "fig3b", "fig4", "ex-simple-ptableaux", "ex-nilpotent-insertion",
                        "ex-b1-insertion", "ex-b3-insertion"})
    CHECK(keys.count(k) == 1);
  auto one = run({"verify-paper", "--key", "fig4"});
  CHECK(one.status == kExitOk);
  CHECK(one.json()["checks"].size() == 1);
}

TEST_CASE("golden store") {
  const Json& y2 = golden("fig2b");
  CHECK(y2["h"] == Json::parse("[2,3,3]"));
  CHECK(y2["values"]["213"] == Json::parse("[-1,1,0]"));
  CHECK(y2["values"]["231"] == Json::parse("[0,1,-1]"));
  CHECK(y2["values"]["123"] == Json::parse("[0,0,0]"));
  CHECK(golden("ex-simple-ptableaux")["tableaux"].size() == 6);
  auto keys = golden_keys();
  CHECK(std::is_sorted(keys.begin(), keys.end()));
  try {
    golden("fig9");
    FAIL("expected KeyNotFound");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::KeyNotFound);
  }
  auto shown = run({"verify-paper", "--show", "fig2b"});
  CHECK(shown.json()["golden"] == y2);
  CHECK(error_code(run({"verify-paper", "--show", "nope"})) == "KeyNotFound");
}

TEST_CASE("a wrong golden value is reported, not hidden") {
  Json bad = golden("fig2b");
  bad["values"]["213"] = Json::parse("[1,1,0]");
  auto r = verify_golden("fig2b", bad);
  CHECK_FALSE(r.pass);
  CHECK(r.detail.find("value at 213") != std::string::npos);
  Json six = golden("ex-simple-ptableaux");
  six["inversions"][5] = 5;
  CHECK_FALSE(verify_golden("ex-simple-ptableaux", six).pass);
  Json trace = golden("ex-b1-insertion");
  trace["trace_top_down"][4] = Json::parse("[4,3,5,1,2]");
  CHECK(verify_golden("ex-b1-insertion", trace).detail.find("trace step 5") != std::string::npos);
  Json block = golden("fig4");
  block["matrix"][3][3] = -1;
  CHECK_FALSE(verify_golden("fig4", block).pass);
  Json broken = golden("fig1a");
  broken.erase("edges");
  CHECK(verify_golden("fig1a", broken).detail.find("malformed") != std::string::npos);
}

TEST_CASE("validation errors exit 2 with an error object") {
  auto r = run({"poincare", "--h", "2,1,3"});
  CHECK(r.status == kExitValidation);
  CHECK(error_code(r) == "NotWeaklyIncreasing");
  CHECK(r.err.find("NotWeaklyIncreasing") != std::string::npos);
  CHECK(error_code(run({"poincare", "--h", "1,1,3"})) == "BelowDiagonal");
  CHECK(error_code(run({"poincare", "--h", "2,x,3"})) == "ParseError");
  CHECK(error_code(run({"poincare"})) == "ParseError");
  CHECK(error_code(run({"nonsense"})) == "ParseError");
  CHECK(error_code(run({})) == "ParseError");
  CHECK(error_code(run({"poincare", "--h", "2,3,3", "--format", "dot"})) == "ParseError");
  CHECK(error_code(run({"poincare", "--h", "2,3,3", "--format", "yaml"})) == "ParseError");
  CHECK(error_code(run({"basis", "--h", "2,3,4,4", "--set", "B1"})) == "FormMismatch");
  CHECK(error_code(run({"basis", "--h", "3,3,3", "--set", "orbits"})) == "DegenerateForm");
}

TEST_CASE("guardrail refuses instead of truncating") {
  auto r = run({"poincare", "--h", "1,2,3,4,5,6,7,8"});
  CHECK(r.status == kExitValidation);
  CHECK(error_code(r) == "GuardrailExceeded");
  auto ok = run({"tableaux", "--h", "1,2,3,4,5,6,7,8", "--shape", "8", "--max-n", "8"});
  CHECK(ok.status == kExitOk);
  CHECK(ok.json()["shapes"][0]["count"] == 1);
  CHECK(error_code(run({"bijection", "--h", "1,7,7,7,7,7,7", "--map", "b1", "--mode", "roundtrip"})) == "GuardrailExceeded");
  CHECK(error_code(run({"basis", "--h", "2,7,7,7,7,7,7", "--set", "blocks"})) == "GuardrailExceeded");
  CHECK(error_code(run({"poincare", "--h", "2,3,3", "--max-n", "0"})) == "ParseError");
}

TEST_CASE("unimodularity report is faithful") {
  auto r = run({"basis", "--h", "2,3,3", "--set", "unimodular"});
  CHECK(r.status == kExitVerification);
  auto j = r.json();
  CHECK(j["all_unimodular"] == false);
  bool saw = false;
  for (const auto& b : j["forms"][0]["blocks"])
    if (b["degree"] == 2) {
      CHECK(b["determinant"] == -3);
      saw = true;
    }
  CHECK(saw);
  // h(1) = n: all blocks are identities
  CHECK(run({"basis", "--h", "3,3,3", "--set", "unimodular"}).status == kExitOk);
}

TEST_CASE("basis listings and transition blocks") {
  auto b1 = run({"basis", "--h", "2,3,3", "--set", "B1"}).json();
  CHECK(b1["size"] == 4);
  CHECK(b1["degree_gf"] == Json::parse("[[0,1],[1,2],[2,1]]"));
  auto b3 = run({"basis", "--h", "2,3,3", "--set", "B3"}).json();
  CHECK(b3["size"] == 2);
  auto csv = run({"basis", "--h", "2,3,3", "--set", "blocks", "--format", "csv"});
  CHECK(csv.status == kExitOk);
  CHECK(csv.out.find("# degree 2\nrow,x_1,x_2,-y_1 + y_2,-y_1 + y_3\n") != std::string::npos);
  CHECK(csv.out.find("y_1,0,0,-1,-2\n") != std::string::npos);
  auto tex = run({"basis", "--h", "1,3,3", "--set", "blocks", "--format", "latex"});
  CHECK(tex.out.find("\\begin{array}") != std::string::npos);
  auto tr = run({"basis", "--h", "2,3,3", "--set", "transpose"}).json();
  CHECK(tr["b1"]["label"] == "TransposeB1");
  auto dec = run({"basis", "--h", "2,4,4,4", "--set", "decomposition"}).json();
  CHECK(dec["total_trivial"] == 12);
  CHECK(dec["total_standard"] == 4);
  auto orb = run({"basis", "--h", "2,4,4,4", "--set", "orbits"}).json();
  CHECK(orb["orbit_count"] == 4);
  CHECK(orb["rank"] == 24);
  auto nh = run({"basis", "--h", "2,3,5,5,5", "--set", "Nh"}).json();
  CHECK(nh["size"] == 2 * 2 * 3 * 2 * 1);
}

TEST_CASE("gkm subcommand") {
  auto dot = run({"gkm", "--h", "2,3,3", "--format", "dot"});
  CHECK(dot.out.rfind("graph gkm", 0) == 0);
  auto g = run({"gkm", "--h", "3,3,3"}).json();
  CHECK(g["edges"].size() == 9);
  auto classes = run({"gkm", "--h", "2,3,3", "--action", "classes"}).json();
  CHECK(classes["classes"].size() == 9);  // x_k, one-row y_k, transpose y_k
  auto rel = run({"gkm", "--h", "2,3,3", "--action", "relations"});
  CHECK(rel.status == kExitOk);
  CHECK(rel.json()["reports"].size() == 2);
  auto chk = run({"gkm", "--h", "2,4,4,4", "--action", "check", "--seed", "11"});
  CHECK(chk.status == kExitOk);
  CHECK(chk.json()["random"].size() == 16);
  CHECK(error_code(run({"gkm", "--h", "2,3,4,4", "--action", "relations"})) == "FormMismatch");
}

TEST_CASE("output is byte-stable and the seed is honoured") {
  const std::vector<std::string> a = {"gkm", "--h", "2,3,3", "--action", "check", "--seed", "5"};
  CHECK(run(a).out == run(a).out);
  auto b = a;
  b.back() = "6";
  CHECK(run(a).out != run(b).out);
  const std::vector<std::string> c = {"csf", "--h", "2,3,4,4", "--basis", "elementary"};
  CHECK(run(c).out == run(c).out);
}

TEST_CASE("bijection subcommand") {
  auto ap = run({"bijection", "--h", "2,3,5,5,5", "--map", "nilpotent", "--mode", "trace", "--x", "1,0,1,1,0"});
  REQUIRE(ap.status == kExitOk);
  auto j = ap.json();
  CHECK(j["output"] == Json::parse("[[2],[1],[5],[3],[4]]"));
  CHECK(j["trace"].size() == 5);
  CHECK(j["inversions"] == 3);
  auto inv = run({"bijection", "--h", "3,5,5,5,5", "--map", "b3", "--mode", "inverse", "--S", "[[1,2],[3],[4],[5]]",
                  "--tableau", "[[1,4],[2],[5],[3]]"});
  REQUIRE(inv.status == kExitOk);
  CHECK(inv.json()["output"]["text"] == "-x_3*x_5^2*y_1 + x_3*x_5^2*y_2");
  for (const char* m : {"nilpotent", "b1", "b3"}) {
    auto rt = run({"bijection", "--h", "2,5,5,5,5", "--map", m, "--mode", "roundtrip"});
    CHECK(rt.status == kExitOk);
    CHECK(rt.json()["failures"].empty());
  }
  CHECK(error_code(run({"bijection", "--h", "2,3,3", "--map", "nilpotent", "--x", "2,0,0"})) == "NotInBasis");
  CHECK(error_code(run({"bijection", "--h", "2,3,3", "--map", "b1", "--mode", "inverse", "--tableau", "[[3],[1],[2]]"})) ==
        "NotPTableau");
  CHECK(error_code(run({"bijection", "--h", "2,3,3", "--map", "b1", "--mode", "inverse", "--tableau", "[[3"})) ==
        "ParseError");
}

TEST_CASE("csf subcommand") {
  auto p = run({"csf", "--h", "2,3,4,4"}).json();
  auto c = run({"csf", "--h", "2,3,4,4", "--method", "coloring"}).json();
  CHECK(p["expansion"] == c["expansion"]);
  CHECK(p["positivity"]["elementary"]["positive"] == true);
  auto w = run({"csf", "--h", "2,3,3", "--omega", "--basis", "elementary"}).json();
  CHECK(w["positivity"]["elementary"]["positive"] == false);
  CHECK(w["positivity"]["elementary"].contains("witness"));
  auto tex = run({"csf", "--h", "2,3,3", "--format", "latex"});
  CHECK(tex.out == "\\left(q\\right) s_{(2,1)} + \\left(1 + 2q + q^{2}\\right) s_{(1,1,1)}\n");
}

TEST_CASE("help") {
  auto r = run({"--help"});
  CHECK(r.status == kExitOk);
  CHECK(r.out.find("verify-paper") != std::string::npos);
  CHECK(run({"basis", "--help"}).out.find("--set") != std::string::npos);
}

TEST_CASE("JSON round trips") {
  XYElement e = XYElement::monomial(XYMonomial{{0, 0, 1}, 2}) - 3 * XYElement::monomial(XYMonomial{{1, 0, 0}, 0});
  CHECK(element_from_json(to_json(e)) == e);
  auto t = Tableau::from_rows({{1, 4}, {2}, {5}, {3}});
  CHECK(tableau_from_json(to_json(t)) == t);
  QPolynomial q = QPolynomial::monomial(3, 2) + QPolynomial::monomial(0, -1);
  CHECK(qpoly_from_json(to_json(q)) == q);
  mpz_class big("123456789012345678901234567890");
  CHECK(mpz_json(big) == "123456789012345678901234567890");
  CHECK(mpz_json(mpz_class(-7)) == -7);
  XYElement huge = XYElement::monomial(XYMonomial::one(2), big);
  CHECK(element_from_json(to_json(huge)) == huge);
  CHECK_THROWS_AS(element_from_json(Json::parse("[1]")), Error);
  CHECK_THROWS_AS(qpoly_from_json(Json::parse("[[1]]")), Error);
  CHECK(to_json(Error(ErrorCode::OddDegree, "m"))["error"]["code"] == "OddDegree");
}
