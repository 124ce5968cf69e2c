#include "hess/golden.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "hess/bijections.hpp"
#include "hess/cohomology.hpp"
#include "hess/gkm.hpp"
#include "hess/symfunc.hpp"
#include "hess/tableaux.hpp"

namespace hess {

namespace {

// tableaux and columns are bottom-first rows unless marked "top_down"
constexpr const char* kCorpus = R"json({
  "fig1a": {
    "h": [2, 3, 3],
    "edges": [["123", "132"], ["231", "321"], ["312", "321"], ["123", "213"], ["132", "312"], ["213", "231"]]
  },
  "fig1b": {
    "h": [3, 3, 3],
    "edges": [["123", "132"], ["231", "321"], ["312", "321"], ["123", "213"], ["132", "312"], ["213", "231"],
              ["123", "321"], ["213", "312"], ["132", "231"]]
  },
  "fig2a": {
    "h": [2, 3, 3], "class": "x", "k": 2,
    "values": {"123": [0, 1, 0], "132": [0, 0, 1], "312": [1, 0, 0], "213": [1, 0, 0], "231": [0, 0, 1], "321": [0, 1, 0]}
  },
  "fig2b": {
    "h": [2, 3, 3], "class": "y_one_row", "k": 2,
    "values": {"123": [0, 0, 0], "132": [0, 0, 0], "312": [0, 0, 0], "213": [-1, 1, 0], "231": [0, 1, -1], "321": [0, 0, 0]}
  },
  "fig3a": {
    "h": [2, 3, 3], "class": "x", "k": 2,
    "values": {"123": [0, 1, 0], "132": [0, 0, 1], "312": [1, 0, 0], "213": [1, 0, 0], "231": [0, 0, 1], "321": [0, 1, 0]}
  },
  "fig3b": {
    "h": [2, 3, 3], "class": "y_transpose", "k": 2,
    "values": {"123": [0, 0, 0], "132": [0, 1, -1], "312": [-1, 1, 0], "213": [0, 0, 0], "231": [0, 0, 0], "321": [0, 0, 0]}
  },
  "fig4": {
    "h": [1, 4, 4, 4], "degree": 0,
    "rows": ["1", "y_2", "y_3", "y_1"],
    "columns": ["1", "-y_1 + y_2", "-y_1 + y_3", "-y_1 + y_4"],
    "matrix": [[1, 0, 0, 1], [0, 1, 0, -1], [0, 0, 1, -1], [0, -1, -1, -2]]
  },
  "ex-simple-ptableaux": {
    "h": [4, 5, 5, 5, 5], "shape": [2, 1, 1, 1],
    "tableaux": [
      [[1, 5], [2], [3], [4]], [[1, 5], [3], [2], [4]], [[1, 5], [2], [4], [3]],
      [[1, 5], [4], [2], [3]], [[1, 5], [3], [4], [2]], [[1, 5], [4], [3], [2]]
    ],
    "inversions": [3, 4, 4, 5, 5, 6],
    "coefficient": [[3, 1], [4, 2], [5, 2], [6, 1]],
    "relations": [[1, 5]],
    "specht_factors": [[4, 3], [4, 2], [4, 1], [3, 2], [3, 1], [2, 1]]
  },
  "ex-nilpotent-insertion": {
    "h": [2, 3, 5, 5, 5], "x": [1, 0, 1, 1, 0],
    "trace_top_down": [[5], [4, 5], [4, 3, 5], [4, 3, 5, 2], [4, 3, 5, 1, 2]]
  },
  "ex-b1-insertion": {
    "h": [3, 5, 5, 5, 5], "x": [2, 0, 1, 1, 0],
    "trace_top_down": [[5], [4, 5], [4, 3, 5], [4, 3, 5, 2], [4, 3, 1, 5, 2], [4, 3, 1, 2, 5]],
    "intermediate_top_down": [4, 3, 1, 5, 2]
  },
  "ex-b3-insertion": {
    "h": [3, 5, 5, 5, 5], "x": [0, 0, 1, 0, 2], "k": 2,
    "S": [[1, 2], [3], [4], [5]],
    "trace": [[[1, 4]], [[1, 4], [2]], [[1, 4], [2], [3]], [[1, 4], [2], [5], [3]]]
  }
})json";

const Json& corpus() {
  static const Json data = Json::parse(kCorpus);
  return data;
}

Tableau column_top_down(std::vector<int> col) {
  std::reverse(col.begin(), col.end());
  return Tableau::column(col);
}

Poly linear(const std::vector<int>& coeffs) {
  Poly p;
  for (std::size_t i = 0; i < coeffs.size(); ++i)
    if (coeffs[i] != 0) p.add_term(Monomial::var(static_cast<int>(i) + 1), coeffs[i]);
  return p;
}

HessenbergFunction h_of(const Json& g) { return new_hessenberg(g.at("h").get<std::vector<int>>()); }

// collects the first mismatch
class Diff {
 public:
  template <class A, class B>
  void expect(bool ok, const std::string& what, const A& got, const B& want) {
    if (ok || !first_.empty()) return;
    std::ostringstream s;
    s << what << ": got " << got << ", expected " << want;
    first_ = s.str();
  }
  void expect(bool ok, const std::string& what) {
    if (!ok && first_.empty()) first_ = what;
  }
  const std::string& first() const { return first_; }

 private:
  std::string first_;
};

void check_graph(const Json& g, Diff& d) {
  auto graph = build_gkm_graph(h_of(g));
  std::set<std::set<std::string>> got, want;
  for (const auto& e : graph.edges()) got.insert({graph.vertex(e.w).to_string(), graph.vertex(e.w2).to_string()});
  for (const auto& e : g.at("edges")) want.insert({e[0].get<std::string>(), e[1].get<std::string>()});
  d.expect(got.size() == want.size(), "edge count", got.size(), want.size());
  d.expect(got == want, "edge set differs");
  const std::size_t regular = 2 * want.size() / graph.vertex_count();
  for (auto deg : graph.degrees()) d.expect(deg == regular, "vertex degree", deg, regular);
}

void check_class(const Json& g, Diff& d) {
  const auto h = h_of(g);
  const int k = g.at("k").get<int>();
  const std::string kind = g.at("class").get<std::string>();
  GkmClass c = kind == "x" ? class_x(h.n(), k) : kind == "y_one_row" ? class_y_one_row(h, k) : class_y_transpose(h, k);
  for (const auto& [w, coeffs] : g.at("values").items()) {
    const Poly want = linear(coeffs.get<std::vector<int>>());
    const Poly& got = c.at(parse_permutation(w));
    d.expect(got == want, "value at " + w, got.to_string(), want.to_string());
  }
  auto check = check_gkm_condition(build_gkm_graph(h), c);
  d.expect(check.ok, "GKM condition fails");
}

void check_block(const Json& g, Diff& d) {
  const auto h = h_of(g);
  const int degree = g.at("degree").get<int>();
  auto blocks = transition_blocks(h);
  auto it = std::find_if(blocks.begin(), blocks.end(), [&](const TransitionBlock& b) { return b.degree == degree; });
  if (it == blocks.end()) return d.expect(false, "no block of degree " + std::to_string(degree));
  std::vector<std::string> rows, cols;
  for (const auto& m : it->row_labels) rows.push_back(m.to_string());
  for (const auto& e : it->column_labels) cols.push_back(e.to_string());
  d.expect(rows == g.at("rows").get<std::vector<std::string>>(), "row labels differ");
  d.expect(cols == g.at("columns").get<std::vector<std::string>>(), "column labels differ");
  MatZ want;
  for (const auto& r : g.at("matrix")) {
    std::vector<mpz_class> row;
    for (const auto& v : r) row.emplace_back(v.get<long>());
    want.push_back(std::move(row));
  }
  d.expect(it->matrix == want, "matrix differs");
}

void check_simple_ptableaux(const Json& g, Diff& d) {
  const auto h = h_of(g);
  const auto shape = Partition::from_parts(g.at("shape").get<std::vector<int>>());
  std::vector<Tableau> want;
  for (const auto& t : g.at("tableaux")) want.push_back(tableau_from_json(t));
  const auto inv = g.at("inversions").get<std::vector<int>>();
  for (std::size_t i = 0; i < want.size(); ++i) {
    d.expect(is_p_tableau(h, want[i]), "tableau " + std::to_string(i + 1) + " is not a P-tableau");
    d.expect(inversions(h, want[i]).count() == inv[i], "inversions of tableau " + std::to_string(i + 1),
             inversions(h, want[i]).count(), inv[i]);
  }
  auto got = enumerate_p_tableaux(h, shape);
  std::sort(want.begin(), want.end());
  d.expect(got.size() == want.size(), "tableau count", got.size(), want.size());
  d.expect(got == want, "tableau set differs");
  const auto coeff = qpoly_from_json(g.at("coefficient"));
  const auto schur = csf_schur_by_ptableaux(h).coefficient(shape);
  d.expect(schur == coeff, "Schur coefficient", schur.to_string(), coeff.to_string());
  std::set<std::pair<int, int>> rel;
  for (const auto& r : g.at("relations")) rel.emplace(r[0].get<int>(), r[1].get<int>());
  d.expect(poset_of(h).relations() == rel, "poset relations differ");
  Poly specht(1);
  for (const auto& f : g.at("specht_factors")) specht *= Poly::binomial(f[0].get<int>(), f[1].get<int>());
  const Tableau first = tableau_from_json(g.at("tableaux")[0]);
  d.expect(specht_polynomial(first) == specht, "Specht polynomial of the first tableau differs");
}

void check_trace(const Trace& got, const std::vector<Tableau>& want, Diff& d) {
  d.expect(got.size() == want.size(), "trace length", got.size(), want.size());
  for (std::size_t i = 0; i < std::min(got.size(), want.size()); ++i)
    d.expect(got[i] == want[i], "trace step " + std::to_string(i + 1), got[i].to_string(), want[i].to_string());
}

void check_nilpotent(const Json& g, Diff& d) {
  const auto h = h_of(g);
  XYMonomial m{g.at("x").get<std::vector<int>>(), 0};
  std::vector<Tableau> want;
  for (const auto& c : g.at("trace_top_down")) want.push_back(column_top_down(c.get<std::vector<int>>()));
  Trace trace;
  auto t = phi_nilpotent(h, m, &trace);
  check_trace(trace, want, d);
  d.expect(t == want.back(), "result", t.to_string(), want.back().to_string());
  d.expect(psi_nilpotent(h, t) == m, "inverse map does not return the monomial");
  d.expect(inversions(h, t).count() == m.x_degree(), "weight differs from degree");
}

void check_b1(const Json& g, Diff& d) {
  const auto h = h_of(g);
  XYMonomial m{g.at("x").get<std::vector<int>>(), 0};
  std::vector<Tableau> want;
  for (const auto& c : g.at("trace_top_down")) want.push_back(column_top_down(c.get<std::vector<int>>()));
  Trace trace;
  auto t = phi_b1(h, m, &trace);
  check_trace(trace, want, d);
  d.expect(t == want.back(), "result", t.to_string(), want.back().to_string());
  const auto mid = column_top_down(g.at("intermediate_top_down").get<std::vector<int>>());
  d.expect(psi_b1_intermediate(h, t) == mid, "intermediate tableau differs");
  d.expect(psi_b1(h, t) == m, "inverse map does not return the monomial");
}

void check_b3(const Json& g, Diff& d) {
  const auto h = h_of(g);
  XYMonomial a{g.at("x").get<std::vector<int>>(), g.at("k").get<int>()}, b = a;
  b.y = 1;
  const XYElement e = XYElement::monomial(a) - XYElement::monomial(b);
  std::vector<Tableau> want;
  for (const auto& t : g.at("trace")) want.push_back(tableau_from_json(t));
  Trace trace;
  auto p = phi_b3(h, e, &trace);
  check_trace(trace, want, d);
  const auto s = tableau_from_json(g.at("S"));
  d.expect(p.s == s, "S", p.s.to_string(), s.to_string());
  d.expect(p.t == want.back(), "T", p.t.to_string(), want.back().to_string());
  d.expect(psi_b3(h, p) == e, "inverse map does not return the element");
}

struct Entry {
  const char* description;
  std::function<void(const Json&, Diff&)> check;
};

const std::map<std::string, Entry, std::less<>>& registry() {
  static const std::map<std::string, Entry, std::less<>> r = {
      {"fig1a", {"GKM graph of (2,3,3): hexagon, 6 edges", check_graph}},
      {"fig1b", {"GKM graph of (3,3,3): 9 edges", check_graph}},
      {"fig2a", {"class x_2, n = 3", check_class}},
      {"fig2b", {"one-row class y_2 for (2,3,3)", check_class}},
      {"fig3a", {"class x_2, n = 3 (transpose figure)", check_class}},
      {"fig3b", {"transpose class y_2 for (2,3,3)", check_class}},
      {"fig4", {"degree-0 transition block for h(1) = 1, n = 4", check_block}},
      {"ex-simple-ptableaux", {"six P-tableaux of (4,5,5,5,5), shape (2,1,1,1)", check_simple_ptableaux}},
      {"ex-nilpotent-insertion", {"nilpotent insertion of x_1x_3x_4 at (2,3,5,5,5)", check_nilpotent}},
      {"ex-b1-insertion", {"B1 insertion of x_1^2x_3x_4 at (3,5,5,5,5)", check_b1}},
      {"ex-b3-insertion", {"B3 insertion of x_5^2x_3(y_2-y_1) at (3,5,5,5,5)", check_b3}},
  };
  return r;
}

}  // namespace

std::vector<std::string> golden_keys() {
  std::vector<std::string> keys;
  for (const auto& [k, v] : corpus().items()) keys.push_back(k);
  return keys;
}

const Json& golden(std::string_view key) {
  const auto& c = corpus();
  auto it = c.find(std::string(key));
  if (it == c.end()) fail(ErrorCode::KeyNotFound, "no golden entry '" + std::string(key) + "'");
  return *it;
}

PaperCheck verify_golden(std::string_view key) { return verify_golden(key, golden(key)); }

PaperCheck verify_golden(std::string_view key, const Json& g) {
  auto it = registry().find(key);
  if (it == registry().end()) fail(ErrorCode::KeyNotFound, "no check for golden entry '" + std::string(key) + "'");
  PaperCheck out{std::string(key), it->second.description, false, {}};
  Diff d;
  try {
    it->second.check(g, d);
  } catch (const Error& e) {
    d.expect(false, std::string(to_string(e.code())) + ": " + e.message());
  } catch (const Json::exception& e) {
    d.expect(false, std::string("malformed golden data: ") + e.what());
  }
  out.pass = d.first().empty();
  out.detail = d.first();
  return out;
}

std::vector<PaperCheck> verify_paper() {
  std::vector<PaperCheck> out;
  for (const auto& k : golden_keys()) out.push_back(verify_golden(k));
  return out;
}

}  // namespace hess
