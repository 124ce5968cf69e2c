#include "hess/io.hpp"

#include <sstream>

namespace hess {

Json mpz_json(const mpz_class& z) {
  if (z.fits_slong_p()) return Json(static_cast<std::int64_t>(z.get_si()));
  return Json(z.get_str());
}

namespace {

mpz_class json_mpz(const Json& j) {
  if (j.is_number_integer()) return mpz_class(static_cast<long>(j.get<std::int64_t>()));
  if (j.is_string()) {
    mpz_class z;
    if (z.set_str(j.get<std::string>(), 10) == 0) return z;
  }
  fail(ErrorCode::ParseError, "expected an integer, got " + j.dump());
}

Json matrix_json(const MatZ& m) {
  Json rows = Json::array();
  for (const auto& r : m) {
    Json row = Json::array();
    for (const auto& v : r) row.push_back(mpz_json(v));
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string basis_name(Basis b) { return std::string(to_string(b)); }

}  // namespace

Json to_json(const HessenbergFunction& h) { return h.values(); }

Json to_json(const Partition& p) { return p.parts(); }

Json to_json(const Tableau& t) { return t.rows(); }

Json to_json(const QPolynomial& p) {
  Json out = Json::array();
  for (const auto& [e, c] : p.coefficients()) out.push_back(Json::array({e, mpz_json(c)}));
  return out;
}

Json to_json(const SymFn& f) {
  Json terms = Json::array();
  for (const auto& [lambda, c] : f.terms())
    terms.push_back({{"partition", to_json(lambda)}, {"coefficient", to_json(c)}});
  return {{"basis", basis_name(f.basis())}, {"degree", f.degree()}, {"terms", std::move(terms)}, {"text", f.to_string()}};
}

Json to_json(const PositivityReport& r) {
  Json j = {{"positive", r.positive}};
  if (r.witness) j["witness"] = {{"partition", to_json(r.witness->first)}, {"q_exponent", r.witness->second}};
  return j;
}

Json to_json(const GkmClass& c) {
  Json values = Json::object();
  const auto& perms = permutations_of(c.n());
  for (std::size_t i = 0; i < perms.size(); ++i) values[perms[i].to_string()] = c.at_index(i).to_string();
  return {{"n", c.n()}, {"values", std::move(values)}};
}

Json to_json(const GkmGraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges())
    edges.push_back({{"from", g.vertex(e.w).to_string()},
                     {"to", g.vertex(e.w2).to_string()},
                     {"positions", {e.j, e.i}},
                     {"label", g.label(e).to_string()}});
  Json vertices = Json::array();
  for (std::size_t i = 0; i < g.vertex_count(); ++i) vertices.push_back(g.vertex(i).to_string());
  return {{"h", to_json(g.h())}, {"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Json to_json(const RelationReport& r) {
  Json ids = Json::array();
  for (const auto& [name, ok] : r.identities) ids.push_back({{"identity", name}, {"holds", ok}});
  return {{"form", std::string(to_string(r.form))}, {"identities", std::move(ids)}, {"all_pass", r.all_pass()}};
}

Json to_json(const XYMonomial& m) { return {{"x", m.x}, {"y", m.y}, {"text", m.to_string()}}; }

Json to_json(const XYElement& e) {
  Json terms = Json::array();
  for (const auto& [m, c] : e.terms()) terms.push_back({{"x", m.x}, {"y", m.y}, {"c", mpz_json(c)}});
  return {{"terms", std::move(terms)}, {"text", e.to_string()}};
}

Json to_json(const BasisSet& b) {
  Json elems = Json::array();
  for (std::size_t i = 0; i < b.size(); ++i) {
    Json e = to_json(b.elements[i]);
    e["degree"] = b.degree_of(i);
    elems.push_back(std::move(e));
  }
  return {{"label", std::string(to_string(b.label))},
          {"h", to_json(b.h)},
          {"y_degree", b.y_degree},
          {"size", b.size()},
          {"degree_gf", to_json(degree_gf(b))},
          {"elements", std::move(elems)}};
}

Json to_json(const TransitionBlock& b) {
  Json rows = Json::array(), cols = Json::array();
  for (const auto& m : b.row_labels) rows.push_back(m.to_string());
  for (const auto& e : b.column_labels) cols.push_back(e.to_string());
  Json j = {{"degree", b.degree}, {"rows", std::move(rows)}, {"columns", std::move(cols)}, {"matrix", matrix_json(b.matrix)}};
  if (b.matrix.size() == b.column_labels.size()) {
    const mpz_class d = block_determinant(b);
    j["determinant"] = mpz_json(d);
    j["unimodular"] = abs(d) == 1;
  }
  return j;
}

Json to_json(const DecompositionCounts& d) {
  Json by = Json::array();
  for (const auto& [deg, mult] : d.by_degree)
    by.push_back({{"degree", deg}, {"trivial", mult.first}, {"standard", mult.second}});
  return {{"n", d.n},
          {"by_degree", std::move(by)},
          {"total_trivial", d.total_trivial()},
          {"total_standard", d.total_standard()},
          {"dimension", d.dimension()}};
}

Json to_json(const OrbitPartition& o) {
  Json orbits = Json::array(), fixed = Json::array();
  for (const auto& orb : o.orbits) {
    Json one = Json::array();
    for (const auto& m : orb) one.push_back(m.to_string());
    orbits.push_back(std::move(one));
  }
  for (const auto& m : o.fixed) fixed.push_back(m.to_string());
  return {{"orbits", std::move(orbits)},
          {"orbit_count", o.orbits.size()},
          {"fixed", std::move(fixed)},
          {"fixed_count", o.fixed.size()},
          {"rank", o.rank}};
}

Json to_json(const TabPair& p) { return {{"S", to_json(p.s)}, {"T", to_json(p.t)}}; }

Json to_json(const PoincareReport& r) {
  Json methods = {{"via_ptableaux", to_json(r.via_tableaux)}};
  if (r.closed_form) methods["closed_form"] = to_json(*r.closed_form);
  if (r.via_basis) methods["via_basis_degrees"] = to_json(*r.via_basis);
  if (r.via_gkm) methods["via_gkm"] = to_json(*r.via_gkm);
  return {{"h", to_json(r.h)},
          {"poincare", to_json(r.via_tableaux)},
          {"text", r.via_tableaux.to_string()},
          {"methods", std::move(methods)},
          {"methods_agree", r.agree}};
}

Json to_json(const Error& e) {
  return {{"error", {{"code", std::string(to_string(e.code()))}, {"message", e.message()}}}};
}

Tableau tableau_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "a tableau is a list of rows, bottom row first");
  try {
    return Tableau::from_rows(j.get<std::vector<std::vector<int>>>());
  } catch (const Json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("bad tableau: ") + ex.what());
  }
}

XYElement element_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("terms") || !j["terms"].is_array())
    fail(ErrorCode::ParseError, "an element is {\"terms\": [{\"x\": [...], \"y\": k, \"c\": c}, ...]}");
  XYElement e;
  try {
    for (const auto& t : j["terms"]) {
      XYMonomial m{t.at("x").get<std::vector<int>>(), t.value("y", 0)};
      e.add_term(m, t.contains("c") ? json_mpz(t["c"]) : mpz_class(1));
    }
  } catch (const Json::exception& ex) {
    fail(ErrorCode::ParseError, std::string("bad element: ") + ex.what());
  }
  return e;
}

QPolynomial qpoly_from_json(const Json& j) {
  if (!j.is_array()) fail(ErrorCode::ParseError, "a q-polynomial is [[exponent, coefficient], ...]");
  QPolynomial p;
  for (const auto& t : j) {
    if (!t.is_array() || t.size() != 2 || !t[0].is_number_integer())
      fail(ErrorCode::ParseError, "bad q-polynomial term " + t.dump());
    p.add_term(t[0].get<int>(), json_mpz(t[1]));
  }
  return p;
}

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

std::string blocks_csv(const std::vector<TransitionBlock>& blocks) {
  std::ostringstream out;
  for (const auto& b : blocks) {
    out << "# degree " << b.degree << "\n";
    out << "row";
    for (const auto& c : b.column_labels) out << "," << csv_field(c.to_string());
    out << "\n";
    for (std::size_t r = 0; r < b.row_labels.size(); ++r) {
      out << csv_field(b.row_labels[r].to_string());
      for (const auto& v : b.matrix[r]) out << "," << v.get_str();
      out << "\n";
    }
  }
  return out.str();
}

std::string matrix_latex(const MatZ& m) {
  std::ostringstream out;
  const std::size_t cols = m.empty() ? 0 : m.front().size();
  out << "\\left[\\begin{array}{" << std::string(cols, 'c') << "}\n";
  for (const auto& row : m) {
    for (std::size_t c = 0; c < row.size(); ++c) out << (c ? " & " : "") << row[c].get_str();
    out << " \\\\\n";
  }
  out << "\\end{array}\\right]";
  return out.str();
}

std::string tableau_latex(const Tableau& t) {
  std::ostringstream out;
  out << "\\begin{ytableau}";
  const auto& rows = t.rows();
  for (std::size_t r = rows.size(); r-- > 0;) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) out << (c ? " & " : " ") << rows[r][c];
    out << (r ? " \\\\" : " ");
  }
  out << "\\end{ytableau}";
  return out.str();
}

}  // namespace hess
