#include "hess/cli.hpp"

#include <CLI11.hpp>
#include <functional>
#include <ostream>
#include <random>
#include <set>
#include <sstream>

#include "hess/bijections.hpp"
#include "hess/cohomology.hpp"
#include "hess/error.hpp"
#include "hess/gkm.hpp"
#include "hess/golden.hpp"
#include "hess/io.hpp"
#include "hess/poincare.hpp"
#include "hess/symfunc.hpp"

namespace hess {

namespace {

// round trips, transition blocks and orbit ranks stay below this unless
// --long-tests is given (blocks at n = 7 take ~15 s)
constexpr int kHeavyMaxN = 6;
constexpr int kGkmRankMaxN = 4;

struct Options {
  RunConfig cfg;
  std::string h_text, shape_text, format_text = "json";
  // csf
  std::string basis = "schur", method = "ptableaux";
  bool omega = false;
  // tableaux
  bool standard = false;
  // gkm
  std::string action = "graph";
  int trials = 16;
  // basis
  std::string set = "B1";
  // bijection
  std::string map = "nilpotent", mode = "apply", x_text, tableau_text, s_text;
  int k = 0;
  // verify-paper
  std::string key, show;
};

// a result document plus, for non-JSON formats, its rendering
struct Outcome {
  Json doc;
  std::optional<std::string> text;
  bool verified = true;
};

std::string format_name(OutputFormat f) {
  switch (f) {
    case OutputFormat::json: return "json";
    case OutputFormat::csv: return "csv";
    case OutputFormat::latex: return "latex";
    case OutputFormat::dot: return "dot";
  }
  return "json";
}

void require_format(const Options& o, std::initializer_list<OutputFormat> allowed) {
  for (auto f : allowed)
    if (o.cfg.format == f) return;
  fail(ErrorCode::ParseError, "format '" + format_name(o.cfg.format) + "' is not available for '" + o.cfg.command + "'");
}

void guard(int n, int limit, const std::string& what) {
  if (n > limit)
    fail(ErrorCode::GuardrailExceeded, "refusing " + what + " for n = " + std::to_string(n) + ": limit is " +
                                           std::to_string(limit) + " (raise with --max-n / --long-tests)");
}

const HessenbergFunction& require_h(const Options& o) {
  if (!o.cfg.h) fail(ErrorCode::ParseError, "--h is required for '" + o.cfg.command + "'");
  guard(o.cfg.h->n(), o.cfg.max_n, o.cfg.command);
  return *o.cfg.h;
}

std::vector<int> parse_int_list(const std::string& s, const std::string& what) {
  std::vector<int> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad " + what + " entry '" + tok + "'");
    }
  }
  return v;
}

Json parse_json_arg(const std::string& s, const std::string& flag) {
  try {
    return Json::parse(s);
  } catch (const Json::exception& e) {
    fail(ErrorCode::ParseError, flag + " is not valid JSON: " + e.what());
  }
}

char basis_letter(Basis b) {
  switch (b) {
    case Basis::monomial: return 'm';
    case Basis::schur: return 's';
    case Basis::elementary: return 'e';
    case Basis::homogeneous: return 'h';
  }
  return 's';
}

std::string partition_csv(const Partition& p) {
  std::string s;
  for (int part : p.parts()) s += (s.empty() ? "" : " ") + std::to_string(part);
  return s;
}

std::string word_text(const std::vector<int>& w) {
  std::string s;
  for (int v : w) s += (s.empty() ? "" : " ") + std::to_string(v);
  return s;
}

// ---- csf ----

Outcome run_csf(const Options& o) {
  require_format(o, {OutputFormat::json, OutputFormat::csv, OutputFormat::latex});
  const auto& h = require_h(o);
  const Basis target = parse_basis(o.basis);
  SymFn f;
  if (o.method == "coloring")
    f = change_basis(csf_by_coloring(inc_graph(poset_of(h))), Basis::schur);
  else if (o.method == "ptableaux")
    f = csf_schur_by_ptableaux(h);
  else
    fail(ErrorCode::ParseError, "unknown method '" + o.method + "'");
  if (o.omega) f = omega(f);
  const SymFn shown = change_basis(f, target);

  Outcome r;
  r.doc = {{"h", to_json(h)},
           {"method", o.method},
           {"omega", o.omega},
           {"expansion", to_json(shown)},
           {"positivity",
            {{"schur", to_json(is_positive(f, Basis::schur))}, {"elementary", to_json(is_positive(f, Basis::elementary))}}}};
  if (o.cfg.format == OutputFormat::csv) {
    std::ostringstream s;
    s << "partition,exponent,coefficient\n";
    for (const auto& [lambda, c] : shown.terms())
      for (const auto& [e, v] : c.coefficients()) s << partition_csv(lambda) << "," << e << "," << v.get_str() << "\n";
    r.text = s.str();
  } else if (o.cfg.format == OutputFormat::latex) {
    std::ostringstream s;
    bool first = true;
    for (const auto& [lambda, c] : shown.terms()) {
      s << (first ? "" : " + ") << "\\left(" << c.to_latex() << "\\right) " << basis_letter(target) << "_{(";
      for (std::size_t i = 0; i < lambda.parts().size(); ++i) s << (i ? "," : "") << lambda.parts()[i];
      s << ")}";
      first = false;
    }
    r.text = (first ? std::string("0") : s.str()) + "\n";
  }
  return r;
}

// ---- poincare ----

Outcome run_poincare(const Options& o) {
  require_format(o, {OutputFormat::json, OutputFormat::csv, OutputFormat::latex});
  const auto& h = require_h(o);
  auto rep = reconcile(h, o.cfg.long_tests ? kGkmRankMaxN + 1 : kGkmRankMaxN);
  Outcome r;
  r.doc = to_json(rep);
  r.verified = rep.agree;
  if (o.cfg.format == OutputFormat::csv) {
    std::ostringstream s;
    s << "degree,coefficient\n";
    for (const auto& [e, v] : rep.via_tableaux.coefficients()) s << e << "," << v.get_str() << "\n";
    r.text = s.str();
  } else if (o.cfg.format == OutputFormat::latex) {
    r.text = rep.via_tableaux.to_latex() + "\n";
  }
  return r;
}

// ---- tableaux ----

Json tableaux_json(const std::vector<Tableau>& ts, const std::optional<HessenbergFunction>& h) {
  Json list = Json::array();
  QPolynomial gf;
  for (const auto& t : ts) {
    Json e = {{"rows", to_json(t)}};
    if (h) {
      auto inv = inversions(*h, t);
      e["inversions"] = inv.count();
      e["pairs"] = inv.pairs;
      gf.add_term(inv.count(), 1);
    }
    list.push_back(std::move(e));
  }
  Json out = {{"count", ts.size()}, {"tableaux", std::move(list)}};
  if (h) out["inversion_gf"] = to_json(gf);
  return out;
}

Outcome run_tableaux(const Options& o) {
  require_format(o, {OutputFormat::json, OutputFormat::csv, OutputFormat::latex});
  std::vector<std::pair<Partition, std::vector<Tableau>>> groups;
  std::optional<HessenbergFunction> h;
  Outcome r;
  if (o.standard) {
    if (!o.cfg.shape) fail(ErrorCode::ParseError, "--standard needs --shape");
    guard(o.cfg.shape->size(), o.cfg.max_n, "tableaux");
    groups.emplace_back(*o.cfg.shape, enumerate_syt(*o.cfg.shape));
    r.doc = {{"standard", true}};
  } else {
    h = require_h(o);
    if (o.cfg.shape) {
      if (o.cfg.shape->size() != h->n())
        fail(ErrorCode::ShapeMismatch, "shape " + o.cfg.shape->to_string() + " is not a partition of " + std::to_string(h->n()));
      groups.emplace_back(*o.cfg.shape, enumerate_p_tableaux(*h, *o.cfg.shape));
    } else {
      for (const auto& p : partitions_of(h->n())) groups.emplace_back(p, enumerate_p_tableaux(*h, p));
    }
    r.doc = {{"h", to_json(*h)}, {"standard", false}};
  }
  Json shapes = Json::array();
  for (const auto& [p, ts] : groups) {
    Json g = tableaux_json(ts, h);
    g["shape"] = to_json(p);
    shapes.push_back(std::move(g));
  }
  r.doc["shapes"] = std::move(shapes);

  if (o.cfg.format == OutputFormat::csv) {
    std::ostringstream s;
    s << "shape,index,reading_word" << (h ? ",inversions" : "") << "\n";
    for (const auto& [p, ts] : groups)
      for (std::size_t i = 0; i < ts.size(); ++i) {
        s << partition_csv(p) << "," << i + 1 << "," << word_text(ts[i].reading_word());
        if (h) s << "," << inversions(*h, ts[i]).count();
        s << "\n";
      }
    r.text = s.str();
  } else if (o.cfg.format == OutputFormat::latex) {
    std::ostringstream s;
    for (const auto& [p, ts] : groups) {
      s << "% shape " << p.to_string() << "\n";
      for (const auto& t : ts) s << tableau_latex(t) << "\n";
    }
    r.text = s.str();
  }
  return r;
}

// ---- gkm ----

std::vector<std::pair<std::string, GkmClass>> generator_classes(const HessenbergFunction& h) {
  const int n = h.n();
  const auto tag = classify_form(h);
  std::vector<std::pair<std::string, GkmClass>> out;
  for (int k = 1; k <= n; ++k) out.emplace_back("x_" + std::to_string(k), class_x(n, k));
  if (tag.one_row)
    for (int k = 1; k <= n; ++k) out.emplace_back("y_" + std::to_string(k) + " (one-row)", class_y_one_row(h, k));
  if (tag.transpose)
    for (int k = 1; k <= n; ++k) out.emplace_back("y_" + std::to_string(k) + " (transpose)", class_y_transpose(h, k));
  return out;
}

Json check_json(const GkmGraph& g, const GkmCheck& c) {
  Json j = {{"ok", c.ok}};
  if (c.failing_edge)
    j["failing_edge"] = {g.vertex(c.failing_edge->w).to_string(), g.vertex(c.failing_edge->w2).to_string()};
  return j;
}

Outcome run_gkm(const Options& o) {
  const auto& h = require_h(o);
  Outcome r;
  if (o.action == "graph") {
    require_format(o, {OutputFormat::json, OutputFormat::dot});
    auto g = build_gkm_graph(h);
    r.doc = to_json(g);
    if (o.cfg.format == OutputFormat::dot) r.text = g.to_dot();
    return r;
  }
  require_format(o, {OutputFormat::json});
  if (o.action == "classes") {
    Json classes = Json::array();
    for (const auto& [name, c] : generator_classes(h)) {
      Json j = to_json(c);
      j["name"] = name;
      classes.push_back(std::move(j));
    }
    r.doc = {{"h", to_json(h)}, {"form", classify_form(h).to_string()}, {"classes", std::move(classes)}};
  } else if (o.action == "check") {
    auto g = build_gkm_graph(h);
    auto gens = generator_classes(h);
    Json results = Json::array();
    for (const auto& [name, c] : gens) {
      auto res = check_gkm_condition(g, c);
      r.verified = r.verified && res.ok;
      Json j = check_json(g, res);
      j["class"] = name;
      results.push_back(std::move(j));
    }
    // random integer combinations of products of two generators and a t_k
    std::mt19937_64 rng(o.cfg.seed);
    std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3), tk(1, h.n());
    Json random = Json::array();
    for (int trial = 0; trial < o.trials; ++trial) {
      const auto a = pick(rng), b = pick(rng), c = pick(rng);
      const int k = tk(rng);
      const int ca = coeff(rng), cb = coeff(rng);
      GkmClass combo = ca * (gens[a].second * gens[b].second) + cb * (class_t(h.n(), k) * gens[c].second);
      auto res = check_gkm_condition(g, combo);
      r.verified = r.verified && res.ok;
      Json j = check_json(g, res);
      std::ostringstream d;
      d << ca << "*(" << gens[a].first << ")*(" << gens[b].first << ") + " << cb << "*t_" << k << "*(" << gens[c].first << ")";
      j["class"] = d.str();
      random.push_back(std::move(j));
    }
    r.doc = {{"h", to_json(h)}, {"seed", o.cfg.seed}, {"generators", std::move(results)}, {"random", std::move(random)},
             {"all_ok", r.verified}};
  } else if (o.action == "relations") {
    Json reps = Json::array();
    for (const auto& rep : verify_relations(h)) {
      r.verified = r.verified && rep.all_pass();
      reps.push_back(to_json(rep));
    }
    r.doc = {{"h", to_json(h)}, {"reports", std::move(reps)}, {"all_pass", r.verified}};
  } else {
    fail(ErrorCode::ParseError, "unknown gkm action '" + o.action + "'");
  }
  return r;
}

// ---- basis ----

std::string listing_csv(const BasisSet& b) {
  std::ostringstream s;
  s << "index,degree,element\n";
  for (std::size_t i = 0; i < b.size(); ++i) {
    std::string e = b.elements[i].to_string();
    if (e.find(',') != std::string::npos) e = "\"" + e + "\"";
    s << i + 1 << "," << b.degree_of(i) << "," << e << "\n";
  }
  return s.str();
}

Outcome run_basis(const Options& o) {
  const auto& h = require_h(o);
  const int n = h.n();
  Outcome r;
  const std::string& set = o.set;
  auto listing = [&](const BasisSet& b) {
    require_format(o, {OutputFormat::json, OutputFormat::csv});
    r.doc = to_json(b);
    if (o.cfg.format == OutputFormat::csv) r.text = listing_csv(b);
  };
  if (set == "B1") {
    listing(basis_B1(h));
  } else if (set == "B2") {
    listing(basis_B2(h));
  } else if (set == "B3") {
    listing(basis_B3(h));
  } else if (set == "Nh") {
    listing(basis_nilpotent(h));
  } else if (set == "transpose") {
    require_format(o, {OutputFormat::json});
    auto t = basis_transpose(h);
    r.doc = {{"b1", to_json(t.b1)}, {"b2", to_json(t.b2)}, {"b3", to_json(t.b3)}};
  } else if (set == "blocks" || set == "transpose-blocks") {
    require_format(o, {OutputFormat::json, OutputFormat::csv, OutputFormat::latex});
    guard(n, o.cfg.long_tests ? o.cfg.max_n : kHeavyMaxN, "transition blocks");
    const bool tr = set == "transpose-blocks";
    auto blocks = tr ? transition_blocks_transpose(h) : transition_blocks(h);
    Json list = Json::array();
    for (const auto& b : blocks) list.push_back(to_json(b));
    r.doc = {{"h", to_json(h)}, {"form", tr ? "transpose" : "one_row"}, {"blocks", std::move(list)}};
    if (o.cfg.format == OutputFormat::csv) {
      r.text = blocks_csv(blocks);
    } else if (o.cfg.format == OutputFormat::latex) {
      std::ostringstream s;
      for (const auto& b : blocks) s << "% degree " << b.degree << "\n" << matrix_latex(b.matrix) << "\n";
      r.text = s.str();
    }
  } else if (set == "unimodular") {
    require_format(o, {OutputFormat::json});
    guard(n, o.cfg.long_tests ? o.cfg.max_n : kHeavyMaxN, "transition blocks");
    const auto tag = classify_form(h);
    if (tag.is_general()) fail(ErrorCode::FormMismatch, "h = " + h.to_string() + " has neither special form");
    Json forms = Json::array();
    auto report = [&](const std::string& name, const std::vector<TransitionBlock>& blocks) {
      Json list = Json::array();
      bool all = true;
      for (const auto& b : blocks) {
        const mpz_class d = block_determinant(b);
        const bool u = check_unimodular(b);
        all = all && u;
        list.push_back({{"degree", b.degree}, {"size", b.matrix.size()}, {"determinant", mpz_json(d)}, {"unimodular", u}});
      }
      r.verified = r.verified && all;
      forms.push_back({{"form", name}, {"blocks", std::move(list)}, {"all_unimodular", all}});
    };
    if (tag.one_row) report("one_row", transition_blocks(h));
    if (tag.transpose) report("transpose", transition_blocks_transpose(h));
    r.doc = {{"h", to_json(h)}, {"forms", std::move(forms)}, {"all_unimodular", r.verified}};
  } else if (set == "decomposition") {
    require_format(o, {OutputFormat::json});
    r.doc = to_json(decomposition_counts(h));
  } else if (set == "orbits") {
    require_format(o, {OutputFormat::json});
    guard(n, o.cfg.long_tests ? o.cfg.max_n : kHeavyMaxN, "orbit rank verification");
    r.doc = to_json(permutation_orbits(h));
  } else {
    fail(ErrorCode::ParseError, "unknown basis set '" + set + "'");
  }
  return r;
}

// ---- bijection ----

Json trace_json(const Trace& t) {
  Json out = Json::array();
  for (const auto& s : t) out.push_back(to_json(s));
  return out;
}

XYElement b3_element(const std::vector<int>& x, int k) {
  XYMonomial a{x, k}, b{x, 1};
  return XYElement::monomial(a) - XYElement::monomial(b);
}

Outcome run_bijection(const Options& o) {
  require_format(o, {OutputFormat::json});
  const auto& h = require_h(o);
  const int n = h.n();
  Outcome r;
  r.doc = {{"h", to_json(h)}, {"map", o.map}, {"mode", o.mode}};
  if (o.map != "nilpotent" && o.map != "b1" && o.map != "b3") fail(ErrorCode::ParseError, "unknown map '" + o.map + "'");

  if (o.mode == "apply" || o.mode == "trace") {
    if (o.x_text.empty()) fail(ErrorCode::ParseError, "--x is required (exponents of x_1..x_n)");
    const auto x = parse_int_list(o.x_text, "exponent");
    Trace trace;
    Trace* tp = o.mode == "trace" ? &trace : nullptr;
    if (o.map == "b3") {
      const auto e = b3_element(x, o.k);
      auto p = phi_b3(h, e, tp);
      r.doc["input"] = to_json(e);
      r.doc["output"] = to_json(p);
    } else {
      XYMonomial m{x, 0};
      auto t = o.map == "nilpotent" ? phi_nilpotent(h, m, tp) : phi_b1(h, m, tp);
      r.doc["input"] = to_json(m);
      r.doc["output"] = to_json(t);
      r.doc["inversions"] = inversions(h, t).count();
    }
    if (tp) r.doc["trace"] = trace_json(trace);
  } else if (o.mode == "inverse") {
    if (o.tableau_text.empty()) fail(ErrorCode::ParseError, "--tableau is required (rows, bottom row first, as JSON)");
    const auto t = tableau_from_json(parse_json_arg(o.tableau_text, "--tableau"));
    if (o.map == "b3") {
      if (o.s_text.empty()) fail(ErrorCode::ParseError, "--S is required for the B3 map");
      TabPair p{tableau_from_json(parse_json_arg(o.s_text, "--S")), t};
      r.doc["input"] = to_json(p);
      r.doc["output"] = to_json(psi_b3(h, p));
    } else {
      r.doc["input"] = to_json(t);
      r.doc["output"] = to_json(o.map == "nilpotent" ? psi_nilpotent(h, t) : psi_b1(h, t));
      if (o.map == "b1") r.doc["intermediate"] = to_json(psi_b1_intermediate(h, t));
    }
  } else if (o.mode == "roundtrip") {
    guard(n, o.cfg.long_tests ? o.cfg.max_n : kHeavyMaxN, "exhaustive round trip");
    long checked = 0;
    Json failures = Json::array();
    auto record = [&](bool ok, const std::string& what) {
      ++checked;
      if (!ok && failures.size() < 10) failures.push_back(what);
      r.verified = r.verified && ok;
    };
    if (o.map == "nilpotent" || o.map == "b1") {
      const bool nil = o.map == "nilpotent";
      auto basis = nil ? basis_nilpotent(h) : basis_B1(h);
      std::set<std::vector<int>> images;
      for (const auto& e : basis.elements) {
        const auto& m = e.terms().begin()->first;
        auto t = nil ? phi_nilpotent(h, m) : phi_b1(h, m);
        images.insert(t.reading_word());
        record(is_p_tableau(h, t) && (nil ? psi_nilpotent(h, t) : psi_b1(h, t)) == m, "psi(phi(" + m.to_string() + "))");
      }
      auto target = enumerate_p_tableaux(h, Partition::column(n));
      for (const auto& t : target) {
        auto back = nil ? phi_nilpotent(h, psi_nilpotent(h, t)) : phi_b1(h, psi_b1(h, t));
        record(back == t, "phi(psi(" + word_text(t.reading_word()) + "))");
      }
      record(images.size() == target.size() && basis.size() == target.size(), "domain and target sizes differ");
      r.doc["domain_size"] = basis.size();
      r.doc["target_size"] = target.size();
    } else {
      auto basis = basis_B3(h);
      const auto mu = Partition::hook(n);
      auto syt = enumerate_syt(mu);
      auto pt = enumerate_p_tableaux(h, mu);
      for (const auto& e : basis.elements) {
        auto p = phi_b3(h, e);
        record(is_standard(p.s) && is_p_tableau(h, p.t) && psi_b3(h, p) == e, "psi(phi(" + e.to_string() + "))");
      }
      for (const auto& s : syt)
        for (const auto& t : pt) {
          TabPair p{s, t};
          record(phi_b3(h, psi_b3(h, p)) == p, "phi(psi(S, T)) for S = " + word_text(s.reading_word()) +
                                                   ", T = " + word_text(t.reading_word()));
        }
      record(basis.size() == syt.size() * pt.size(), "domain and target sizes differ");
      r.doc["domain_size"] = basis.size();
      r.doc["target_size"] = syt.size() * pt.size();
    }
    r.doc["checked"] = checked;
    r.doc["failures"] = std::move(failures);
    r.doc["all_ok"] = r.verified;
  } else {
    fail(ErrorCode::ParseError, "unknown mode '" + o.mode + "'");
  }
  return r;
}

// ---- verify-paper ----

Outcome run_verify_paper(const Options& o) {
  require_format(o, {OutputFormat::json, OutputFormat::csv});
  Outcome r;
  if (!o.show.empty()) {
    require_format(o, {OutputFormat::json});
    r.doc = {{"key", o.show}, {"golden", golden(o.show)}};
    return r;
  }
  std::vector<PaperCheck> checks;
  if (!o.key.empty())
    checks.push_back(verify_golden(o.key));
  else
    checks = verify_paper();
  Json list = Json::array();
  std::ostringstream csv;
  csv << "key,pass,detail\n";
  for (const auto& c : checks) {
    r.verified = r.verified && c.pass;
    Json j = {{"key", c.key}, {"description", c.description}, {"pass", c.pass}};
    if (!c.pass) j["detail"] = c.detail;
    list.push_back(std::move(j));
    csv << c.key << "," << (c.pass ? "pass" : "FAIL") << ",\"" << c.detail << "\"\n";
  }
  r.doc = {{"checks", std::move(list)}, {"all_pass", r.verified}};
  if (o.cfg.format == OutputFormat::csv) r.text = csv.str();
  return r;
}

// ---- parsing ----

void add_common(CLI::App* sub, Options& o) {
  sub->add_option("--h", o.h_text, "Hessenberg function as a comma list, e.g. 2,3,3");
  sub->add_option("--shape", o.shape_text, "partition as a comma list, e.g. 2,1,1,1");
  sub->add_option("--format", o.format_text, "output format")
      ->check(CLI::IsMember({"json", "csv", "latex", "dot"}))
      ->capture_default_str();
  sub->add_option("--max-n", o.cfg.max_n, "largest n any command will enumerate")
      ->check(CLI::Range(1, 10))
      ->capture_default_str();
  sub->add_option("--seed", o.cfg.seed, "seed for randomized checks")->capture_default_str();
  sub->add_flag("--long-tests", o.cfg.long_tests, "lift the extra limits on heavy computations");
}

OutputFormat to_format(const std::string& s) {
  if (s == "csv") return OutputFormat::csv;
  if (s == "latex") return OutputFormat::latex;
  if (s == "dot") return OutputFormat::dot;
  return OutputFormat::json;
}

int emit_error(std::ostream& out, std::ostream& err, const std::string& code, const std::string& message, int status) {
  Json j = {{"error", {{"code", code}, {"message", message}}}};
  out << j.dump(2) << "\n";
  err << "hess: " << code << ": " << message << "\n";
  return status;
}

}  // namespace

int dispatch(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Hessenberg variety cohomology toolkit", "hess"};
  app.require_subcommand(1);
  // "-h" would clash with --h; subcommands inherit this
  app.set_help_flag("--help", "print help");

  struct Command {
    const char* name;
    const char* help;
    std::function<Outcome(const Options&)> run;
  };
  const std::vector<Command> commands = {
      {"csf", "chromatic quasisymmetric function: expansions and positivity", run_csf},
      {"poincare", "Poincare polynomial by every available method", run_poincare},
      {"tableaux", "P-tableaux (or standard tableaux) with inversion data", run_tableaux},
      {"gkm", "GKM graph, classes, condition checks, relation identities", run_gkm},
      {"basis", "monomial bases, transition blocks, decomposition, orbits", run_basis},
      {"bijection", "apply, trace, invert or round-trip the insertion maps", run_bijection},
      {"verify-paper", "regenerate the worked examples and compare with the embedded goldens", run_verify_paper},
  };
  std::vector<CLI::App*> subs;
  for (const auto& c : commands) {
    auto* sub = app.add_subcommand(c.name, c.help);
    add_common(sub, o);
    subs.push_back(sub);
  }
  auto* csf = subs[0];
  csf->add_option("--basis", o.basis, "monomial|schur|elementary|homogeneous")->capture_default_str();
  csf->add_option("--method", o.method, "ptableaux|coloring")->capture_default_str();
  csf->add_flag("--omega", o.omega, "apply the involution s_lambda -> s_lambda'");
  subs[2]->add_flag("--standard", o.standard, "list standard tableaux of --shape instead");
  subs[3]->add_option("--action", o.action, "graph|classes|check|relations")->capture_default_str();
  subs[3]->add_option("--trials", o.trials, "random combinations checked by --action check")
      ->check(CLI::Range(0, 1000))
      ->capture_default_str();
  subs[4]->add_option("--set", o.set, "B1|B2|B3|Nh|transpose|blocks|transpose-blocks|unimodular|decomposition|orbits")
      ->capture_default_str();
  auto* bij = subs[5];
  bij->add_option("--map", o.map, "nilpotent|b1|b3")->capture_default_str();
  bij->add_option("--mode", o.mode, "apply|trace|inverse|roundtrip")->capture_default_str();
  bij->add_option("--x", o.x_text, "exponents of x_1..x_n");
  bij->add_option("--k", o.k, "y index for the B3 map: x^l (y_k - y_1)");
  bij->add_option("--tableau", o.tableau_text, "tableau rows as JSON, bottom row first");
  bij->add_option("--S", o.s_text, "standard tableau rows as JSON (B3 inverse)");
  subs[6]->add_option("--key", o.key, "check a single golden entry");
  subs[6]->add_option("--show", o.show, "print a golden entry");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    for (auto* s : subs)
      if (s->parsed()) {
        out << s->help();
        return kExitOk;
      }
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    return emit_error(out, err, "ParseError", e.what(), kExitValidation);
  }

  std::size_t which = 0;
  while (which < subs.size() && !subs[which]->parsed()) ++which;
  o.cfg.command = commands[which].name;
  o.cfg.format = to_format(o.format_text);

  try {
    if (!o.h_text.empty()) o.cfg.h = parse_hessenberg(o.h_text);
    if (!o.shape_text.empty()) o.cfg.shape = parse_partition(o.shape_text);
    Outcome r = commands[which].run(o);
    if (r.text)
      out << *r.text;
    else
      out << r.doc.dump(2) << "\n";
    if (!r.verified) {
      err << "hess: verification failed\n";
      return kExitVerification;
    }
    return kExitOk;
  } catch (const Error& e) {
    return emit_error(out, err, std::string(to_string(e.code())), e.message(), kExitValidation);
  } catch (const std::exception& e) {
    return emit_error(out, err, "Internal", e.what(), kExitInternal);
  }
}

}  // namespace hess
