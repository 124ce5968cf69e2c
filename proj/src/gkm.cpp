#include "hess/gkm.hpp"

#include <array>
#include <mutex>
#include <sstream>

#include "hess/error.hpp"

namespace hess {

const std::vector<Permutation>& permutations_of(int n) {
  if (n < 1 || n > kMaxVars) fail(ErrorCode::OutOfRange, "permutation tables support 1 <= n <= 8");
  static std::array<std::vector<Permutation>, kMaxVars + 1> table;
  static std::array<std::once_flag, kMaxVars + 1> once;
  std::call_once(once[n], [n] { table[n] = all_permutations(n); });
  return table[n];
}

GkmClass::GkmClass(int n, std::vector<Poly> values) : n_(n), values_(std::move(values)) {
  if (values_.size() != factorial(n)) fail(ErrorCode::SizeMismatch, "class needs one value per permutation");
}

GkmClass GkmClass::constant(int n, const Poly& p) { return GkmClass(n, std::vector<Poly>(factorial(n), p)); }

bool GkmClass::is_zero() const {
  for (auto& p : values_)
    if (!p.is_zero()) return false;
  return true;
}

std::optional<int> GkmClass::homogeneous_degree() const {
  int d = -1;
  for (auto& p : values_) {
    if (p.is_zero()) continue;
    if (!p.is_homogeneous()) return std::nullopt;
    int e = p.degree();
    if (d >= 0 && e != d) return std::nullopt;
    d = e;
  }
  return d;
}

void GkmClass::check_compatible(const GkmClass& o) const {
  if (o.n_ != n_) fail(ErrorCode::SizeMismatch, "classes on different S_n");
}

GkmClass& GkmClass::operator+=(const GkmClass& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] += o.values_[i];
  return *this;
}

GkmClass& GkmClass::operator-=(const GkmClass& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] -= o.values_[i];
  return *this;
}

GkmClass& GkmClass::operator*=(const GkmClass& o) {
  check_compatible(o);
  for (std::size_t i = 0; i < values_.size(); ++i) values_[i] *= o.values_[i];
  return *this;
}

GkmClass operator*(const Poly& p, GkmClass a) {
  for (auto& v : a.values_) v = p * v;
  return a;
}

GkmClass operator*(Poly::Coeff c, GkmClass a) {
  for (auto& v : a.values_) v *= c;
  return a;
}

Poly GkmGraph::label(const GkmEdge& e) const {
  const Permutation& w = vertex(e.w);
  return Poly::binomial(w(e.i), w(e.j));
}

std::vector<std::size_t> GkmGraph::degrees() const {
  std::vector<std::size_t> d(vertex_count(), 0);
  for (auto& e : edges_) {
    ++d[e.w];
    ++d[e.w2];
  }
  return d;
}

std::string GkmGraph::to_dot() const {
  std::ostringstream os;
  os << "graph gkm {\n";
  const auto& perms = permutations_of(n());
  for (std::size_t v = 0; v < perms.size(); ++v)
    os << "  v" << v << " [label=\"" << perms[v].to_string() << "\"];\n";
  for (auto& e : edges_) {
    const Permutation& w = perms[e.w];
    os << "  v" << e.w << " -- v" << e.w2 << " [label=\"t_" << w(e.i) << " - t_" << w(e.j) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

GkmGraph build_gkm_graph(const HessenbergFunction& h) {
  GkmGraph g;
  g.h_ = h;
  const auto& perms = permutations_of(h.n());
  auto pairs = gkm_pairs(h);
  for (std::size_t v = 0; v < perms.size(); ++v)
    for (auto [j, i] : pairs) {
      std::size_t u = lex_rank(perms[v].swapped_positions(j, i));
      if (v < u) g.edges_.push_back({v, u, j, i});
    }
  return g;
}

GkmClass class_t(int n, int k) {
  if (k < 1 || k > n) fail(ErrorCode::KOutOfRange, "k must lie in [1, n]");
  return GkmClass::constant(n, Poly::var(k));
}

GkmClass class_x(int n, int k) {
  if (k < 1 || k > n) fail(ErrorCode::KOutOfRange, "k must lie in [1, n]");
  const auto& perms = permutations_of(n);
  std::vector<Poly> v;
  v.reserve(perms.size());
  for (auto& w : perms) v.push_back(Poly::var(w(k)));
  return GkmClass(n, std::move(v));
}

GkmClass class_y_one_row(const HessenbergFunction& h, int k) {
  auto tag = classify_form(h);
  if (!tag.one_row) fail(ErrorCode::FormMismatch, "h = " + h.to_string() + " is not of the form (h(1), n, ..., n)");
  const int n = h.n();
  if (k < 1 || k > n) fail(ErrorCode::KOutOfRange, "k must lie in [1, n]");
  const auto& perms = permutations_of(n);
  std::vector<Poly> v;
  v.reserve(perms.size());
  for (auto& w : perms) {
    Poly p;
    if (w(1) == k) {
      p = Poly(1);
      for (int l = 2; l <= h(1); ++l) p *= Poly::binomial(k, w(l));
    }
    v.push_back(std::move(p));
  }
  return GkmClass(n, std::move(v));
}

GkmClass class_y_transpose(const HessenbergFunction& h, int k) {
  auto tag = classify_form(h);
  if (!tag.transpose) fail(ErrorCode::FormMismatch, "h = " + h.to_string() + " is not of the form ((n-1)^{n-m}, n^m)");
  const int n = h.n(), m = *tag.transpose;
  if (k < 1 || k > n) fail(ErrorCode::KOutOfRange, "k must lie in [1, n]");
  const auto& perms = permutations_of(n);
  std::vector<Poly> v;
  v.reserve(perms.size());
  for (auto& w : perms) {
    Poly p;
    if (w(n) == k) {
      p = Poly(1);
      for (int l = n - m + 1; l <= n - 1; ++l) p *= Poly::binomial(k, w(l));
    }
    v.push_back(std::move(p));
  }
  return GkmClass(n, std::move(v));
}

GkmClass dot_action(const Permutation& v, const GkmClass& c) {
  if (v.n() != c.n()) fail(ErrorCode::SizeMismatch, "permutation and class sizes differ");
  const auto& perms = permutations_of(c.n());
  std::vector<Poly> out(perms.size());
  const std::vector<int>& rename = v.one_line();
  for (std::size_t u = 0; u < perms.size(); ++u) out[lex_rank(v * perms[u])] = c.at_index(u).renamed(rename);
  return GkmClass(c.n(), std::move(out));
}

std::string_view to_string(Form f) { return f == Form::one_row ? "one-row" : "transpose"; }

bool RelationReport::all_pass() const {
  for (auto& [name, ok] : identities)
    if (!ok) return false;
  return true;
}

RelationReport verify_relations(const HessenbergFunction& h, Form form) {
  const int n = h.n();
  auto tag = classify_form(h);
  RelationReport r;
  r.form = form;
  std::vector<GkmClass> y(n + 1), x(n + 1);
  for (int k = 1; k <= n; ++k) {
    x[k] = class_x(n, k);
    y[k] = form == Form::one_row ? class_y_one_row(h, k) : class_y_transpose(h, k);
  }
  const GkmClass one = GkmClass::constant(n, Poly(1));
  // pivot position: 1 for the one-row form, n for the transpose form
  const int p = form == Form::one_row ? 1 : n;
  // index ranges of the products in identities (3) and (4)
  int lo3, hi3, lo3r, hi3r, lo4, hi4;
  if (form == Form::one_row) {
    int h1 = *tag.one_row;
    lo3 = h1 + 1, hi3 = n, lo3r = 2, hi3r = n, lo4 = 2, hi4 = h1;
  } else {
    int m = *tag.transpose;
    lo3 = 1, hi3 = n - m, lo3r = 1, hi3r = n - 1, lo4 = n - m + 1, hi4 = n - 1;
  }

  bool ok1 = true;
  for (int k = 1; k <= n && ok1; ++k)
    for (int k2 = 1; k2 <= n && ok1; ++k2)
      if (k != k2 && !(y[k] * y[k2]).is_zero()) ok1 = false;
  r.identities.emplace_back("y_k y_k' = 0 (k != k')", ok1);

  bool ok2 = true;
  for (int k = 1; k <= n && ok2; ++k)
    if (!(x[p] * y[k] == Poly::var(k) * y[k])) ok2 = false;
  r.identities.emplace_back("x_" + std::to_string(p) + " y_k = t_k y_k", ok2);

  bool ok3 = true;
  for (int k = 1; k <= n && ok3; ++k) {
    GkmClass tk = class_t(n, k);
    GkmClass lhs = y[k], rhs = one;
    for (int l = lo3; l <= hi3; ++l) lhs *= tk - x[l];
    for (int l = lo3r; l <= hi3r; ++l) rhs *= tk - x[l];
    if (!(lhs == rhs)) ok3 = false;
  }
  r.identities.emplace_back(form == Form::one_row ? "y_k prod_{l>h(1)} (t_k - x_l) = prod_{l>=2} (t_k - x_l)"
                                                  : "y_k prod_{l<=n-m} (t_k - x_l) = prod_{l<=n-1} (t_k - x_l)",
                            ok3);

  GkmClass sum = GkmClass::zero(n), prod = one;
  for (int k = 1; k <= n; ++k) sum += y[k];
  for (int l = lo4; l <= hi4; ++l) prod *= x[p] - x[l];
  r.identities.emplace_back(form == Form::one_row ? "sum_k y_k = prod_{l=2}^{h(1)} (x_1 - x_l)"
                                                  : "sum_k y_k = prod_{l=n-m+1}^{n-1} (x_n - x_l)",
                            sum == prod);
  return r;
}

std::vector<RelationReport> verify_relations(const HessenbergFunction& h) {
  auto tag = classify_form(h);
  if (tag.is_general()) fail(ErrorCode::FormMismatch, "h = " + h.to_string() + " has neither special form");
  std::vector<RelationReport> out;
  if (tag.one_row) out.push_back(verify_relations(h, Form::one_row));
  if (tag.transpose) out.push_back(verify_relations(h, Form::transpose));
  return out;
}

}  // namespace hess
