#include "hess/cohomology.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <sstream>
#include <unordered_map>

#include "hess/error.hpp"

namespace hess {

// ---------------------------------------------------------------- monomials

XYMonomial XYMonomial::x_var(int n, int i, int e) {
  if (i < 1 || i > n) fail(ErrorCode::OutOfRange, "x index out of range");
  XYMonomial m = one(n);
  m.x[i - 1] = e;
  return m;
}

XYMonomial XYMonomial::y_var(int n, int k) {
  if (k < 1 || k > n) fail(ErrorCode::KOutOfRange, "y index must lie in [1, n]");
  XYMonomial m = one(n);
  m.y = k;
  return m;
}

int XYMonomial::x_degree() const {
  int d = 0;
  for (int e : x) d += e;
  return d;
}

std::string XYMonomial::to_string() const {
  std::string s;
  auto append = [&](const std::string& f) { s += (s.empty() ? "" : "*") + f; };
  for (int i = 0; i < n(); ++i) {
    if (x[i] == 0) continue;
    append("x_" + std::to_string(i + 1) + (x[i] > 1 ? "^" + std::to_string(x[i]) : ""));
  }
  if (y) append("y_" + std::to_string(y));
  return s.empty() ? "1" : s;
}

XYMonomial mirrored(const XYMonomial& m) {
  XYMonomial r = m;
  std::reverse(r.x.begin(), r.x.end());
  return r;
}

// ---------------------------------------------------------------- elements

XYElement XYElement::monomial(const XYMonomial& m, const mpz_class& c) {
  XYElement e;
  e.add_term(m, c);
  return e;
}

mpz_class XYElement::coefficient(const XYMonomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? mpz_class(0) : it->second;
}

void XYElement::add_term(const XYMonomial& m, const mpz_class& c) {
  if (c == 0) return;
  if (!terms_.empty() && terms_.begin()->first.n() != m.n())
    fail(ErrorCode::SizeMismatch, "monomials over different numbers of variables");
  auto [it, fresh] = terms_.try_emplace(m, c);
  if (!fresh) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

XYElement& XYElement::operator+=(const XYElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

XYElement& XYElement::operator-=(const XYElement& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

XYElement& XYElement::operator*=(const mpz_class& c) {
  if (c == 0) terms_.clear();
  for (auto& [m, v] : terms_) v *= c;
  return *this;
}

namespace {

Monomial to_mono(const std::vector<int>& x) { return Monomial::from_exponents(x); }

// deglex, x_n most significant
bool deglex_less(const std::vector<int>& a, const std::vector<int>& b) {
  int da = 0, db = 0;
  for (int e : a) da += e;
  for (int e : b) db += e;
  if (da != db) return da < db;
  return to_mono(a) < to_mono(b);
}

// display order: pure terms first, then by y index, then deglex
bool display_less(const XYMonomial& a, const XYMonomial& b) {
  if (a.y != b.y) return a.y < b.y;
  return deglex_less(a.x, b.x);
}

}  // namespace

std::string XYElement::to_string() const {
  if (terms_.empty()) return "0";
  std::vector<const Terms::value_type*> ts;
  for (const auto& t : terms_) ts.push_back(&t);
  std::sort(ts.begin(), ts.end(), [](auto* a, auto* b) { return display_less(a->first, b->first); });
  std::ostringstream os;
  bool first = true;
  for (auto* t : ts) {
    mpz_class c = t->second;
    const bool neg = c < 0;
    if (neg) c = -c;
    if (first)
      os << (neg ? "-" : "");
    else
      os << (neg ? " - " : " + ");
    first = false;
    const std::string m = t->first.to_string();
    if (m == "1")
      os << c.get_str();
    else if (c == 1)
      os << m;
    else
      os << c.get_str() << "*" << m;
  }
  return os.str();
}

XYElement mirrored(const XYElement& e) {
  XYElement r;
  for (const auto& [m, c] : e.terms()) r.add_term(mirrored(m), c);
  return r;
}

// ---------------------------------------------------------------- bases

std::string_view to_string(BasisLabel l) {
  switch (l) {
    case BasisLabel::B1: return "B1";
    case BasisLabel::B2: return "B2";
    case BasisLabel::B3: return "B3";
    case BasisLabel::Nh: return "Nh";
    case BasisLabel::TransposeB1: return "TransposeB1";
    case BasisLabel::TransposeB2: return "TransposeB2";
    case BasisLabel::TransposeB3: return "TransposeB3";
  }
  return "?";
}

int BasisSet::degree_of(std::size_t i) const {
  const XYMonomial& m = elements.at(i).terms().begin()->first;
  return m.x_degree() + (m.y ? y_degree : 0);
}

namespace {

// all exponent vectors with x_i <= bound[i], sorted deglex
std::vector<std::vector<int>> bounded_monomials(const std::vector<int>& bound) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(bound.size(), 0);
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == bound.size()) {
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= bound[i]; ++e) {
      cur[i] = e;
      rec(i + 1);
    }
    cur[i] = 0;
  };
  rec(0);
  std::sort(out.begin(), out.end(), deglex_less);
  return out;
}

std::vector<int> staircase_bounds(int n) {
  std::vector<int> b(n);
  for (int j = 1; j <= n; ++j) b[j - 1] = n - j;
  return b;
}

// x_1 absent, x_i <= i - 2
std::vector<int> sector_bounds(int n) {
  std::vector<int> b(n, 0);
  for (int i = 2; i <= n; ++i) b[i - 1] = i - 2;
  return b;
}

bool has_factor(const std::vector<int>& x, int lo, int hi) {
  if (lo > hi) return true;  // empty product divides everything
  for (int l = lo; l <= hi; ++l)
    if (x[l - 1] == 0) return false;
  return true;
}

int require_one_row(const HessenbergFunction& h) {
  auto tag = classify_form(h);
  if (!tag.one_row) fail(ErrorCode::FormMismatch, "expected h = (h(1), n, ..., n); got " + h.to_string());
  return *tag.one_row;
}

int require_transpose(const HessenbergFunction& h) {
  auto tag = classify_form(h);
  if (!tag.transpose) fail(ErrorCode::FormMismatch, "expected h = ((n-1)^(n-m), n^m); got " + h.to_string());
  return *tag.transpose;
}

std::vector<std::vector<int>> b1_parts(int n, int h1) {
  std::vector<std::vector<int>> out;
  for (auto& x : bounded_monomials(staircase_bounds(n)))
    if (!has_factor(x, 1, h1)) out.push_back(x);
  return out;
}

std::vector<std::vector<int>> b2_parts(int n, int h1) {
  std::vector<std::vector<int>> out;
  for (auto& x : bounded_monomials(sector_bounds(n)))
    if (!has_factor(x, h1 + 1, n)) out.push_back(x);
  return out;
}

// y_2, ..., y_{n-1}, y_1
std::vector<int> b2_y_order(int n) {
  std::vector<int> ks;
  for (int k = 2; k <= n - 1; ++k) ks.push_back(k);
  if (n >= 2) ks.push_back(1);
  return ks;
}

BasisSet make_b1(const HessenbergFunction& h, int p, BasisLabel label, bool mirror) {
  BasisSet b{label, h, p - 1, {}};
  for (auto& x : b1_parts(h.n(), p)) {
    XYMonomial m{x, 0};
    b.elements.push_back(XYElement::monomial(mirror ? mirrored(m) : m));
  }
  return b;
}

BasisSet make_b2(const HessenbergFunction& h, int p, BasisLabel label, bool mirror) {
  BasisSet b{label, h, p - 1, {}};
  const int n = h.n();
  for (auto& x : b2_parts(n, p))
    for (int k : b2_y_order(n)) {
      XYMonomial m{x, k};
      b.elements.push_back(XYElement::monomial(mirror ? mirrored(m) : m));
    }
  return b;
}

BasisSet make_b3(const HessenbergFunction& h, int p, BasisLabel label, bool mirror) {
  BasisSet b{label, h, p - 1, {}};
  const int n = h.n();
  for (auto& x : b2_parts(n, p))
    for (int k = 1; k <= n - 1; ++k) {
      XYMonomial a{x, k + 1}, c{x, 1};
      XYElement e = XYElement::monomial(a) - XYElement::monomial(c);
      b.elements.push_back(mirror ? mirrored(e) : e);
    }
  return b;
}

}  // namespace

BasisSet basis_B1(const HessenbergFunction& h) { return make_b1(h, require_one_row(h), BasisLabel::B1, false); }
BasisSet basis_B2(const HessenbergFunction& h) { return make_b2(h, require_one_row(h), BasisLabel::B2, false); }
BasisSet basis_B3(const HessenbergFunction& h) { return make_b3(h, require_one_row(h), BasisLabel::B3, false); }

TransposeBases basis_transpose(const HessenbergFunction& h) {
  const int m = require_transpose(h);
  return {make_b1(h, m, BasisLabel::TransposeB1, true), make_b2(h, m, BasisLabel::TransposeB2, true),
          make_b3(h, m, BasisLabel::TransposeB3, true)};
}

BasisSet basis_nilpotent(const HessenbergFunction& h) {
  BasisSet b{BasisLabel::Nh, h, 0, {}};
  std::vector<int> bound(h.n());
  for (int k = 1; k <= h.n(); ++k) bound[k - 1] = h(k) - k;
  for (auto& x : bounded_monomials(bound)) b.elements.push_back(XYElement::monomial(XYMonomial{x, 0}));
  return b;
}

QPolynomial degree_gf(const BasisSet& b) {
  QPolynomial q;
  for (std::size_t i = 0; i < b.size(); ++i) q.add_term(b.degree_of(i), 1);
  return q;
}

// ---------------------------------------------------------------- ring core

namespace {

using Lin = std::map<Monomial, mpz_class>;

void add_into(Lin& acc, const Lin& src, const mpz_class& f) {
  for (const auto& [m, c] : src) {
    auto [it, fresh] = acc.try_emplace(m, 0);
    it->second += f * c;
    if (it->second == 0) acc.erase(it);
  }
}

// monomials of degree d in variables lo..hi
std::vector<Monomial> monomials_in(int lo, int hi, int d) {
  std::vector<Monomial> out;
  std::function<void(int, int, Monomial)> rec = [&](int v, int left, Monomial m) {
    if (v == hi) {
      out.push_back(m * Monomial::var(v, left));
      return;
    }
    for (int e = 0; e <= left; ++e) rec(v + 1, left - e, m * Monomial::var(v, e));
  };
  if (lo <= hi) rec(lo, d, Monomial{});
  else if (d == 0) out.push_back(Monomial{});
  return out;
}

// Reduction modulo a Groebner basis {lead_j - tail_j} whose leads are pure
// powers x_{var}^{power}; results are memoized.
class Straightener {
 public:
  struct Rule {
    int var, power;
    std::vector<Monomial> tail;  // lead = -(sum of tail) modulo the ideal
  };
  Straightener() = default;
  explicit Straightener(std::vector<Rule> rules) : rules_(std::move(rules)) {}

  const Lin& reduce(Monomial m) {
    auto it = memo_.find(m.bits());
    if (it != memo_.end()) return it->second;
    Lin out;
    const Rule* hit = nullptr;
    for (const auto& r : rules_)
      if (m.exponent(r.var) >= r.power) {
        hit = &r;
        break;
      }
    if (!hit) {
      out.emplace(m, 1);
    } else {
      Monomial rest = m.with_exponent(hit->var, m.exponent(hit->var) - hit->power);
      for (Monomial t : hit->tail) {
        Lin sub = reduce(rest * t);  // copy: the memo may rehash
        add_into(out, sub, -1);
      }
    }
    return memo_.emplace(m.bits(), std::move(out)).first->second;
  }

 private:
  std::vector<Rule> rules_;
  std::unordered_map<std::uint64_t, Lin> memo_;
};

}  // namespace

// One-row frame: Z[x,y]/I for h = (h1, n, ..., n). The transpose form reuses
// it through x_i <-> x_{n+1-i}.
//
// Every element lives in V = C ⊕ ⊕_k C'·y_k, where C is the coinvariant
// algebra of x_1..x_n (staircase monomials) and C' that of x_2..x_n (x_1 y_k
// vanishes). Relations (1), (2), (5) and y_k^2 = y_k·Π_{l=2}^{h1}(−x_l) are
// built into V; what is left of I in degree d is spanned by
//   x_1·m·P                                     (m staircase)
//   m·Π_{l>h1}(−x_l)·y_k − m·Π_{l>=2}(−x_l)      (m in C', every k)
//   m·(y_1 + ... + y_n) − m·P                   (m in C')
// with P = Π_{l=2}^{h1}(x_1 − x_l). Those are reduced once per degree with the
// non-basis columns eliminated first.
struct QuotientRing::Impl {
  int n, h1, ydeg;
  std::mutex mu;
  Straightener full, sector;
  std::map<int, std::vector<Monomial>> stair_by_deg, sector_by_deg;
  Poly P;  // Π_{l=2}^{h1} (x_1 - x_l)
  std::vector<XYMonomial> standard;

  struct Degree {
    // column key: (0, m) pure, (k, m) sector k
    std::map<std::pair<int, Monomial>, int> col;
    std::vector<std::pair<int, Monomial>> keys;
    std::vector<int> basis_pos;  // position in `standard`, -1 if not a basis column
    // non-basis column -> combination of basis positions
    std::map<int, std::vector<std::pair<int, mpq_class>>> rewrite;
  };
  std::map<int, std::unique_ptr<Degree>> degrees;
  std::map<std::pair<int, std::uint64_t>, int> standard_pos;

  Impl(int n_, int h1_) : n(n_), h1(h1_), ydeg(h1_ - 1) {
    std::vector<Straightener::Rule> fr, sr;
    // h_{n-j+1}(x_1..x_j), lead x_j^{n-j+1} under lex x_n > ... > x_1
    for (int j = 1; j <= n; ++j) {
      Straightener::Rule r{j, n - j + 1, {}};
      for (Monomial m : monomials_in(1, j, n - j + 1))
        if (m != Monomial::var(j, n - j + 1)) r.tail.push_back(m);
      fr.push_back(std::move(r));
    }
    // x_1 -> 0, then h_{i-1}(x_i..x_n), lead x_i^{i-1} under lex x_2 > ... > x_n
    sr.push_back({1, 1, {}});
    for (int i = 2; i <= n; ++i) {
      Straightener::Rule r{i, i - 1, {}};
      for (Monomial m : monomials_in(i, n, i - 1))
        if (m != Monomial::var(i, i - 1)) r.tail.push_back(m);
      sr.push_back(std::move(r));
    }
    full = Straightener(std::move(fr));
    sector = Straightener(std::move(sr));
    for (auto& x : bounded_monomials(staircase_bounds(n))) {
      Monomial m = to_mono(x);
      stair_by_deg[m.degree()].push_back(m);
    }
    for (auto& x : bounded_monomials(sector_bounds(n))) {
      Monomial m = to_mono(x);
      sector_by_deg[m.degree()].push_back(m);
    }
    P = Poly(1);
    for (int l = 2; l <= h1; ++l) P *= Poly::binomial(1, l);
    for (auto& x : b1_parts(n, h1)) standard.push_back(XYMonomial{x, 0});
    for (auto& x : b2_parts(n, h1))
      for (int k : b2_y_order(n)) standard.push_back(XYMonomial{x, k});
    for (std::size_t i = 0; i < standard.size(); ++i)
      standard_pos[{standard[i].y, to_mono(standard[i].x).bits()}] = static_cast<int>(i);
  }

  const std::vector<Monomial>& stair(int d) {
    static const std::vector<Monomial> none;
    auto it = stair_by_deg.find(d);
    return it == stair_by_deg.end() ? none : it->second;
  }
  const std::vector<Monomial>& sect(int d) {
    static const std::vector<Monomial> none;
    auto it = sector_by_deg.find(d);
    return it == sector_by_deg.end() ? none : it->second;
  }

  Lin straighten_poly(const Poly& p, Straightener& s) {
    Lin out;
    for (const auto& [m, c] : p.terms()) add_into(out, s.reduce(m), mpz_class(static_cast<long>(c)));
    return out;
  }

  Degree& degree(int d) {
    auto& slot = degrees[d];
    if (slot) return *slot;
    auto D = std::make_unique<Degree>();
    auto add_col = [&](int k, Monomial m) {
      D->col[{k, m}] = static_cast<int>(D->keys.size());
      D->keys.emplace_back(k, m);
      auto it = standard_pos.find({k, m.bits()});
      D->basis_pos.push_back(it == standard_pos.end() ? -1 : it->second);
    };
    for (Monomial m : stair(d)) add_col(0, m);
    if (d >= ydeg)
      for (int k = 1; k <= n; ++k)
        for (Monomial m : sect(d - ydeg)) add_col(k, m);
    const int C = static_cast<int>(D->keys.size());

    MatQ rel;
    auto new_row = [&]() -> std::vector<mpq_class>& { return rel.emplace_back(C, mpq_class(0)); };
    auto put = [&](std::vector<mpq_class>& row, int k, const Lin& lin, const mpz_class& f) {
      for (const auto& [m, c] : lin) row[D->col.at({k, m})] += mpq_class(f * c);
    };
    if (d - h1 >= 0)
      for (Monomial m : stair(d - h1)) {
        Poly q = Poly::term(m * Monomial::var(1), 1) * P;
        put(new_row(), 0, straighten_poly(q, full), 1);
      }
    if (d - (n - 1) >= 0) {
      Monomial upper, tail;  // Π_{l>h1} x_l and Π_{l>=2} x_l
      for (int l = h1 + 1; l <= n; ++l) upper = upper * Monomial::var(l);
      for (int l = 2; l <= n; ++l) tail = tail * Monomial::var(l);
      const mpz_class su = (n - h1) % 2 ? -1 : 1, st = (n - 1) % 2 ? -1 : 1;
      for (Monomial m : sect(d - (n - 1))) {
        const Lin ylin = sector.reduce(m * upper);
        const Lin plin = full.reduce(m * tail);
        for (int k = 1; k <= n; ++k) {
          auto& row = new_row();
          put(row, k, ylin, su);
          put(row, 0, plin, -st);
        }
      }
    }
    if (d >= ydeg)
      for (Monomial m : sect(d - ydeg)) {
        auto& row = new_row();
        for (int k = 1; k <= n; ++k) row[D->col.at({k, m})] += 1;
        put(row, 0, straighten_poly(Poly::term(m, 1) * P, full), -1);
      }

    std::vector<int> order;
    for (int c = 0; c < C; ++c)
      if (D->basis_pos[c] < 0) order.push_back(c);
    for (int c = 0; c < C; ++c)
      if (D->basis_pos[c] >= 0) order.push_back(c);
    Rref r = rref(rel, order);
    std::vector<char> pivot(C, 0);
    for (std::size_t i = 0; i < r.pivots.size(); ++i) {
      const int p = r.pivots[i];
      if (D->basis_pos[p] >= 0)
        fail(ErrorCode::Internal, "basis monomials are dependent in degree " + std::to_string(d));
      pivot[p] = 1;
      auto& rw = D->rewrite[p];
      for (int c = 0; c < C; ++c)
        if (c != p && r.rows[i][c] != 0) {
          if (D->basis_pos[c] < 0) fail(ErrorCode::Internal, "reduction left a non-basis column");
          rw.emplace_back(D->basis_pos[c], -r.rows[i][c]);
        }
    }
    for (int c = 0; c < C; ++c)
      if (D->basis_pos[c] < 0 && !pivot[c])
        fail(ErrorCode::Internal, "basis does not span degree " + std::to_string(d));
    slot = std::move(D);
    return *slot;
  }

  // coordinates (position in `standard` -> value) of one frame term
  void reduce_term(const XYMonomial& t, const mpz_class& coef, std::map<int, mpq_class>& acc) {
    if (t.n() != n) fail(ErrorCode::SizeMismatch, "element has the wrong number of variables");
    if (t.y < 0 || t.y > n) fail(ErrorCode::KOutOfRange, "y index must lie in [1, n]");
    Monomial x = to_mono(t.x);
    const int d = x.degree() + (t.y ? ydeg : 0);
    const Lin& lin = t.y ? sector.reduce(x) : full.reduce(x);
    Degree& D = degree(d);
    for (const auto& [m, c] : lin) {
      const int col = D.col.at({t.y, m});
      const mpq_class v = mpq_class(coef * c);
      if (D.basis_pos[col] >= 0) {
        acc[D.basis_pos[col]] += v;
      } else {
        for (const auto& [pos, f] : D.rewrite.at(col)) acc[pos] += v * f;
      }
    }
  }

  XYElement normal_form(const XYElement& e) {
    std::lock_guard lock(mu);
    std::map<int, mpq_class> acc;
    for (const auto& [m, c] : e.terms()) reduce_term(m, c, acc);
    XYElement out;
    for (const auto& [pos, v] : acc) {
      if (v == 0) continue;
      if (v.get_den() != 1)
        fail(ErrorCode::NonIntegral, "normal form has a non-integral coefficient " + v.get_str());
      out.add_term(standard[pos], v.get_num());
    }
    return out;
  }

  // y_k^2 = y_k Π_{l=2}^{h1} (−x_l); y_k y_k' = 0
  XYElement multiply_raw(const XYElement& a, const XYElement& b) const {
    XYElement out;
    for (const auto& [ma, ca] : a.terms())
      for (const auto& [mb, cb] : b.terms()) {
        if (ma.n() != mb.n()) fail(ErrorCode::SizeMismatch, "factors have different numbers of variables");
        XYMonomial m = ma;
        for (int i = 0; i < m.n(); ++i) m.x[i] += mb.x[i];
        mpz_class c = ca * cb;
        if (ma.y && mb.y) {
          if (ma.y != mb.y) continue;
          for (int l = 2; l <= h1; ++l) ++m.x[l - 1];
          if ((h1 - 1) % 2) c = -c;
        } else {
          m.y = ma.y ? ma.y : mb.y;
        }
        out.add_term(m, c);
      }
    return out;
  }
};

namespace {

std::shared_ptr<QuotientRing::Impl> shared_core(int n, int p) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, std::shared_ptr<QuotientRing::Impl>> cores;
  std::lock_guard lock(mu);
  auto& slot = cores[{n, p}];
  if (!slot) slot = std::make_shared<QuotientRing::Impl>(n, p);
  return slot;
}

}  // namespace

QuotientRing::QuotientRing(const HessenbergFunction& h, Form form)
    : h_(h), form_(form), param_(form == Form::one_row ? require_one_row(h) : require_transpose(h)) {
  core_ = shared_core(h.n(), param_);
  standard_ = core_->standard;
  if (form_ == Form::transpose)
    for (auto& m : standard_) m = mirrored(m);
}

int QuotientRing::degree(const XYMonomial& m) const { return m.x_degree() + (m.y ? y_degree() : 0); }

XYElement QuotientRing::normal_form(const XYElement& e) const {
  if (form_ == Form::one_row) return core_->normal_form(e);
  return mirrored(core_->normal_form(mirrored(e)));
}

XYElement QuotientRing::multiply(const XYElement& a, const XYElement& b) const {
  if (form_ == Form::one_row) return core_->normal_form(core_->multiply_raw(a, b));
  return mirrored(core_->normal_form(core_->multiply_raw(mirrored(a), mirrored(b))));
}

XYElement normal_form(const XYElement& e, const HessenbergFunction& h) {
  return QuotientRing(h, Form::one_row).normal_form(e);
}

std::vector<mpz_class> coordinates(const XYElement& normal, const std::vector<XYMonomial>& basis) {
  std::vector<mpz_class> out(basis.size());
  std::size_t seen = 0;
  for (std::size_t i = 0; i < basis.size(); ++i) {
    out[i] = normal.coefficient(basis[i]);
    if (out[i] != 0) ++seen;
  }
  if (seen != normal.terms().size()) fail(ErrorCode::NotInBasis, "element has terms outside the given basis");
  return out;
}

// ---------------------------------------------------------------- transitions

namespace {

std::vector<TransitionBlock> blocks_for(const QuotientRing& ring, const BasisSet& b1, const BasisSet& b2,
                                        const BasisSet& b3) {
  std::map<int, TransitionBlock> by_deg;
  auto block = [&](int d) -> TransitionBlock& {
    auto& b = by_deg[d];
    b.degree = 2 * d;
    return b;
  };
  for (std::size_t i = 0; i < b1.size(); ++i) {
    auto& b = block(b1.degree_of(i));
    b.row_labels.push_back(b1.elements[i].terms().begin()->first);
    b.column_labels.push_back(b1.elements[i]);
  }
  for (std::size_t i = 0; i < b2.size(); ++i) block(b2.degree_of(i)).row_labels.push_back(b2.elements[i].terms().begin()->first);
  for (std::size_t i = 0; i < b3.size(); ++i) block(b3.degree_of(i)).column_labels.push_back(b3.elements[i]);

  std::vector<TransitionBlock> out;
  for (auto& [d, b] : by_deg) {
    b.matrix.assign(b.row_labels.size(), std::vector<mpz_class>(b.column_labels.size()));
    for (std::size_t j = 0; j < b.column_labels.size(); ++j) {
      auto c = coordinates(ring.normal_form(b.column_labels[j]), b.row_labels);
      for (std::size_t i = 0; i < c.size(); ++i) b.matrix[i][j] = c[i];
    }
    out.push_back(std::move(b));
  }
  return out;
}

}  // namespace

std::vector<TransitionBlock> transition_blocks(const HessenbergFunction& h) {
  QuotientRing ring(h, Form::one_row);
  return blocks_for(ring, basis_B1(h), basis_B2(h), basis_B3(h));
}

std::vector<TransitionBlock> transition_blocks_transpose(const HessenbergFunction& h) {
  QuotientRing ring(h, Form::transpose);
  auto t = basis_transpose(h);
  return blocks_for(ring, t.b1, t.b2, t.b3);
}

mpz_class block_determinant(const TransitionBlock& b) { return determinant(b.matrix); }

bool check_unimodular(const TransitionBlock& b) { return abs(block_determinant(b)) == 1; }

// ---------------------------------------------------------------- S_n data

DecompositionCounts decomposition_counts(const HessenbergFunction& h) {
  DecompositionCounts dc;
  dc.n = h.n();
  auto b1 = basis_B1(h), b3 = basis_B3(h);
  for (std::size_t i = 0; i < b1.size(); ++i) ++dc.by_degree[b1.degree_of(i)].first;
  // every x-part of B3 carries n-1 elements spanning one standard module
  for (std::size_t i = 0; i < b3.size(); i += std::max(1, h.n() - 1)) ++dc.by_degree[b3.degree_of(i)].second;
  return dc;
}

OrbitPartition permutation_orbits(const HessenbergFunction& h) {
  const int h1 = require_one_row(h);
  const int n = h.n();
  if (h1 == n) fail(ErrorCode::DegenerateForm, "h(1) = n leaves no y-monomials to permute");
  QuotientRing ring(h, Form::one_row);
  const auto& basis = ring.standard_monomials();
  ExactEchelon ech(static_cast<int>(basis.size()));
  auto row_of = [&](const XYMonomial& m) {
    auto c = coordinates(ring.normal_form(XYElement::monomial(m)), basis);
    SparseRowZ r;
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] != 0) r.emplace_back(static_cast<int>(i), c[i]);
    return r;
  };
  OrbitPartition out;
  for (auto& x : b2_parts(n, h1)) {
    std::vector<XYMonomial> orbit;
    for (int k = 1; k <= n; ++k) {
      orbit.push_back(XYMonomial{x, k});
      ech.insert(row_of(orbit.back()));
    }
    out.orbits.push_back(std::move(orbit));
  }
  long target = static_cast<long>(factorial(n)) - static_cast<long>(out.orbits.size()) * n;
  for (auto& x : b1_parts(n, h1)) {
    if (static_cast<long>(out.fixed.size()) == target) break;
    XYMonomial m{x, 0};
    if (ech.insert(row_of(m))) out.fixed.push_back(m);
  }
  out.rank = ech.rank();
  return out;
}

// ---------------------------------------------------------------- GKM bridge

GkmClass monomial_to_gkm(const XYMonomial& m, const HessenbergFunction& h, Form form) {
  auto tag = classify_form(h);
  if ((form == Form::one_row && !tag.one_row) || (form == Form::transpose && !tag.transpose))
    fail(ErrorCode::FormMismatch, "h = " + h.to_string() + " lacks the requested form");
  const int n = h.n();
  if (m.n() != n) fail(ErrorCode::SizeMismatch, "monomial has the wrong number of variables");
  GkmClass c = GkmClass::constant(n, Poly(1));
  for (int i = 1; i <= n; ++i)
    for (int e = 0; e < m.x[i - 1]; ++e) c *= class_x(n, i);
  if (m.y) c *= form == Form::one_row ? class_y_one_row(h, m.y) : class_y_transpose(h, m.y);
  return c;
}

GkmClass monomial_to_gkm(const XYMonomial& m, const HessenbergFunction& h) {
  auto tag = classify_form(h);
  if (tag.is_general()) fail(ErrorCode::FormMismatch, "no presentation for general h = " + h.to_string());
  return monomial_to_gkm(m, h, tag.one_row ? Form::one_row : Form::transpose);
}

GkmClass element_to_gkm(const XYElement& e, const HessenbergFunction& h, Form form) {
  GkmClass out = GkmClass::zero(h.n());
  for (const auto& [m, c] : e.terms()) {
    if (!c.fits_slong_p()) fail(ErrorCode::Overflow, "coefficient exceeds int64");
    out += c.get_si() * monomial_to_gkm(m, h, form);
  }
  return out;
}

}  // namespace hess
