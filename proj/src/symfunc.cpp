#include "hess/symfunc.hpp"

#include <mutex>
#include <sstream>

#include "hess/error.hpp"
#include "hess/linalg.hpp"
#include "hess/poly.hpp"

namespace hess {

std::string_view to_string(Basis b) {
  switch (b) {
    case Basis::monomial: return "monomial";
    case Basis::schur: return "schur";
    case Basis::elementary: return "elementary";
    case Basis::homogeneous: return "homogeneous";
  }
  return "?";
}

Basis parse_basis(std::string_view s) {
  if (s == "monomial" || s == "m") return Basis::monomial;
  if (s == "schur" || s == "s") return Basis::schur;
  if (s == "elementary" || s == "e") return Basis::elementary;
  if (s == "homogeneous" || s == "h") return Basis::homogeneous;
  fail(ErrorCode::ParseError, "unknown basis '" + std::string(s) + "'");
}

QPolynomial SymFn::coefficient(const Partition& p) const {
  auto it = terms_.find(p);
  return it == terms_.end() ? QPolynomial() : it->second;
}

void SymFn::add_term(const Partition& p, const QPolynomial& c) {
  if (p.size() != degree_) fail(ErrorCode::SizeMismatch, "partition " + p.to_string() + " has the wrong size");
  if (c.is_zero()) return;
  auto [it, inserted] = terms_.emplace(p, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

SymFn& SymFn::operator+=(const SymFn& o) {
  if (o.basis_ != basis_) fail(ErrorCode::BasisMismatch, "adding functions in different bases");
  if (o.degree_ != degree_) fail(ErrorCode::SizeMismatch, "adding functions of different degrees");
  for (const auto& [p, c] : o.terms_) add_term(p, c);
  return *this;
}

SymFn& SymFn::operator-=(const SymFn& o) {
  if (o.basis_ != basis_) fail(ErrorCode::BasisMismatch, "subtracting functions in different bases");
  if (o.degree_ != degree_) fail(ErrorCode::SizeMismatch, "subtracting functions of different degrees");
  for (const auto& [p, c] : o.terms_) add_term(p, -c);
  return *this;
}

SymFn operator*(const QPolynomial& c, const SymFn& f) {
  SymFn r(f.degree_, f.basis_);
  for (const auto& [p, v] : f.terms_) r.add_term(p, c * v);
  return r;
}

bool SymFn::operator==(const SymFn& o) const {
  return degree_ == o.degree_ && basis_ == o.basis_ && terms_ == o.terms_;
}

std::string SymFn::to_string() const {
  if (terms_.empty()) return "0";
  const char sym = basis_ == Basis::monomial ? 'm' : basis_ == Basis::schur ? 's' : basis_ == Basis::elementary ? 'e' : 'h';
  std::ostringstream os;
  bool first = true;
  for (const auto& [p, c] : terms_) {
    if (!first) os << " + ";
    os << "(" << c.to_string() << ")" << sym << "_" << p.to_string();
    first = false;
  }
  return os.str();
}

SymFn csf_schur_by_ptableaux(const HessenbergFunction& h) {
  const int n = h.n();
  PosetPh p = poset_of(h);
  SymFn f(n, Basis::schur);
  for (const auto& lambda : partitions_of(n)) {
    QPolynomial gf;
    for (const auto& t : enumerate_p_tableaux(p, lambda)) gf.add_term(inversions(p, t).count(), 1);
    f.add_term(lambda, gf);
  }
  return f;
}

SymFn omega(const SymFn& f) {
  if (f.basis() != Basis::schur) fail(ErrorCode::BasisMismatch, "omega expects the Schur basis");
  SymFn r(f.degree(), Basis::schur);
  for (const auto& [p, c] : f.terms()) r.add_term(conjugate(p), c);
  return r;
}

mpz_class kostka_number(const Partition& shape, const Partition& content) {
  if (shape.size() != content.size()) return 0;
  if (content.length() == 0) return 1;
  // strip of the largest label, then recurse
  const int k = content.length();
  const int strip = content[k - 1];
  std::vector<int> rest(content.parts().begin(), content.parts().end() - 1);
  Partition rest_p = Partition::from_parts(rest);
  mpz_class total = 0;
  const auto& lam = shape.parts();
  const int len = shape.length();
  std::vector<int> nu(len, 0);
  std::function<void(int, int)> rec = [&](int i, int removed) {
    if (i == len) {
      if (removed != strip) return;
      std::vector<int> parts;
      for (int v : nu)
        if (v > 0) parts.push_back(v);
      total += kostka_number(Partition::from_parts(parts), rest_p);
      return;
    }
    int lo = i + 1 < len ? lam[i + 1] : 0;
    for (int v = lam[i]; v >= lo; --v) {
      int r = removed + lam[i] - v;
      if (r > strip) break;
      nu[i] = v;
      rec(i + 1, r);
    }
  };
  rec(0, 0);
  return total;
}

namespace {

Poly elementary_poly(int k, int n) {
  Poly out;
  std::function<void(int, int, Monomial)> rec = [&](int start, int left, Monomial m) {
    if (left == 0) {
      out.add_term(m, 1);
      return;
    }
    for (int i = start; i <= n; ++i) rec(i + 1, left - 1, m * Monomial::var(i));
  };
  rec(1, k, Monomial{});
  return out;
}

Poly homogeneous_poly(int k, int n) {
  Poly out;
  std::function<void(int, int, Monomial)> rec = [&](int start, int left, Monomial m) {
    if (left == 0) {
      out.add_term(m, 1);
      return;
    }
    for (int i = start; i <= n; ++i) rec(i, left - 1, m * Monomial::var(i));
  };
  rec(1, k, Monomial{});
  return out;
}

struct TransitionData {
  std::vector<Partition> parts;
  std::map<Partition, int> index;
  MatZ to_monomial;  // row lambda: coefficients of m_mu
  MatQ from_monomial;
};

std::mutex g_cache_mutex;
std::map<std::pair<int, int>, std::shared_ptr<const TransitionData>> g_cache;

std::shared_ptr<const TransitionData> transition(Basis b, int n) {
  std::lock_guard lock(g_cache_mutex);
  auto key = std::make_pair(static_cast<int>(b), n);
  if (auto it = g_cache.find(key); it != g_cache.end()) return it->second;
  auto d = std::make_shared<TransitionData>();
  d->parts = partitions_of(n);
  const int p = static_cast<int>(d->parts.size());
  for (int i = 0; i < p; ++i) d->index[d->parts[i]] = i;
  d->to_monomial.assign(p, std::vector<mpz_class>(p, 0));
  for (int i = 0; i < p; ++i) {
    const Partition& lam = d->parts[i];
    if (b == Basis::monomial) {
      d->to_monomial[i][i] = 1;
    } else if (b == Basis::schur) {
      for (int j = 0; j < p; ++j) d->to_monomial[i][j] = kostka_number(lam, d->parts[j]);
    } else {
      Poly prod(1);
      for (int part : lam.parts())
        prod *= b == Basis::elementary ? elementary_poly(part, n) : homogeneous_poly(part, n);
      for (int j = 0; j < p; ++j)
        d->to_monomial[i][j] = static_cast<long>(prod.coefficient(Monomial::from_exponents(d->parts[j].parts())));
    }
  }
  // inverse over Q via Gauss-Jordan on [M | I]
  MatQ aug(p, std::vector<mpq_class>(2 * p, 0));
  for (int i = 0; i < p; ++i) {
    for (int j = 0; j < p; ++j) aug[i][j] = d->to_monomial[i][j];
    aug[i][p + i] = 1;
  }
  Rref r = rref(aug);
  if (static_cast<int>(r.pivots.size()) < p || r.pivots[p - 1] != p - 1)
    fail(ErrorCode::Internal, "basis transition matrix is singular");
  d->from_monomial.assign(p, std::vector<mpq_class>(p, 0));
  for (int i = 0; i < p; ++i)
    for (int j = 0; j < p; ++j) d->from_monomial[i][j] = r.rows[i][p + j];
  g_cache.emplace(key, d);
  return d;
}

}  // namespace

mpz_class monomial_coefficient(Basis b, const Partition& lambda, const Partition& mu) {
  if (lambda.size() != mu.size()) return 0;
  auto d = transition(b, lambda.size());
  return d->to_monomial[d->index.at(lambda)][d->index.at(mu)];
}

SymFn change_basis(const SymFn& f, Basis target, int max_degree) {
  const int n = f.degree();
  if (n > max_degree) fail(ErrorCode::DegreeTooLarge, "degree " + std::to_string(n) + " exceeds bound " + std::to_string(max_degree));
  if (f.basis() == target) return f;
  auto src = transition(f.basis(), n);
  auto dst = transition(target, n);
  const int p = static_cast<int>(src->parts.size());
  // monomial coefficients per q-exponent
  std::map<int, std::vector<mpz_class>> mono;
  for (const auto& [lam, c] : f.terms()) {
    int i = src->index.at(lam);
    for (const auto& [e, v] : c.coefficients()) {
      auto& row = mono.try_emplace(e, std::vector<mpz_class>(p, 0)).first->second;
      for (int j = 0; j < p; ++j)
        if (src->to_monomial[i][j] != 0) row[j] += v * src->to_monomial[i][j];
    }
  }
  SymFn out(n, target);
  for (const auto& [e, a] : mono) {
    for (int j = 0; j < p; ++j) {
      mpq_class s = 0;
      for (int k = 0; k < p; ++k)
        if (a[k] != 0 && dst->from_monomial[k][j] != 0) s += a[k] * dst->from_monomial[k][j];
      if (s == 0) continue;
      s.canonicalize();
      if (s.get_den() != 1) fail(ErrorCode::NonIntegral, "basis change produced a fraction");
      out.add_term(dst->parts[j], QPolynomial::monomial(e, s.get_num()));
    }
  }
  return out;
}

PositivityReport is_positive(const SymFn& f, Basis b, int max_degree) {
  SymFn g = change_basis(f, b, max_degree);
  PositivityReport r;
  for (const auto& [p, c] : g.terms())
    if (auto e = c.first_negative()) {
      r.positive = false;
      r.witness = std::make_pair(p, *e);
      break;
    }
  return r;
}

SymFn at_q_equals_one(const SymFn& f) {
  SymFn r(f.degree(), f.basis());
  for (const auto& [p, c] : f.terms()) r.add_term(p, QPolynomial::monomial(0, c.at_one()));
  return r;
}

long DecompositionCounts::total_trivial() const {
  long s = 0;
  for (auto& [d, m] : by_degree) s += m.first;
  return s;
}

long DecompositionCounts::total_standard() const {
  long s = 0;
  for (auto& [d, m] : by_degree) s += m.second;
  return s;
}

long DecompositionCounts::dimension() const { return total_trivial() + total_standard() * (n - 1); }

SymFn frobenius_from_decomposition(const DecompositionCounts& d) {
  SymFn f(d.n, Basis::schur);
  for (const auto& [deg, m] : d.by_degree) {
    if (m.first < 0 || m.second < 0) fail(ErrorCode::OutOfRange, "negative multiplicity");
    f.add_term(Partition::from_parts({d.n}), QPolynomial::monomial(deg, m.first));
    if (m.second) {
      if (d.n < 2) fail(ErrorCode::OutOfRange, "no standard representation for n = 1");
      f.add_term(Partition::from_parts({d.n - 1, 1}), QPolynomial::monomial(deg, m.second));
    }
  }
  return f;
}

}  // namespace hess
