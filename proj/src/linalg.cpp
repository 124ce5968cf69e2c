#include "hess/linalg.hpp"

#include <algorithm>
#include <numeric>

#include "hess/error.hpp"
#include "hess/poly.hpp"

namespace hess {

namespace {

// arithmetic shims so the elimination code is written once
inline std::int64_t mul(std::int64_t a, std::int64_t b) { return checked::mul(a, b); }
inline std::int64_t sub(std::int64_t a, std::int64_t b) { return checked::sub(a, b); }
inline std::int64_t gcd_of(std::int64_t a, std::int64_t b) { return std::gcd(a, b); }
inline bool is_zero(std::int64_t a) { return a == 0; }
inline bool is_negative(std::int64_t a) { return a < 0; }
inline std::int64_t negate(std::int64_t a) { return checked::mul(a, -1); }
inline std::int64_t divexact(std::int64_t a, std::int64_t b) { return a / b; }

inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class gcd_of(const mpz_class& a, const mpz_class& b) { return gcd(a, b); }
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline bool is_negative(const mpz_class& a) { return sgn(a) < 0; }
inline mpz_class negate(const mpz_class& a) { return -a; }
inline mpz_class divexact(const mpz_class& a, const mpz_class& b) {
  mpz_class r;
  mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

template <class Int>
void make_primitive(SparseRow<Int>& row) {
  if (row.empty()) return;
  Int g = 0;
  for (auto& [c, v] : row) {
    g = gcd_of(g, v);
    if (g == 1) break;
  }
  bool neg = is_negative(row.front().second);
  if (g != 1 || neg) {
    if (neg) g = negate(g);
    for (auto& [c, v] : row) v = divexact(v, g);
  }
}

// a*x - b*y
template <class Int>
SparseRow<Int> combine(const Int& a, const SparseRow<Int>& x, const Int& b, const SparseRow<Int>& y) {
  SparseRow<Int> out;
  out.reserve(x.size() + y.size());
  std::size_t i = 0, j = 0;
  while (i < x.size() || j < y.size()) {
    if (j == y.size() || (i < x.size() && x[i].first < y[j].first)) {
      out.emplace_back(x[i].first, mul(a, x[i].second));
      ++i;
    } else if (i == x.size() || y[j].first < x[i].first) {
      out.emplace_back(y[j].first, negate(mul(b, y[j].second)));
      ++j;
    } else {
      Int v = sub(mul(a, x[i].second), mul(b, y[j].second));
      if (!is_zero(v)) out.emplace_back(x[i].first, std::move(v));
      ++i;
      ++j;
    }
  }
  return out;
}

// eliminate column `col` of x using pivot row y (whose leading column is col)
template <class Int>
SparseRow<Int> eliminate(const SparseRow<Int>& x, const Int& xc, const SparseRow<Int>& y) {
  const Int& yc = y.front().second;
  Int g = gcd_of(xc, yc);
  Int a = divexact(yc, g), b = divexact(xc, g);
  if (is_negative(a)) {
    a = negate(a);
    b = negate(b);
  }
  auto out = combine(a, x, b, y);
  make_primitive(out);
  return out;
}

template <class Int>
struct EchelonCore {
  std::vector<SparseRow<Int>> rows;
  std::vector<int> pivot_of;  // column -> row index or -1

  explicit EchelonCore(int columns) : pivot_of(columns, -1) {}

  SparseRow<Int> reduce(SparseRow<Int> row) const {
    make_primitive(row);
    while (!row.empty()) {
      int p = pivot_of[row.front().first];
      if (p < 0) break;
      row = eliminate(row, row.front().second, rows[p]);
    }
    return row;
  }

  bool insert(SparseRow<Int> row) {
    row = reduce(std::move(row));
    if (row.empty()) return false;
    pivot_of[row.front().first] = static_cast<int>(rows.size());
    rows.push_back(std::move(row));
    return true;
  }
};

SparseRowZ to_big(const SparseRow64& r) {
  SparseRowZ out;
  out.reserve(r.size());
  for (auto& [c, v] : r) out.emplace_back(c, mpz_class(static_cast<long>(v)));
  return out;
}

bool fits64(const SparseRowZ& r) {
  for (auto& [c, v] : r)
    if (!v.fits_slong_p()) return false;
  return true;
}

SparseRow64 to_small(const SparseRowZ& r) {
  SparseRow64 out;
  out.reserve(r.size());
  for (auto& [c, v] : r) out.emplace_back(c, v.get_si());
  return out;
}

void check_row(const auto& row, int columns) {
  int prev = -1;
  for (auto& [c, v] : row) {
    if (c <= prev || c >= columns) fail(ErrorCode::Internal, "malformed sparse row");
    if (is_zero(v)) fail(ErrorCode::Internal, "explicit zero in sparse row");
    prev = c;
  }
}

}  // namespace

struct ExactEchelon::Small : EchelonCore<std::int64_t> {
  using EchelonCore::EchelonCore;
};
struct ExactEchelon::Big : EchelonCore<mpz_class> {
  using EchelonCore::EchelonCore;
};

ExactEchelon::ExactEchelon(int columns) : columns_(columns), small_(std::make_unique<Small>(columns)) {}
ExactEchelon::ExactEchelon(const ExactEchelon& o) : columns_(o.columns_) {
  if (o.small_) small_ = std::make_unique<Small>(*o.small_);
  if (o.big_) big_ = std::make_unique<Big>(*o.big_);
}
ExactEchelon& ExactEchelon::operator=(const ExactEchelon& o) {
  if (this != &o) {
    ExactEchelon tmp(o);
    *this = std::move(tmp);
  }
  return *this;
}
ExactEchelon::ExactEchelon(ExactEchelon&&) noexcept = default;
ExactEchelon& ExactEchelon::operator=(ExactEchelon&&) noexcept = default;
ExactEchelon::~ExactEchelon() = default;

void ExactEchelon::promote() {
  auto big = std::make_unique<Big>(columns_);
  big->pivot_of = small_->pivot_of;
  big->rows.reserve(small_->rows.size());
  for (auto& r : small_->rows) big->rows.push_back(to_big(r));
  big_ = std::move(big);
  small_.reset();
}

bool ExactEchelon::insert(const SparseRow64& row) {
  check_row(row, columns_);
  if (small_) {
    try {
      return small_->insert(row);
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Overflow) throw;
      promote();
    }
  }
  return big_->insert(to_big(row));
}

bool ExactEchelon::insert(const SparseRowZ& row) {
  check_row(row, columns_);
  if (small_ && fits64(row)) return insert(to_small(row));
  if (small_) promote();
  return big_->insert(row);
}

bool ExactEchelon::in_span(const SparseRow64& row) const {
  check_row(row, columns_);
  if (small_) {
    try {
      return small_->reduce(row).empty();
    } catch (const Error& e) {
      if (e.code() != ErrorCode::Overflow) throw;
    }
    Big tmp(columns_);
    tmp.pivot_of = small_->pivot_of;
    for (auto& r : small_->rows) tmp.rows.push_back(to_big(r));
    return tmp.reduce(to_big(row)).empty();
  }
  return big_->reduce(to_big(row)).empty();
}

bool ExactEchelon::in_span(const SparseRowZ& row) const {
  check_row(row, columns_);
  if (small_ && fits64(row)) return in_span(to_small(row));
  if (small_) {
    Big tmp(columns_);
    tmp.pivot_of = small_->pivot_of;
    for (auto& r : small_->rows) tmp.rows.push_back(to_big(r));
    return tmp.reduce(row).empty();
  }
  return big_->reduce(row).empty();
}

int ExactEchelon::rank() const {
  return static_cast<int>(small_ ? small_->rows.size() : big_->rows.size());
}

bool ExactEchelon::uses_bignum() const { return big_ != nullptr; }

std::vector<SparseRowZ> ExactEchelon::basis() const {
  if (big_) return big_->rows;
  std::vector<SparseRowZ> out;
  out.reserve(small_->rows.size());
  for (auto& r : small_->rows) out.push_back(to_big(r));
  return out;
}

namespace {

inline std::int64_t lcm_of(std::int64_t a, std::int64_t b) { return checked::mul(a / std::gcd(a, b), b); }
inline mpz_class lcm_of(const mpz_class& a, const mpz_class& b) { return lcm(a, b); }
inline SparseRow<std::int64_t> convert_row(const SparseRow64& r, std::int64_t) { return r; }
inline SparseRowZ convert_row(const SparseRow64& r, const mpz_class&) { return to_big(r); }
inline SparseRowZ as_big(const SparseRow64& r) { return to_big(r); }
inline SparseRowZ as_big(const SparseRowZ& r) { return r; }

template <class Int>
std::vector<SparseRowZ> nullspace_impl(int columns, const std::vector<SparseRow64>& rows) {
  EchelonCore<Int> core(columns);
  for (auto& r : rows) core.insert(convert_row(r, Int{}));
  // back substitution, largest pivot first
  std::vector<int> order(core.rows.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return core.rows[a].front().first > core.rows[b].front().first; });
  // rows containing each column, kept loosely (may hold stale entries)
  for (int r : order) {
    int p = core.rows[r].front().first;
    for (std::size_t s = 0; s < core.rows.size(); ++s) {
      if (static_cast<int>(s) == r) continue;
      auto& row = core.rows[s];
      if (row.front().first >= p || row.back().first < p) continue;
      auto it = std::lower_bound(row.begin(), row.end(), p,
                                 [](const auto& e, int c) { return e.first < c; });
      if (it == row.end() || it->first != p) continue;
      // eliminate column p from row s without touching its leading entry
      Int xc = it->second;
      const Int& yc = core.rows[r].front().second;
      Int g = gcd_of(xc, yc);
      Int a = divexact(yc, g), b = divexact(xc, g);
      if (is_negative(a)) {
        a = negate(a);
        b = negate(b);
      }
      row = combine(a, row, b, core.rows[r]);
      make_primitive(row);
    }
  }
  std::vector<char> is_pivot(columns, 0);
  for (auto& r : core.rows) is_pivot[r.front().first] = 1;
  // column -> rows with a nonzero entry there
  std::vector<std::vector<int>> hits_of(columns);
  for (std::size_t r = 0; r < core.rows.size(); ++r)
    for (auto& [c, v] : core.rows[r])
      if (!is_pivot[c]) hits_of[c].push_back(static_cast<int>(r));
  std::vector<SparseRowZ> basis;
  for (int f = 0; f < columns; ++f) {
    if (is_pivot[f]) continue;
    Int L = 1;
    for (int r : hits_of[f]) L = lcm_of(L, core.rows[r].front().second);
    SparseRow<Int> v;
    v.emplace_back(f, L);
    for (int r : hits_of[f]) {
      const auto& row = core.rows[r];
      auto it = std::lower_bound(row.begin(), row.end(), f, [](const auto& e, int c) { return e.first < c; });
      v.emplace_back(row.front().first, negate(mul(it->second, divexact(L, row.front().second))));
    }
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    make_primitive(v);
    basis.push_back(as_big(v));
  }
  return basis;
}

}  // namespace

std::vector<SparseRowZ> nullspace(int columns, const std::vector<SparseRow64>& rows) {
  for (auto& r : rows) check_row(r, columns);
  try {
    return nullspace_impl<std::int64_t>(columns, rows);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::Overflow) throw;
  }
  return nullspace_impl<mpz_class>(columns, rows);
}

mpz_class determinant(const MatZ& m) {
  const std::size_t n = m.size();
  for (auto& r : m)
    if (r.size() != n) fail(ErrorCode::NotSquare, "matrix is not square");
  if (n == 0) return 1;
  MatZ a = m;
  mpz_class prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t s = k + 1;
      while (s < n && a[s][k] == 0) ++s;
      if (s == n) return 0;
      std::swap(a[k], a[s]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i)
      for (std::size_t j = k + 1; j < n; ++j) {
        mpz_class v = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), v.get_mpz_t(), prev.get_mpz_t());
      }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

int rank(const MatZ& m) {
  if (m.empty()) return 0;
  const int cols = static_cast<int>(m.front().size());
  EchelonCore<mpz_class> core(cols);
  for (auto& r : m) {
    SparseRowZ s;
    for (int c = 0; c < cols; ++c)
      if (r[c] != 0) s.emplace_back(c, r[c]);
    core.insert(std::move(s));
  }
  return static_cast<int>(core.rows.size());
}

Rref rref(const MatQ& m, const std::vector<int>& column_order) {
  Rref out;
  MatQ a = m;
  std::size_t next = 0;
  for (int c : column_order) {
    std::size_t piv = next;
    while (piv < a.size() && a[piv][c] == 0) ++piv;
    if (piv == a.size()) continue;
    std::swap(a[piv], a[next]);
    mpq_class inv = 1 / a[next][c];
    for (auto& v : a[next]) v *= inv;
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == next || a[i][c] == 0) continue;
      mpq_class f = a[i][c];
      for (std::size_t j = 0; j < a[i].size(); ++j)
        if (a[next][j] != 0) a[i][j] -= f * a[next][j];
    }
    out.pivots.push_back(c);
    ++next;
    if (next == a.size()) break;
  }
  a.resize(next);
  out.rows = std::move(a);
  return out;
}

Rref rref(const MatQ& m) {
  std::vector<int> order(m.empty() ? 0 : m.front().size());
  std::iota(order.begin(), order.end(), 0);
  return rref(m, order);
}

}  // namespace hess
