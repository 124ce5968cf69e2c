#include "hess/tableaux.hpp"

#include <algorithm>
#include <functional>
#include <sstream>

#include "hess/error.hpp"

namespace hess {

Partition Partition::from_parts(std::vector<int> parts) {
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (parts[i] <= 0) fail(ErrorCode::InvalidPartition, "parts must be positive");
    if (i && parts[i] > parts[i - 1]) fail(ErrorCode::InvalidPartition, "parts must be weakly decreasing");
  }
  Partition p;
  p.parts_ = std::move(parts);
  return p;
}

Partition Partition::column(int n) { return from_parts(std::vector<int>(n, 1)); }

Partition Partition::hook(int n) {
  if (n < 2) fail(ErrorCode::OutOfRange, "hook shape (2,1^{n-2}) needs n >= 2");
  std::vector<int> parts(n - 1, 1);
  parts[0] = 2;
  return from_parts(std::move(parts));
}

int Partition::size() const {
  int s = 0;
  for (int v : parts_) s += v;
  return s;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << "(";
  for (std::size_t i = 0; i < parts_.size(); ++i) os << (i ? "," : "") << parts_[i];
  os << ")";
  return os.str();
}

Partition conjugate(const Partition& p) {
  std::vector<int> c;
  for (int j = 1; p.length() && j <= p[0]; ++j) {
    int len = 0;
    for (int v : p.parts())
      if (v >= j) ++len;
    c.push_back(len);
  }
  return Partition::from_parts(std::move(c));
}

std::vector<Partition> partitions_of(int n) {
  std::vector<Partition> out;
  std::vector<int> cur;
  std::function<void(int, int)> rec = [&](int rest, int maxpart) {
    if (rest == 0) {
      out.push_back(Partition::from_parts(cur));
      return;
    }
    for (int v = std::min(rest, maxpart); v >= 1; --v) {
      cur.push_back(v);
      rec(rest - v, v);
      cur.pop_back();
    }
  };
  rec(n, n);
  return out;
}

Partition parse_partition(const std::string& comma_list) {
  std::vector<int> v;
  std::stringstream ss(comma_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      v.push_back(std::stoi(tok));
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad partition part '" + tok + "'");
    }
  }
  return Partition::from_parts(std::move(v));
}

Tableau::Tableau(Partition shape, std::vector<std::vector<int>> rows)
    : shape_(std::move(shape)), rows_(std::move(rows)) {
  if (static_cast<int>(rows_.size()) != shape_.length())
    fail(ErrorCode::ShapeMismatch, "row count differs from shape " + shape_.to_string());
  for (int r = 0; r < shape_.length(); ++r)
    if (static_cast<int>(rows_[r].size()) != shape_[r])
      fail(ErrorCode::ShapeMismatch, "row " + std::to_string(r + 1) + " length differs from shape " + shape_.to_string());
}

Tableau Tableau::from_rows(std::vector<std::vector<int>> rows) {
  std::vector<int> parts;
  for (auto& r : rows) parts.push_back(static_cast<int>(r.size()));
  return Tableau(Partition::from_parts(std::move(parts)), std::move(rows));
}

Tableau Tableau::column(const std::vector<int>& bottom_to_top) {
  std::vector<std::vector<int>> rows;
  for (int v : bottom_to_top) rows.push_back({v});
  return from_rows(std::move(rows));
}

std::pair<int, int> Tableau::position(int entry) const {
  for (std::size_t r = 0; r < rows_.size(); ++r)
    for (std::size_t c = 0; c < rows_[r].size(); ++c)
      if (rows_[r][c] == entry) return {static_cast<int>(r) + 1, static_cast<int>(c) + 1};
  return {0, 0};
}

std::vector<int> Tableau::reading_word() const {
  std::vector<int> w;
  for (auto& r : rows_) w.insert(w.end(), r.begin(), r.end());
  return w;
}

std::vector<int> Tableau::column_entries(int col, bool top_to_bottom) const {
  std::vector<int> out;
  for (auto& r : rows_)
    if (static_cast<int>(r.size()) >= col) out.push_back(r[col - 1]);
  if (top_to_bottom) std::reverse(out.begin(), out.end());
  return out;
}

bool Tableau::is_permutation_filling() const {
  auto w = reading_word();
  std::sort(w.begin(), w.end());
  for (std::size_t i = 0; i < w.size(); ++i)
    if (w[i] != static_cast<int>(i) + 1) return false;
  return true;
}

std::string Tableau::to_string() const {
  std::ostringstream os;
  for (auto r = rows_.rbegin(); r != rows_.rend(); ++r) {
    for (std::size_t c = 0; c < r->size(); ++c) os << (c ? " " : "") << (*r)[c];
    os << "\n";
  }
  return os.str();
}

bool is_p_tableau(const PosetPh& p, const Tableau& t) {
  if (t.size() != p.n() || !t.is_permutation_filling()) return false;
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      int x = rows[r][c];
      if (c > 0 && !p.less(rows[r][c - 1], x)) return false;
      if (r > 0 && p.less(x, rows[r - 1][c])) return false;
    }
  return true;
}

bool is_p_tableau(const HessenbergFunction& h, const Tableau& t) { return is_p_tableau(poset_of(h), t); }

bool is_p_tableau(const HessenbergFunction& h, const Partition& shape,
                  const std::vector<std::vector<int>>& rows) {
  Tableau t(shape, rows);
  if (shape.size() != h.n()) fail(ErrorCode::ShapeMismatch, "shape size differs from n");
  return is_p_tableau(h, t);
}

std::vector<Tableau> enumerate_p_tableaux(const PosetPh& p, const Partition& shape) {
  std::vector<Tableau> out;
  const int n = p.n();
  if (shape.size() != n) fail(ErrorCode::ShapeMismatch, "shape size differs from n");
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(len, 0);
  std::vector<std::pair<int, int>> cells;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape[r]; ++c) cells.emplace_back(r, c);
  std::vector<char> used(n + 1, 0);
  std::function<void(std::size_t)> rec = [&](std::size_t k) {
    if (k == cells.size()) {
      out.emplace_back(shape, rows);
      return;
    }
    auto [r, c] = cells[k];
    for (int x = 1; x <= n; ++x) {
      if (used[x]) continue;
      if (c > 0 && !p.less(rows[r][c - 1], x)) continue;
      if (r > 0 && p.less(x, rows[r - 1][c])) continue;
      used[x] = 1;
      rows[r][c] = x;
      rec(k + 1);
      used[x] = 0;
    }
  };
  rec(0);
  return out;
}

std::vector<Tableau> enumerate_p_tableaux(const HessenbergFunction& h, const Partition& shape) {
  return enumerate_p_tableaux(poset_of(h), shape);
}

InversionData inversions(const PosetPh& p, const Tableau& t) {
  InversionData d;
  const int n = t.size();
  std::vector<int> row(n + 1, 0);
  for (int r = 0; r < t.shape().length(); ++r)
    for (int x : t.rows()[r]) row[x] = r + 1;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if (row[i] > row[j] && !p.comparable(i, j)) d.pairs.emplace_back(i, j);
  return d;
}

InversionData inversions(const HessenbergFunction& h, const Tableau& t) { return inversions(poset_of(h), t); }

bool is_standard(const Tableau& t) {
  if (!t.is_permutation_filling()) return false;
  const auto& rows = t.rows();
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (std::size_t c = 0; c < rows[r].size(); ++c) {
      if (c > 0 && rows[r][c - 1] >= rows[r][c]) return false;
      if (r > 0 && rows[r - 1][c] >= rows[r][c]) return false;
    }
  return true;
}

std::vector<Tableau> enumerate_syt(const Partition& shape) {
  // place 1, 2, ..., n one at a time on an outer corner of the filled region
  std::vector<Tableau> out;
  const int n = shape.size();
  std::vector<int> filled(shape.length(), 0);
  std::vector<std::vector<int>> rows;
  for (int len : shape.parts()) rows.emplace_back(len, 0);
  std::function<void(int)> rec = [&](int v) {
    if (v > n) {
      out.emplace_back(shape, rows);
      return;
    }
    for (int r = 0; r < shape.length(); ++r) {
      if (filled[r] == shape[r]) continue;
      if (r > 0 && filled[r - 1] <= filled[r]) continue;
      rows[r][filled[r]] = v;
      ++filled[r];
      rec(v + 1);
      --filled[r];
    }
  };
  rec(1);
  std::sort(out.begin(), out.end());
  return out;
}

mpz_class count_syt(const Partition& shape) {
  const int n = shape.size();
  Partition conj = conjugate(shape);
  mpz_class hooks = 1;
  for (int r = 0; r < shape.length(); ++r)
    for (int c = 0; c < shape[r]; ++c) hooks *= (shape[r] - c - 1) + (conj[c] - r - 1) + 1;
  mpz_class f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(n));
  return f / hooks;
}

Tableau syt_with_bottom_pair(int n, int k) {
  if (n < 2 || k < 2 || k > n) fail(ErrorCode::KOutOfRange, "need 2 <= k <= n");
  std::vector<std::vector<int>> rows{{1, k}};
  for (int v = 2; v <= n; ++v)
    if (v != k) rows.push_back({v});
  return Tableau::from_rows(std::move(rows));
}

Poly specht_polynomial(const Tableau& t) {
  Poly f(1);
  for (int c = 1; t.shape().length() && c <= t.shape()[0]; ++c) {
    auto col = t.column_entries(c, false);
    for (std::size_t a = 0; a < col.size(); ++a)
      for (std::size_t b = a + 1; b < col.size(); ++b) {
        int lo = std::min(col[a], col[b]), hi = std::max(col[a], col[b]);
        f *= Poly::binomial(hi, lo);
      }
  }
  return f;
}

std::vector<std::pair<int, int>> potential_inversions(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> out;
  for (int a = 2; a <= h.n(); ++a)
    for (int b = a + 1; b <= h(a); ++b) out.emplace_back(a, b);
  return out;
}

}  // namespace hess
