#include "hess/hessenberg.hpp"

#include <sstream>

#include "hess/error.hpp"

namespace hess {

HessenbergFunction HessenbergFunction::from_values(std::vector<int> values) {
  if (values.empty()) fail(ErrorCode::EmptyInput, "Hessenberg function needs n >= 1");
  const int n = static_cast<int>(values.size());
  for (int i = 1; i <= n; ++i)
    if (values[i - 1] > n)
      fail(ErrorCode::OutOfRange, "h(" + std::to_string(i) + ") = " + std::to_string(values[i - 1]) + " > n");
  for (int i = 2; i <= n; ++i)
    if (values[i - 2] > values[i - 1])
      fail(ErrorCode::NotWeaklyIncreasing, "h(" + std::to_string(i - 1) + ") > h(" + std::to_string(i) + ")");
  for (int i = 1; i <= n; ++i)
    if (values[i - 1] < i)
      fail(ErrorCode::BelowDiagonal, "h(" + std::to_string(i) + ") = " + std::to_string(values[i - 1]) + " < " + std::to_string(i));
  HessenbergFunction h;
  h.values_ = std::move(values);
  return h;
}

std::string HessenbergFunction::to_string() const {
  std::ostringstream os;
  os << "(";
  for (int i = 0; i < n(); ++i) os << (i ? "," : "") << values_[i];
  os << ")";
  return os.str();
}

HessenbergFunction transpose(const HessenbergFunction& h) {
  const int n = h.n();
  std::vector<int> t(n);
  for (int i = 1; i <= n; ++i) {
    int count = 0;
    for (int k = 1; k <= n; ++k)
      if (h(k) >= n + 1 - i) ++count;
    t[i - 1] = count;
  }
  return HessenbergFunction::from_values(std::move(t));
}

std::string FormTag::to_string() const {
  std::ostringstream os;
  if (is_general()) return "General";
  if (one_row) os << "OneRowForm(" << *one_row << ")";
  if (is_both()) os << "+";
  if (transpose) os << "TransposeForm(" << *transpose << ")";
  return os.str();
}

FormTag classify_form(const HessenbergFunction& h) {
  const int n = h.n();
  FormTag tag;
  bool one_row = true;
  for (int i = 2; i <= n; ++i)
    if (h(i) != n) one_row = false;
  if (one_row) tag.one_row = h(1);
  // ((n-1)^{n-m}, n^m) with m >= 1
  int m = 0;
  bool ok = true;
  for (int i = 1; i <= n; ++i) {
    if (h(i) == n) {
      ++m;
    } else if (h(i) != n - 1 || m > 0) {
      ok = false;
    }
  }
  if (ok && m >= 1) tag.transpose = m;
  return tag;
}

HessenbergFunction one_row_form(int n, int h1) {
  if (n < 1 || h1 < 1 || h1 > n) fail(ErrorCode::OutOfRange, "one-row form needs 1 <= h(1) <= n");
  std::vector<int> v(n, n);
  v[0] = h1;
  return HessenbergFunction::from_values(std::move(v));
}

HessenbergFunction transpose_form(int n, int m) {
  if (n < 1 || m < 1 || m > n) fail(ErrorCode::OutOfRange, "transpose form needs 1 <= m <= n");
  std::vector<int> v(n, n);
  for (int i = 0; i < n - m; ++i) v[i] = n - 1;
  return HessenbergFunction::from_values(std::move(v));
}

PosetPh poset_of(const HessenbergFunction& h) {
  PosetPh p;
  p.n_ = h.n();
  p.less_.assign(p.n_ * p.n_, 0);
  for (int i = 1; i <= p.n_; ++i)
    for (int j = 1; j <= p.n_; ++j)
      if (h(i) < j) {
        p.less_[(i - 1) * p.n_ + (j - 1)] = 1;
        p.relations_.emplace(i, j);
      }
  // invariant: irreflexive and transitively closed
  for (auto [i, j] : p.relations_) {
    if (i == j) fail(ErrorCode::Internal, "poset not irreflexive");
    for (int k = 1; k <= p.n_; ++k)
      if (p.less(j, k) && !p.less(i, k)) fail(ErrorCode::Internal, "poset not transitive");
  }
  return p;
}

PosetPh antichain(int n) {
  std::vector<int> v(n, n);
  return poset_of(HessenbergFunction::from_values(std::move(v)));
}

IncGraph inc_graph(const PosetPh& p) {
  IncGraph g;
  g.n = p.n();
  for (int i = 1; i <= g.n; ++i)
    for (int j = i + 1; j <= g.n; ++j)
      if (!p.comparable(i, j)) g.edges.emplace(i, j);
  return g;
}

std::vector<int> box_counts(const HessenbergFunction& h) {
  std::vector<int> b(h.n());
  for (int k = 1; k <= h.n(); ++k) b[k - 1] = h(k) - k;
  return b;
}

std::vector<std::pair<int, int>> gkm_pairs(const HessenbergFunction& h) {
  std::vector<std::pair<int, int>> out;
  for (int j = 1; j <= h.n(); ++j)
    for (int i = j + 1; i <= h(j); ++i) out.emplace_back(j, i);
  return out;
}

namespace {
void extend(int n, std::vector<int>& cur, std::vector<HessenbergFunction>& out) {
  const int i = static_cast<int>(cur.size()) + 1;
  if (i > n) {
    out.push_back(HessenbergFunction::from_values(cur));
    return;
  }
  int lo = std::max(i, cur.empty() ? 1 : cur.back());
  for (int v = lo; v <= n; ++v) {
    cur.push_back(v);
    extend(n, cur, out);
    cur.pop_back();
  }
}
}  // namespace

std::vector<HessenbergFunction> all_hessenberg_functions(int n) {
  std::vector<HessenbergFunction> out;
  std::vector<int> cur;
  if (n >= 1) extend(n, cur, out);
  return out;
}

HessenbergFunction parse_hessenberg(const std::string& comma_list) {
  std::vector<int> v;
  std::stringstream ss(comma_list);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t pos = 0;
      v.push_back(std::stoi(tok, &pos));
      if (pos != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "bad Hessenberg value '" + tok + "'");
    }
  }
  return HessenbergFunction::from_values(std::move(v));
}

}  // namespace hess
