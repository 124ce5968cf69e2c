#include "hess/bijections.hpp"

#include <algorithm>

#include "hess/error.hpp"

namespace hess {

namespace {

void require_one_row(const HessenbergFunction& h) {
  if (!classify_form(h).one_row) fail(ErrorCode::FormMismatch, "expected h = (h(1), n, ..., n); got " + h.to_string());
}

void require_column_ptableau(const HessenbergFunction& h, const Tableau& t) {
  if (t.shape() != Partition::column(h.n()) || !t.is_permutation_filling() || !is_p_tableau(h, t))
    fail(ErrorCode::NotPTableau, "expected a P_h-tableau of shape (1^n) for h = " + h.to_string());
}

void require_x_only(const HessenbergFunction& h, const XYMonomial& m) {
  if (m.n() != h.n() || m.y != 0) fail(ErrorCode::NotInBasis, m.to_string() + " is not a pure x-monomial in n variables");
}

// column tableau from a bottom-to-top list, recording it if asked
void record(Trace* trace, const std::vector<int>& col) {
  if (trace) trace->push_back(Tableau::column(col));
}

// i_k = number of entries below k (larger and incomparable under p)
XYMonomial read_inversions(const PosetPh& p, const Tableau& t) {
  XYMonomial m = XYMonomial::one(p.n());
  for (auto [a, b] : inversions(p, t).pairs) ++m.x[a - 1];
  return m;
}

}  // namespace

Tableau phi_nilpotent(const HessenbergFunction& h, const XYMonomial& m, Trace* trace) {
  require_x_only(h, m);
  const int n = h.n();
  for (int k = 1; k <= n; ++k)
    if (m.x[k - 1] > h(k) - k) fail(ErrorCode::NotInBasis, m.to_string() + " is not in N_h for h = " + h.to_string());
  std::vector<int> col{n};  // bottom to top
  record(trace, col);
  for (int k = n - 1; k >= 1; --k) {
    const int ik = m.x[k - 1];
    if (ik == 0) {
      col.insert(col.begin(), k);
    } else {
      // k+1..h(k), lowest first; k goes directly above the ik-th of them
      int seen = 0;
      for (std::size_t pos = 0; pos < col.size(); ++pos)
        if (col[pos] > k && col[pos] <= h(k) && ++seen == ik) {
          col.insert(col.begin() + static_cast<long>(pos) + 1, k);
          break;
        }
    }
    record(trace, col);
  }
  return Tableau::column(col);
}

XYMonomial psi_nilpotent(const HessenbergFunction& h, const Tableau& t) {
  require_column_ptableau(h, t);
  return read_inversions(poset_of(h), t);
}

Tableau phi_b1(const HessenbergFunction& h, const XYMonomial& m, Trace* trace) {
  require_one_row(h);
  require_x_only(h, m);
  const int n = h.n(), h1 = h(1);
  bool all_low = true;
  for (int j = 1; j <= n; ++j) {
    if (m.x[j - 1] > n - j) fail(ErrorCode::NotInBasis, m.to_string() + " is not in B1");
    if (j <= h1) all_low = all_low && m.x[j - 1] > 0;
  }
  if (all_low) fail(ErrorCode::NotInBasis, m.to_string() + " contains x_1...x_h(1)");

  std::vector<int> col{n};
  record(trace, col);
  for (int k = n - 1; k >= 1; --k) {
    col.insert(col.begin() + m.x[k - 1], k);
    record(trace, col);
  }
  int kp = 1;
  while (m.x[kp - 1] != 0) ++kp;
  if (kp > 1) {
    // kp sits at the bottom; slide it up to directly below the 1
    col.erase(col.begin());
    auto one = std::find(col.begin(), col.end(), 1);
    col.insert(one, kp);
    record(trace, col);
  }
  return Tableau::column(col);
}

Tableau psi_b1_intermediate(const HessenbergFunction& h, const Tableau& t) {
  require_one_row(h);
  require_column_ptableau(h, t);
  const int r = t.row_of(1);
  if (r <= 2) return t;
  std::vector<int> col = t.column_entries(1, false);
  const int below = col[r - 2];
  col.erase(col.begin() + (r - 2));
  col.insert(col.begin(), below);
  return Tableau::column(col);
}

XYMonomial psi_b1(const HessenbergFunction& h, const Tableau& t) {
  return read_inversions(antichain(h.n()), psi_b1_intermediate(h, t));
}

TabPair phi_b3(const HessenbergFunction& h, const XYElement& e, Trace* trace) {
  require_one_row(h);
  const int n = h.n(), h1 = h(1);
  // expect exactly x^l y_k - x^l y_1
  auto bad = [&]() { fail(ErrorCode::NotInBasis, e.to_string() + " is not in B3"); };
  if (n < 2 || e.terms().size() != 2) bad();
  const auto& [m1, c1] = *e.terms().begin();
  const auto& [m2, c2] = *std::next(e.terms().begin());
  if (m1.x != m2.x || m1.n() != n) bad();
  const XYMonomial& pos = c1 == 1 ? m1 : m2;
  const XYMonomial& neg = c1 == 1 ? m2 : m1;
  if (!((c1 == 1 && c2 == -1) || (c1 == -1 && c2 == 1)) || neg.y != 1 || pos.y < 2) bad();
  const std::vector<int>& x = pos.x;
  if (x[0] != 0) bad();
  for (int i = 2; i <= n; ++i)
    if (x[i - 1] > i - 2) bad();
  int j = 0;
  for (int c = n; c > h1; --c)
    if (x[c - 1] == 0) {
      j = c;
      break;
    }
  if (j == 0) bad();  // contains x_{h(1)+1}...x_n

  TabPair out;
  out.s = syt_with_bottom_pair(n, pos.y);
  std::vector<int> left{1};  // left column, bottom to top
  auto build = [&]() {
    std::vector<std::vector<int>> rows{{left[0], j}};
    for (std::size_t r = 1; r < left.size(); ++r) rows.push_back({left[r]});
    return Tableau::from_rows(std::move(rows));
  };
  if (trace) trace->push_back(build());
  for (int i = 2; i <= n; ++i) {
    if (i == j) continue;
    const int above = (i - 2) - x[i - 1];
    const long at = static_cast<long>(left.size()) - above;
    if (at < 1) bad();
    left.insert(left.begin() + at, i);
    if (trace) trace->push_back(build());
  }
  out.t = build();
  return out;
}

XYElement psi_b3(const HessenbergFunction& h, const TabPair& p) {
  require_one_row(h);
  const int n = h.n();
  if (n < 2) fail(ErrorCode::InvalidPair, "pairs need n >= 2");
  const Partition mu = Partition::hook(n);
  if (p.s.shape() != mu || !p.s.is_permutation_filling() || !is_standard(p.s))
    fail(ErrorCode::InvalidPair, "S must be a standard tableau of shape " + mu.to_string());
  if (p.t.shape() != mu || !p.t.is_permutation_filling() || !is_p_tableau(h, p.t))
    fail(ErrorCode::InvalidPair, "T must be a P_h-tableau of shape " + mu.to_string());
  const int k = p.s.at(1, 2);

  // l for x_b: potential inversions (a, b), 1 < a < b <= h(a), missing from T
  std::vector<int> missing(n + 1, 0);
  for (auto [a, b] : potential_inversions(h)) ++missing[b];
  for (auto [a, b] : inversions(h, p.t).pairs)
    if (a > 1) --missing[b];
  XYMonomial x = XYMonomial::one(n);
  for (int b = 1; b <= n; ++b) x.x[b - 1] = missing[b];
  XYMonomial yk = x, y1 = x;
  yk.y = k;
  y1.y = 1;
  return XYElement::monomial(yk) - XYElement::monomial(y1);
}

}  // namespace hess
