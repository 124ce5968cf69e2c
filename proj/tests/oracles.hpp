#pragma once

// Independent reference computations used only by the tests. These are
// deliberately naive (brute force over raw definitions) and share no code
// paths with the library beyond basic value types.

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>
#include <set>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/permutation.hpp"
#include "hess/poly.hpp"
#include "hess/qpoly.hpp"
#include "hess/tableaux.hpp"

namespace oracle {

// Transpose by reflecting the set of cells {(i, j) : j <= h(i)} across the
// anti-diagonal and reading the new row maxima.
inline std::vector<int> reflect_dyck(const std::vector<int>& h) {
  const int n = static_cast<int>(h.size());
  std::set<std::pair<int, int>> cells;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= h[i - 1]; ++j) cells.emplace(n + 1 - j, n + 1 - i);
  std::vector<int> out(n, 0);
  for (auto [i, j] : cells) out[i - 1] = std::max(out[i - 1], j);
  return out;
}

inline bool less_h(const std::vector<int>& h, int i, int j) { return h[i - 1] < j; }

// all fillings of `shape` by permutations of [n], checked cell by cell
inline std::vector<std::vector<std::vector<int>>> brute_p_tableaux(const std::vector<int>& h,
                                                                   const std::vector<int>& shape) {
  const int n = static_cast<int>(h.size());
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  std::vector<std::vector<std::vector<int>>> out;
  do {
    std::vector<std::vector<int>> rows;
    int k = 0;
    for (int len : shape) {
      rows.emplace_back(perm.begin() + k, perm.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c + 1 < rows[r].size() && !less_h(h, rows[r][c], rows[r][c + 1])) ok = false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() && less_h(h, rows[r + 1][c], rows[r][c])) ok = false;
      }
    if (ok) out.push_back(rows);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline int brute_inversions(const std::vector<int>& h, const std::vector<std::vector<int>>& rows) {
  std::map<int, int> row;
  for (std::size_t r = 0; r < rows.size(); ++r)
    for (int x : rows[r]) row[x] = static_cast<int>(r);
  int count = 0;
  for (auto [i, ri] : row)
    for (auto [j, rj] : row)
      if (i < j && ri > rj && !less_h(h, i, j) && !less_h(h, j, i)) ++count;
  return count;
}

// number of standard fillings by brute force over all permutations
inline long brute_syt_count(const std::vector<int>& shape) {
  int n = std::accumulate(shape.begin(), shape.end(), 0);
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  long count = 0;
  do {
    std::vector<std::vector<int>> rows;
    int k = 0;
    for (int len : shape) {
      rows.emplace_back(perm.begin() + k, perm.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) ok = false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] < rows[r][c]) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return count;
}

// Semistandard tableaux of a shape with given content, by brute force over
// all assignments of labels to cells (French orientation: columns strictly
// increase upward, rows weakly increase rightward).
inline long brute_kostka(const std::vector<int>& shape, const std::vector<int>& content) {
  std::vector<int> labels;
  for (std::size_t v = 0; v < content.size(); ++v)
    for (int k = 0; k < content[v]; ++k) labels.push_back(static_cast<int>(v) + 1);
  long count = 0;
  do {
    std::vector<std::vector<int>> rows;
    int k = 0;
    for (int len : shape) {
      rows.emplace_back(labels.begin() + k, labels.begin() + k + len);
      k += len;
    }
    bool ok = true;
    for (std::size_t r = 0; r < rows.size() && ok; ++r)
      for (std::size_t c = 0; c < rows[r].size() && ok; ++c) {
        if (c + 1 < rows[r].size() && rows[r][c] > rows[r][c + 1]) ok = false;
        if (r + 1 < rows.size() && c < rows[r + 1].size() && rows[r + 1][c] <= rows[r][c]) ok = false;
      }
    if (ok) ++count;
  } while (std::next_permutation(labels.begin(), labels.end()));
  return count;
}

// X_G coefficient of x^mu (mu padded with zeros) by looping over all n^n maps
inline hess::QPolynomial brute_csf_coefficient(int n, const std::set<std::pair<int, int>>& edges,
                                               const std::vector<int>& mu) {
  hess::QPolynomial out;
  std::vector<int> kappa(n, 1);
  while (true) {
    std::vector<int> content(n + 1, 0);
    for (int c : kappa) ++content[c];
    bool match = true;
    for (int c = 1; c <= n; ++c)
      if (content[c] != (c <= static_cast<int>(mu.size()) ? mu[c - 1] : 0)) match = false;
    if (match) {
      bool proper = true;
      int asc = 0;
      for (auto [a, b] : edges) {
        if (kappa[a - 1] == kappa[b - 1]) proper = false;
        if (kappa[a - 1] < kappa[b - 1]) ++asc;
      }
      if (proper) out.add_term(asc, 1);
    }
    int i = 0;
    while (i < n && kappa[i] == n) kappa[i++] = 1;
    if (i == n) break;
    ++kappa[i];
  }
  return out;
}

// Divisibility of a polynomial by (t_a - t_b), tested by evaluating on many
// random integer points lying on the hyperplane t_a = t_b.
inline bool vanishes_on_hyperplane(const hess::Poly& p, int a, int b, int nvars, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> dist(-50, 50);
  for (int trial = 0; trial < 8; ++trial) {
    std::vector<long long> pt(nvars + 1);
    for (int i = 1; i <= nvars; ++i) pt[i] = dist(rng);
    pt[a] = pt[b];
    __int128 s = 0;
    for (const auto& [m, c] : p.terms()) {
      __int128 v = c;
      for (int i = 1; i <= nvars; ++i)
        for (int e = 0; e < m.exponent(i); ++e) v *= pt[i];
      s += v;
    }
    if (s != 0) return false;
  }
  return true;
}

inline hess::QPolynomial q_int(int k) {
  hess::QPolynomial p;
  for (int i = 0; i < k; ++i) p += hess::QPolynomial::monomial(i);
  return p;
}

inline hess::QPolynomial q_fact(int k) {
  hess::QPolynomial p(1);
  for (int i = 1; i <= k; ++i) p = p * q_int(i);
  return p;
}

}  // namespace oracle
