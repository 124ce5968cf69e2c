// Proper-coloring enumeration behind csf_by_coloring. The parallel kernel
// splits the search on the colors of the first two vertices; each worker
// keeps its own tally, merged afterwards by exact addition.

#include <algorithm>
#include <map>
#include <sstream>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "hess/error.hpp"
#include "hess/symfunc.hpp"

namespace hess {

namespace {

// (packed content vector, ascent count) -> number of colorings
using Tally = std::map<std::pair<std::uint64_t, int>, long long>;

struct ColoringSearch {
  int n;
  AscentRule rule;
  std::vector<std::vector<int>> earlier_nbrs;  // neighbours u < v of each v (0-based)
  std::vector<int> color;
  std::vector<int> content;

  ColoringSearch(const Graph& g, AscentRule r) : n(g.n), rule(r), earlier_nbrs(g.n), color(g.n, 0), content(g.n + 1, 0) {
    for (auto [a, b] : g.edges) earlier_nbrs[b - 1].push_back(a - 1);
  }

  // ascents contributed by placing color c at vertex v, or -1 if improper
  int place_cost(int v, int c) const {
    int asc = 0;
    for (int u : earlier_nbrs[v]) {
      if (color[u] == c) return -1;
      if (rule == AscentRule::edges && color[u] < c) ++asc;
    }
    if (rule == AscentRule::all_pairs)
      for (int u = 0; u < v; ++u)
        if (color[u] < c) ++asc;
    return asc;
  }

  void record(int asc, Tally& out) const {
    // only gap-free content vectors index quasisymmetric coefficients
    int k = n;
    while (k > 0 && content[k] == 0) --k;
    std::uint64_t key = 0;
    for (int c = 1; c <= k; ++c) {
      if (content[c] == 0) return;
      key |= static_cast<std::uint64_t>(content[c]) << (8 * (c - 1));
    }
    out[{key, asc}] += 1;
  }

  void dfs(int v, int asc, Tally& out) {
    if (v == n) {
      record(asc, out);
      return;
    }
    for (int c = 1; c <= n; ++c) {
      int a = place_cost(v, c);
      if (a < 0) continue;
      color[v] = c;
      ++content[c];
      dfs(v + 1, asc + a, out);
      --content[c];
      color[v] = 0;
    }
  }

  // run with the first `fixed` vertices preassigned; false if improper
  bool seed(const std::vector<int>& prefix, int& asc) {
    asc = 0;
    for (std::size_t v = 0; v < prefix.size(); ++v) {
      int a = place_cost(static_cast<int>(v), prefix[v]);
      if (a < 0) return false;
      asc += a;
      color[v] = prefix[v];
      ++content[prefix[v]];
    }
    return true;
  }
};

void merge(Tally& into, const Tally& from) {
  for (const auto& [k, v] : from) into[k] += v;
}

QuasiCoefficients to_quasi(const Tally& t, int n) {
  QuasiCoefficients q;
  for (const auto& [key, count] : t) {
    std::vector<int> comp;
    for (int c = 0; c < n; ++c) {
      int v = static_cast<int>((key.first >> (8 * c)) & 0xff);
      if (!v) break;
      comp.push_back(v);
    }
    q[comp].add_term(key.second, mpz_class(static_cast<long>(count)));
  }
  return q;
}

SymFn symmetrize(const QuasiCoefficients& q, int n) {
  SymFn f(n, Basis::monomial);
  for (const auto& [comp, c] : q) {
    std::vector<int> sorted = comp;
    std::sort(sorted.rbegin(), sorted.rend());
    auto it = q.find(sorted);
    QPolynomial ref = it == q.end() ? QPolynomial() : it->second;
    if (!(ref == c)) {
      std::ostringstream os;
      os << "coefficient of composition (";
      for (std::size_t i = 0; i < comp.size(); ++i) os << (i ? "," : "") << comp[i];
      os << ") differs from its sorted rearrangement";
      fail(ErrorCode::NotSymmetric, os.str());
    }
    if (comp == sorted) f.add_term(Partition::from_parts(sorted), c);
  }
  // every rearrangement of a present partition must be present too
  std::map<std::vector<int>, std::size_t> seen;
  for (const auto& [comp, c] : q) {
    std::vector<int> sorted = comp;
    std::sort(sorted.rbegin(), sorted.rend());
    ++seen[sorted];
  }
  for (const auto& [mu, count] : seen) {
    std::vector<int> perm(mu.rbegin(), mu.rend());
    std::size_t arrangements = 0;
    do {
      ++arrangements;
    } while (std::next_permutation(perm.begin(), perm.end()));
    if (arrangements != count) fail(ErrorCode::NotSymmetric, "missing rearrangements of a composition");
  }
  return f;
}

}  // namespace

QuasiCoefficients coloring_coefficients(const Graph& g, AscentRule rule, bool parallel) {
  const int n = g.n;
  if (n < 1) fail(ErrorCode::EmptyInput, "graph has no vertices");
  if (n > kMaxVars) fail(ErrorCode::DegreeTooLarge, "coloring enumeration supports n <= 8");
  Tally total;
  if (!parallel || n < 3) {
    ColoringSearch s(g, rule);
    s.dfs(0, 0, total);
    return to_quasi(total, n);
  }
  const int tasks = n * n;
#pragma omp parallel
  {
    Tally local;
#pragma omp for schedule(dynamic)
    for (int t = 0; t < tasks; ++t) {
      ColoringSearch s(g, rule);
      int asc = 0;
      if (s.seed({t / n + 1, t % n + 1}, asc)) s.dfs(2, asc, local);
    }
#pragma omp critical
    merge(total, local);
  }
  return to_quasi(total, n);
}

SymFn csf_by_coloring(const Graph& g, AscentRule rule) {
  return symmetrize(coloring_coefficients(g, rule, true), g.n);
}

SymFn csf_by_coloring_serial(const Graph& g, AscentRule rule) {
  return symmetrize(coloring_coefficients(g, rule, false), g.n);
}

}  // namespace hess
