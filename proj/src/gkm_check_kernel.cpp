// Edge-by-edge divisibility check. Each edge is independent; the parallel
// kernel records the smallest failing edge index so the witness matches the
// serial scan.

#include <limits>

#include "hess/error.hpp"
#include "hess/gkm.hpp"

namespace hess {

namespace {

bool edge_ok(const GkmGraph& g, const GkmClass& c, const GkmEdge& e) {
  const Permutation& w = g.vertex(e.w);
  // t_{w(i)} - t_{w(j)} divides the difference iff it vanishes at t_{w(i)} = t_{w(j)}
  Poly diff = c.at_index(e.w) - c.at_index(e.w2);
  return diff.substitute(w(e.i), w(e.j)).is_zero();
}

void check_sizes(const GkmGraph& g, const GkmClass& c) {
  if (g.n() != c.n()) fail(ErrorCode::SizeMismatch, "graph and class sizes differ");
}

}  // namespace

GkmCheck check_gkm_condition_serial(const GkmGraph& g, const GkmClass& c) {
  check_sizes(g, c);
  for (const auto& e : g.edges())
    if (!edge_ok(g, c, e)) return {false, e};
  return {};
}

GkmCheck check_gkm_condition(const GkmGraph& g, const GkmClass& c) {
  check_sizes(g, c);
  const auto& edges = g.edges();
  const long count = static_cast<long>(edges.size());
  long first = std::numeric_limits<long>::max();
#pragma omp parallel for reduction(min : first) schedule(static)
  for (long k = 0; k < count; ++k)
    if (k < first && !edge_ok(g, c, edges[k])) first = k;
  if (first == std::numeric_limits<long>::max()) return {};
  return {false, edges[first]};
}

}  // namespace hess
