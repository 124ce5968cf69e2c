#pragma once

// Equivariant classes on the GKM graph of Hess(S,h): tuples of polynomials in
// t_1..t_n indexed by permutations (lexicographic order), the divisibility
// condition along edges, the dot action and graded ranks modulo (t_1..t_n).

#include <map>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/linalg.hpp"
#include "hess/permutation.hpp"
#include "hess/poly.hpp"
#include "hess/qpoly.hpp"

namespace hess {

// all_permutations(n), computed once per n
const std::vector<Permutation>& permutations_of(int n);

class GkmClass {
 public:
  GkmClass() = default;
  // values in lexicographic vertex order; SizeMismatch unless n! entries
  GkmClass(int n, std::vector<Poly> values);
  static GkmClass constant(int n, const Poly& p);
  static GkmClass zero(int n) { return constant(n, Poly()); }

  int n() const { return n_; }
  const Poly& at(const Permutation& w) const { return values_[lex_rank(w)]; }
  const Poly& at_index(std::size_t i) const { return values_[i]; }
  const std::vector<Poly>& values() const { return values_; }
  bool is_zero() const;
  // common degree of the nonzero entries, -1 for zero; nullopt if mixed
  std::optional<int> homogeneous_degree() const;

  GkmClass& operator+=(const GkmClass& o);
  GkmClass& operator-=(const GkmClass& o);
  GkmClass& operator*=(const GkmClass& o);
  friend GkmClass operator+(GkmClass a, const GkmClass& b) { return a += b; }
  friend GkmClass operator-(GkmClass a, const GkmClass& b) { return a -= b; }
  friend GkmClass operator*(GkmClass a, const GkmClass& b) { return a *= b; }
  friend GkmClass operator*(const Poly& p, GkmClass a);
  friend GkmClass operator*(Poly::Coeff c, GkmClass a);
  bool operator==(const GkmClass& o) const = default;

 private:
  void check_compatible(const GkmClass& o) const;
  int n_ = 0;
  std::vector<Poly> values_;
};

struct GkmEdge {
  std::size_t w = 0, w2 = 0;  // lex ranks, w < w2, w2 = w (j i)
  int j = 0, i = 0;           // j < i <= h(j)
  bool operator==(const GkmEdge&) const = default;
};

class GkmGraph {
 public:
  int n() const { return h_.n(); }
  const HessenbergFunction& h() const { return h_; }
  const std::vector<GkmEdge>& edges() const { return edges_; }
  std::size_t vertex_count() const { return factorial(n()); }
  const Permutation& vertex(std::size_t i) const { return permutations_of(n())[i]; }
  // t_{w(i)} - t_{w(j)}
  Poly label(const GkmEdge& e) const;
  std::vector<std::size_t> degrees() const;
  std::string to_dot() const;

  friend GkmGraph build_gkm_graph(const HessenbergFunction& h);

 private:
  HessenbergFunction h_;
  std::vector<GkmEdge> edges_;
};

GkmGraph build_gkm_graph(const HessenbergFunction& h);

// t_k at every vertex
GkmClass class_t(int n, int k);
// t_{w(k)} at w
GkmClass class_x(int n, int k);
// y_k for h = (h(1), n, ..., n): prod_{l=2}^{h(1)} (t_k - t_{w(l)}) when w(1) = k
GkmClass class_y_one_row(const HessenbergFunction& h, int k);
// y_k for h = ((n-1)^{n-m}, n^m): prod_{l=n-m+1}^{n-1} (t_k - t_{w(l)}) when w(n) = k
GkmClass class_y_transpose(const HessenbergFunction& h, int k);

struct GkmCheck {
  bool ok = true;
  std::optional<GkmEdge> failing_edge;  // first failure in canonical edge order
};

GkmCheck check_gkm_condition(const GkmGraph& g, const GkmClass& c);
// single-threaded reference for check_gkm_condition
GkmCheck check_gkm_condition_serial(const GkmGraph& g, const GkmClass& c);

// (v.a)(w) = v . a(v^{-1} w), where v sends t_i to t_{v(i)}
GkmClass dot_action(const Permutation& v, const GkmClass& c);

enum class Form { one_row, transpose };
std::string_view to_string(Form f);

struct RelationReport {
  Form form = Form::one_row;
  std::vector<std::pair<std::string, bool>> identities;
  bool all_pass() const;
};

// the four tuple identities for the requested form; FormMismatch if h lacks it
RelationReport verify_relations(const HessenbergFunction& h, Form form);
// every form h has
std::vector<RelationReport> verify_relations(const HessenbergFunction& h);

enum class RankRoute {
  generators,  // span of products of t, x, y (special forms only)
  kernel,      // solve the GKM conditions degree by degree (any h)
};

// Graded pieces of H_T^*(Hess(S,h)) as exact subspaces of (Z[t]_d)^{n!},
// and their images modulo the ideal (t_1, ..., t_n). Degrees are in q-units.
class GkmRankModel {
 public:
  GkmRankModel(const HessenbergFunction& h, RankRoute route);
  ~GkmRankModel();
  GkmRankModel(GkmRankModel&&) noexcept;
  GkmRankModel& operator=(GkmRankModel&&) noexcept;

  static RankRoute default_route(const HessenbergFunction& h);

  const HessenbergFunction& h() const;
  RankRoute route() const;
  int top_degree() const;  // sum of h(k) - k
  int equivariant_rank(int q_degree);
  int quotient_rank(int q_degree);
  // dimension of the dot-action invariants in the quotient
  int fixed_rank(int q_degree);
  // true iff the homogeneous class lies in t_1 H + ... + t_n H
  bool in_torus_ideal(const GkmClass& c);
  QPolynomial poincare();

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

// FormMismatch unless h is of a special form; OddDegree for odd degree_2d
int graded_quotient_rank(const HessenbergFunction& h, int degree_2d);
// any h (general h uses the kernel route); OddDegree for odd degree_2d
int sn_fixed_rank(const HessenbergFunction& h, int degree_2d);

}  // namespace hess
