#pragma once

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>

#include "hess/hessenberg.hpp"
#include "hess/qpoly.hpp"
#include "hess/tableaux.hpp"

namespace hess {

enum class Basis { monomial, schur, elementary, homogeneous };
std::string_view to_string(Basis b);
Basis parse_basis(std::string_view s);

inline constexpr int kDefaultMaxSymDegree = 8;

// Degree-n symmetric function with q-polynomial coefficients in one basis.
class SymFn {
 public:
  using Terms = std::map<Partition, QPolynomial, std::greater<Partition>>;

  SymFn() = default;
  SymFn(int degree, Basis basis) : degree_(degree), basis_(basis) {}

  int degree() const { return degree_; }
  Basis basis() const { return basis_; }
  const Terms& terms() const { return terms_; }
  QPolynomial coefficient(const Partition& p) const;
  bool is_zero() const { return terms_.empty(); }

  // SizeMismatch if |p| != degree
  void add_term(const Partition& p, const QPolynomial& c);
  SymFn& operator+=(const SymFn& o);  // BasisMismatch / SizeMismatch
  SymFn& operator-=(const SymFn& o);
  friend SymFn operator+(SymFn a, const SymFn& b) { return a += b; }
  friend SymFn operator-(SymFn a, const SymFn& b) { return a -= b; }
  friend SymFn operator*(const QPolynomial& c, const SymFn& f);
  bool operator==(const SymFn& o) const;

  std::string to_string() const;

 private:
  int degree_ = 0;
  Basis basis_ = Basis::monomial;
  Terms terms_;
};

enum class AscentRule {
  edges,      // ascents counted on edges u < v of the graph only
  all_pairs,  // every pair u < v with kappa(u) < kappa(v)
};

// X_G(x;q) in the monomial basis from all proper colorings [n] -> [n].
// Throws NotSymmetric when the coloring data is only quasisymmetric.
SymFn csf_by_coloring(const Graph& g, AscentRule rule = AscentRule::edges);
// single-threaded reference for csf_by_coloring
SymFn csf_by_coloring_serial(const Graph& g, AscentRule rule = AscentRule::edges);

// Coefficients of the quasisymmetric expansion, keyed by compositions
// (gap-free content vectors) of proper colorings.
using QuasiCoefficients = std::map<std::vector<int>, QPolynomial>;
QuasiCoefficients coloring_coefficients(const Graph& g, AscentRule rule, bool parallel);

SymFn csf_schur_by_ptableaux(const HessenbergFunction& h);

// s_lambda -> s_lambda'; BasisMismatch unless in the Schur basis
SymFn omega(const SymFn& f);

SymFn change_basis(const SymFn& f, Basis target, int max_degree = kDefaultMaxSymDegree);

// coefficient of m_mu in the expansion of the basis element indexed by lambda
mpz_class monomial_coefficient(Basis b, const Partition& lambda, const Partition& mu);
mpz_class kostka_number(const Partition& shape, const Partition& content);

struct PositivityReport {
  bool positive = true;
  std::optional<std::pair<Partition, int>> witness;  // (partition, q-exponent)
};
PositivityReport is_positive(const SymFn& f, Basis b, int max_degree = kDefaultMaxSymDegree);

// Each coefficient replaced by its value at q = 1.
SymFn at_q_equals_one(const SymFn& f);

struct DecompositionCounts {
  int n = 0;
  // q-degree -> (trivial multiplicity, standard multiplicity)
  std::map<int, std::pair<long, long>> by_degree;
  long total_trivial() const;
  long total_standard() const;
  long dimension() const;  // sum of m1 + m2 (n-1)
};

SymFn frobenius_from_decomposition(const DecompositionCounts& d);

}  // namespace hess
