#pragma once

// The quotient-ring model Z[x_1..x_n, y_1..y_n]/I of H^*(Hess(S,h)) for the
// two special forms, its monomial bases, normal forms, transition blocks
// between B1∪B2 and B1∪B3, and the permutation-orbit basis.
//
// Degrees are q-units throughout (deg x_i = 1, deg y_k = h(1) - 1, resp.
// m - 1 for the transpose form); TransitionBlock::degree is cohomological.

#include <gmpxx.h>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "hess/gkm.hpp"
#include "hess/hessenberg.hpp"
#include "hess/linalg.hpp"
#include "hess/qpoly.hpp"
#include "hess/symfunc.hpp"

namespace hess {

struct XYMonomial {
  std::vector<int> x;  // exponents of x_1..x_n
  int y = 0;           // k for a factor y_k, 0 for none

  static XYMonomial one(int n) { return {std::vector<int>(n, 0), 0}; }
  static XYMonomial x_var(int n, int i, int e = 1);
  static XYMonomial y_var(int n, int k);

  int n() const { return static_cast<int>(x.size()); }
  int x_degree() const;
  // "x_1^2*x_3*y_2", "1"
  std::string to_string() const;
  auto operator<=>(const XYMonomial&) const = default;
};

class XYElement {
 public:
  using Terms = std::map<XYMonomial, mpz_class>;

  XYElement() = default;
  static XYElement monomial(const XYMonomial& m, const mpz_class& c = 1);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  mpz_class coefficient(const XYMonomial& m) const;
  void add_term(const XYMonomial& m, const mpz_class& c);

  XYElement& operator+=(const XYElement& o);
  XYElement& operator-=(const XYElement& o);
  XYElement& operator*=(const mpz_class& c);
  friend XYElement operator+(XYElement a, const XYElement& b) { return a += b; }
  friend XYElement operator-(XYElement a, const XYElement& b) { return a -= b; }
  friend XYElement operator*(const mpz_class& c, XYElement a) { return a *= c; }
  bool operator==(const XYElement&) const = default;

  // "x_1 - x_2 - y_1 - y_2": y-free terms first, then by y index, deglex
  // inside; "0" for zero
  std::string to_string() const;

 private:
  Terms terms_;
};

enum class BasisLabel { B1, B2, B3, Nh, TransposeB1, TransposeB2, TransposeB3 };
std::string_view to_string(BasisLabel l);

struct BasisSet {
  BasisLabel label = BasisLabel::B1;
  HessenbergFunction h;
  int y_degree = 0;  // q-degree of a y factor in this presentation
  std::vector<XYElement> elements;

  std::size_t size() const { return elements.size(); }
  // q-degree of element i (its terms are homogeneous)
  int degree_of(std::size_t i) const;
};

// B1: staircase x-monomials without the factor x_1...x_{h(1)}, deglex.
// B2/B3: x-parts x_2^{<=0} ... x_n^{<=n-2} without the factor
// x_{h(1)+1}...x_n, in deglex order of the x-part; inside a group the y order
// is y_2, ..., y_{n-1}, y_1 (B2) and y_2-y_1, ..., y_n-y_1 (B3).
// FormMismatch unless h = (h(1), n, ..., n).
BasisSet basis_B1(const HessenbergFunction& h);
BasisSet basis_B2(const HessenbergFunction& h);
BasisSet basis_B3(const HessenbergFunction& h);

struct TransposeBases {
  BasisSet b1, b2, b3;
};
// the three sets above under x_i <-> x_{n+1-i}, with m in place of h(1);
// FormMismatch unless h = ((n-1)^{n-m}, n^m)
TransposeBases basis_transpose(const HessenbergFunction& h);

// x^i with 0 <= i_k <= h(k) - k, deglex
BasisSet basis_nilpotent(const HessenbergFunction& h);

// Z[x,y]/I for one of the two special forms. Objects with the same (h, form)
// share one cache of per-degree relation data; all methods are thread-safe.
class QuotientRing {
 public:
  // FormMismatch if h lacks the requested form
  QuotientRing(const HessenbergFunction& h, Form form);

  const HessenbergFunction& h() const { return h_; }
  Form form() const { return form_; }
  int n() const { return h_.n(); }
  int parameter() const { return param_; }  // h(1), resp. m
  int y_degree() const { return param_ - 1; }
  int degree(const XYMonomial& m) const;

  // B1 then B2 monomials (transposed for the transpose form)
  const std::vector<XYMonomial>& standard_monomials() const { return standard_; }
  // the unique combination of B1∪B2 monomials equal to e modulo I
  XYElement normal_form(const XYElement& e) const;
  XYElement multiply(const XYElement& a, const XYElement& b) const;
  bool is_zero(const XYElement& e) const { return normal_form(e).is_zero(); }

  struct Impl;

 private:
  HessenbergFunction h_;
  Form form_;
  int param_ = 0;
  std::shared_ptr<Impl> core_;  // one-row frame, shared per (n, parameter)
  std::vector<XYMonomial> standard_;
};

// one-row form; FormMismatch otherwise
XYElement normal_form(const XYElement& e, const HessenbergFunction& h);

// coefficients of a normal form against an ordered list of basis monomials
std::vector<mpz_class> coordinates(const XYElement& normal, const std::vector<XYMonomial>& basis);

struct TransitionBlock {
  int degree = 0;                       // cohomological, even
  std::vector<XYMonomial> row_labels;   // B1 then B2 of this degree
  std::vector<XYElement> column_labels; // B1 then B3 of this degree
  MatZ matrix;                          // column j = coordinates of column_labels[j]
};

// one block per degree carrying basis elements; FormMismatch
std::vector<TransitionBlock> transition_blocks(const HessenbergFunction& h);
// same for the transpose form and its bases
std::vector<TransitionBlock> transition_blocks_transpose(const HessenbergFunction& h);

// NotSquare unless the matrix is square
mpz_class block_determinant(const TransitionBlock& b);
// |det| == 1
bool check_unimodular(const TransitionBlock& b);

// trivial multiplicities from B1, standard ones from the x-parts of B3
DecompositionCounts decomposition_counts(const HessenbergFunction& h);

struct OrbitPartition {
  std::vector<std::vector<XYMonomial>> orbits;  // {x^l y_1, ..., x^l y_n}
  std::vector<XYMonomial> fixed;                // pure-x monomials from B1
  int rank = 0;                                 // rank of the union under normal_form
};
// FormMismatch; DegenerateForm if h(1) = n
OrbitPartition permutation_orbits(const HessenbergFunction& h);

// sum over elements of q^{degree}
QPolynomial degree_gf(const BasisSet& b);

// pointwise product of class_x / class_y; the one-row y classes when h has
// that form, the transpose ones otherwise. FormMismatch for general h.
GkmClass monomial_to_gkm(const XYMonomial& m, const HessenbergFunction& h);
GkmClass monomial_to_gkm(const XYMonomial& m, const HessenbergFunction& h, Form form);
GkmClass element_to_gkm(const XYElement& e, const HessenbergFunction& h, Form form);

// x_i <-> x_{n+1-i}, y untouched
XYMonomial mirrored(const XYMonomial& m);
XYElement mirrored(const XYElement& e);

}  // namespace hess
