#pragma once

#include <gmpxx.h>

#include <map>
#include <optional>
#include <string>

namespace hess {

// Univariate polynomial in q with exact integer coefficients.
class QPolynomial {
 public:
  using Coeffs = std::map<int, mpz_class>;

  QPolynomial() = default;
  QPolynomial(long c);  // NOLINT implicit constant
  static QPolynomial monomial(int exponent, const mpz_class& c = 1);
  // k_q = 1 + q + ... + q^{k-1}; 0_q = 0
  static QPolynomial q_integer(int k);
  // k_q! = 1_q 2_q ... k_q
  static QPolynomial q_factorial(int k);

  const Coeffs& coefficients() const { return coeffs_; }
  mpz_class coefficient(int e) const;
  int degree() const;  // -1 for zero
  int min_degree() const;
  bool is_zero() const { return coeffs_.empty(); }
  mpz_class at_one() const;
  bool is_palindromic() const;
  // exponent of the first negative coefficient, if any
  std::optional<int> first_negative() const;

  void add_term(int e, const mpz_class& c);
  QPolynomial& operator+=(const QPolynomial& o);
  QPolynomial& operator-=(const QPolynomial& o);
  QPolynomial& operator*=(const QPolynomial& o);
  friend QPolynomial operator+(QPolynomial a, const QPolynomial& b) { return a += b; }
  friend QPolynomial operator-(QPolynomial a, const QPolynomial& b) { return a -= b; }
  friend QPolynomial operator*(const QPolynomial& a, const QPolynomial& b);
  QPolynomial operator-() const;
  bool operator==(const QPolynomial& o) const;

  // "1 + 4q + q^2"
  std::string to_string() const;
  // "1 + 4q + q^{2}"
  std::string to_latex() const;

 private:
  Coeffs coeffs_;
};

}  // namespace hess
