#pragma once

// Sparse multivariate integer polynomials in at most 8 variables.
// Exponents are packed one byte per variable; coefficients are int64 with
// overflow detection (ErrorCode::Overflow).

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace hess {

inline constexpr int kMaxVars = 8;

class Monomial {
 public:
  constexpr Monomial() = default;
  // x_i^e, variables are 1-based
  static Monomial var(int i, int e = 1);
  static Monomial from_exponents(std::span<const int> exps);
  static constexpr Monomial from_bits(std::uint64_t bits) {
    Monomial m;
    m.bits_ = bits;
    return m;
  }

  int exponent(int i) const { return static_cast<int>((bits_ >> (8 * (i - 1))) & 0xff); }
  int degree() const;
  std::vector<int> exponents(int nvars) const;
  std::uint64_t bits() const { return bits_; }
  bool is_one() const { return bits_ == 0; }

  Monomial operator*(Monomial o) const;
  bool divides(Monomial o) const;
  // requires divides(o)
  Monomial quotient_of(Monomial o) const;
  // substitute x_i -> x_{perm[i-1]}
  Monomial renamed(std::span<const int> perm) const;
  Monomial with_exponent(int i, int e) const;

  // numeric order on the packed word = lex with x_8 > x_7 > ... > x_1
  auto operator<=>(const Monomial&) const = default;

 private:
  std::uint64_t bits_ = 0;
};

class Poly {
 public:
  using Coeff = std::int64_t;
  using Terms = std::map<Monomial, Coeff>;

  Poly() = default;
  Poly(Coeff c);  // NOLINT implicit constant
  static Poly var(int i) { return term(Monomial::var(i), 1); }
  static Poly term(Monomial m, Coeff c);
  // x_a - x_b
  static Poly binomial(int a, int b);

  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  Coeff coefficient(Monomial m) const;
  // max total degree, -1 for zero
  int degree() const;
  bool is_homogeneous() const;

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(Coeff c);
  void add_term(Monomial m, Coeff c);

  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(const Poly& a, const Poly& b);
  friend Poly operator*(Poly a, Coeff c) { return a *= c; }
  friend Poly operator*(Coeff c, Poly a) { return a *= c; }
  Poly operator-() const;
  bool operator==(const Poly&) const = default;

  // variable a replaced by variable b
  Poly substitute(int a, int b) const;
  // variable i replaced by variable perm[i-1]
  Poly renamed(std::span<const int> perm) const;
  Poly pow(int e) const;

  // "t_2 - t_1", "-x_1^2*x_3 + 3"; descending monomial order
  std::string to_string(char var = 't') const;

 private:
  Terms terms_;
};

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b);
std::int64_t sub(std::int64_t a, std::int64_t b);
std::int64_t mul(std::int64_t a, std::int64_t b);
}  // namespace checked

}  // namespace hess
