#include "hess/poly.hpp"

#include <sstream>

#include "hess/error.hpp"

namespace hess {

namespace checked {
std::int64_t add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 addition");
  return r;
}
std::int64_t sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 subtraction");
  return r;
}
std::int64_t mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorCode::Overflow, "int64 multiplication");
  return r;
}
}  // namespace checked

namespace {
constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;
}

Monomial Monomial::var(int i, int e) {
  if (i < 1 || i > kMaxVars) fail(ErrorCode::OutOfRange, "variable index " + std::to_string(i));
  if (e < 0 || e > 127) fail(ErrorCode::OutOfRange, "exponent " + std::to_string(e));
  return from_bits(static_cast<std::uint64_t>(e) << (8 * (i - 1)));
}

Monomial Monomial::from_exponents(std::span<const int> exps) {
  if (exps.size() > static_cast<std::size_t>(kMaxVars))
    fail(ErrorCode::OutOfRange, "too many variables");
  Monomial m;
  for (std::size_t i = 0; i < exps.size(); ++i) m = m * var(static_cast<int>(i) + 1, exps[i]);
  return m;
}

int Monomial::degree() const {
  int d = 0;
  for (int i = 1; i <= kMaxVars; ++i) d += exponent(i);
  return d;
}

std::vector<int> Monomial::exponents(int nvars) const {
  std::vector<int> out(nvars);
  for (int i = 1; i <= nvars; ++i) out[i - 1] = exponent(i);
  return out;
}

Monomial Monomial::operator*(Monomial o) const {
  // each byte stays below 128, so the sum cannot carry across bytes
  if ((bits_ | o.bits_) & kHighBits) fail(ErrorCode::Overflow, "monomial exponent");
  return from_bits(bits_ + o.bits_);
}

bool Monomial::divides(Monomial o) const {
  for (int i = 1; i <= kMaxVars; ++i)
    if (exponent(i) > o.exponent(i)) return false;
  return true;
}

Monomial Monomial::quotient_of(Monomial o) const { return from_bits(o.bits_ - bits_); }

Monomial Monomial::renamed(std::span<const int> perm) const {
  Monomial m;
  for (std::size_t i = 0; i < perm.size(); ++i) {
    int e = exponent(static_cast<int>(i) + 1);
    if (e) m = m * var(perm[i], e);
  }
  return m;
}

Monomial Monomial::with_exponent(int i, int e) const {
  std::uint64_t mask = 0xffULL << (8 * (i - 1));
  return from_bits((bits_ & ~mask) | (static_cast<std::uint64_t>(e) << (8 * (i - 1))));
}

Poly::Poly(Coeff c) {
  if (c != 0) terms_.emplace(Monomial{}, c);
}

Poly Poly::term(Monomial m, Coeff c) {
  Poly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

Poly Poly::binomial(int a, int b) {
  Poly p = var(a);
  p -= var(b);
  return p;
}

Poly::Coeff Poly::coefficient(Monomial m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? 0 : it->second;
}

int Poly::degree() const {
  int d = -1;
  for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
  return d;
}

bool Poly::is_homogeneous() const {
  if (terms_.empty()) return true;
  int d = terms_.begin()->first.degree();
  for (const auto& [m, c] : terms_)
    if (m.degree() != d) return false;
  return true;
}

void Poly::add_term(Monomial m, Coeff c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second = checked::add(it->second, c);
    if (it->second == 0) terms_.erase(it);
  }
}

Poly& Poly::operator+=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, checked::mul(c, -1));
  return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
  Poly r;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) r.add_term(ma * mb, checked::mul(ca, cb));
  return r;
}

Poly& Poly::operator*=(const Poly& o) { return *this = *this * o; }

Poly& Poly::operator*=(Coeff c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, v] : terms_) v = checked::mul(v, c);
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  r *= -1;
  return r;
}

Poly Poly::substitute(int a, int b) const {
  Poly r;
  for (const auto& [m, c] : terms_) {
    int e = m.exponent(a);
    Monomial mm = m.with_exponent(a, 0) * Monomial::var(b, e);
    r.add_term(mm, c);
  }
  return r;
}

Poly Poly::renamed(std::span<const int> perm) const {
  Poly r;
  for (const auto& [m, c] : terms_) r.add_term(m.renamed(perm), c);
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(1);
  for (int i = 0; i < e; ++i) r *= *this;
  return r;
}

std::string Poly::to_string(char var) const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    auto [m, c] = *it;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    std::int64_t a = c < 0 ? -c : c;
    bool one = m.is_one();
    if (a != 1 || one) os << a;
    bool need_star = a != 1 && !one;
    for (int i = 1; i <= kMaxVars; ++i) {
      int e = m.exponent(i);
      if (!e) continue;
      if (need_star) os << "*";
      os << var << "_" << i;
      if (e > 1) os << "^" << e;
      need_star = true;
    }
    first = false;
  }
  return os.str();
}

}  // namespace hess
