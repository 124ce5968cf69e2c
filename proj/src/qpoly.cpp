#include "hess/qpoly.hpp"

#include <sstream>

namespace hess {

QPolynomial::QPolynomial(long c) {
  if (c != 0) coeffs_.emplace(0, mpz_class(c));
}

QPolynomial QPolynomial::monomial(int exponent, const mpz_class& c) {
  QPolynomial p;
  p.add_term(exponent, c);
  return p;
}

QPolynomial QPolynomial::q_integer(int k) {
  QPolynomial p;
  for (int i = 0; i < k; ++i) p.add_term(i, 1);
  return p;
}

QPolynomial QPolynomial::q_factorial(int k) {
  QPolynomial p(1);
  for (int i = 2; i <= k; ++i) p *= q_integer(i);
  return p;
}

mpz_class QPolynomial::coefficient(int e) const {
  auto it = coeffs_.find(e);
  return it == coeffs_.end() ? mpz_class(0) : it->second;
}

int QPolynomial::degree() const { return coeffs_.empty() ? -1 : coeffs_.rbegin()->first; }
int QPolynomial::min_degree() const { return coeffs_.empty() ? -1 : coeffs_.begin()->first; }

mpz_class QPolynomial::at_one() const {
  mpz_class s = 0;
  for (const auto& [e, c] : coeffs_) s += c;
  return s;
}

bool QPolynomial::is_palindromic() const {
  if (coeffs_.empty()) return true;
  int lo = min_degree(), hi = degree();
  for (const auto& [e, c] : coeffs_)
    if (coefficient(lo + hi - e) != c) return false;
  return true;
}

std::optional<int> QPolynomial::first_negative() const {
  for (const auto& [e, c] : coeffs_)
    if (sgn(c) < 0) return e;
  return std::nullopt;
}

void QPolynomial::add_term(int e, const mpz_class& c) {
  if (c == 0) return;
  auto [it, inserted] = coeffs_.emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) coeffs_.erase(it);
  }
}

QPolynomial& QPolynomial::operator+=(const QPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, c);
  return *this;
}

QPolynomial& QPolynomial::operator-=(const QPolynomial& o) {
  for (const auto& [e, c] : o.coeffs_) add_term(e, -c);
  return *this;
}

QPolynomial operator*(const QPolynomial& a, const QPolynomial& b) {
  QPolynomial r;
  for (const auto& [ea, ca] : a.coeffs_)
    for (const auto& [eb, cb] : b.coeffs_) r.add_term(ea + eb, ca * cb);
  return r;
}

QPolynomial& QPolynomial::operator*=(const QPolynomial& o) { return *this = *this * o; }

QPolynomial QPolynomial::operator-() const {
  QPolynomial r;
  for (const auto& [e, c] : coeffs_) r.add_term(e, -c);
  return r;
}

bool QPolynomial::operator==(const QPolynomial& o) const { return coeffs_ == o.coeffs_; }

namespace {
std::string render(const QPolynomial::Coeffs& coeffs, bool latex) {
  if (coeffs.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : coeffs) {
    mpz_class a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << "-";
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    if (a != 1 || e == 0) os << a.get_str();
    if (e >= 1) os << "q";
    if (e > 1) {
      if (latex)
        os << "^{" << e << "}";
      else
        os << "^" << e;
    }
    first = false;
  }
  return os.str();
}
}  // namespace

std::string QPolynomial::to_string() const { return render(coeffs_, false); }
std::string QPolynomial::to_latex() const { return render(coeffs_, true); }

}  // namespace hess
