#include "hess/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "hess/error.hpp"

namespace hess {

Permutation::Permutation(std::vector<int> one_line) : w_(std::move(one_line)) {
  std::vector<char> seen(w_.size() + 1, 0);
  for (int v : w_) {
    if (v < 1 || v > n() || seen[v]) fail(ErrorCode::OutOfRange, "not a permutation");
    seen[v] = 1;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  return Permutation(std::move(w));
}

Permutation Permutation::swapped_positions(int a, int b) const {
  Permutation r = *this;
  std::swap(r.w_[a - 1], r.w_[b - 1]);
  return r;
}

Permutation Permutation::transposition(int n, int a, int b) {
  return identity(n).swapped_positions(a, b);
}

Permutation Permutation::operator*(const Permutation& v) const {
  if (v.n() != n()) fail(ErrorCode::SizeMismatch, "permutation sizes differ");
  std::vector<int> r(w_.size());
  for (int i = 1; i <= n(); ++i) r[i - 1] = (*this)(v(i));
  Permutation p;
  p.w_ = std::move(r);
  return p;
}

Permutation Permutation::inverse() const {
  std::vector<int> r(w_.size());
  for (int i = 1; i <= n(); ++i) r[w_[i - 1] - 1] = i;
  Permutation p;
  p.w_ = std::move(r);
  return p;
}

std::string Permutation::to_string() const {
  std::ostringstream os;
  for (std::size_t i = 0; i < w_.size(); ++i) {
    if (n() > 9 && i) os << ",";
    os << w_[i];
  }
  return os.str();
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::vector<Permutation> all_permutations(int n) {
  std::vector<Permutation> out;
  out.reserve(factorial(n));
  std::vector<int> w(n);
  std::iota(w.begin(), w.end(), 1);
  do {
    out.emplace_back(w);
  } while (std::next_permutation(w.begin(), w.end()));
  return out;
}

std::size_t lex_rank(const Permutation& w) {
  // Lehmer code
  const int n = w.n();
  std::size_t rank = 0;
  for (int i = 1; i <= n; ++i) {
    int smaller = 0;
    for (int j = i + 1; j <= n; ++j)
      if (w(j) < w(i)) ++smaller;
    rank += static_cast<std::size_t>(smaller) * factorial(n - i);
  }
  return rank;
}

Permutation parse_permutation(const std::string& s) {
  std::vector<int> w;
  if (s.find(',') != std::string::npos) {
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) w.push_back(std::stoi(tok));
  } else {
    for (char c : s) {
      if (c < '1' || c > '9') fail(ErrorCode::ParseError, "bad permutation '" + s + "'");
      w.push_back(c - '0');
    }
  }
  return Permutation(std::move(w));
}

}  // namespace hess
