#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <vector>

namespace hess {

// Permutation of [n] in one-line notation, w(i) = one_line[i-1].
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> one_line);
  static Permutation identity(int n);
  // right multiplication by the transposition of positions a and b
  Permutation swapped_positions(int a, int b) const;
  // the transposition (a b) as a permutation of [n]
  static Permutation transposition(int n, int a, int b);

  int n() const { return static_cast<int>(w_.size()); }
  int operator()(int i) const { return w_[i - 1]; }
  const std::vector<int>& one_line() const { return w_; }

  // (u * v)(i) = u(v(i))
  Permutation operator*(const Permutation& v) const;
  Permutation inverse() const;
  // "213" when n <= 9, else "2,1,3,..."
  std::string to_string() const;

  auto operator<=>(const Permutation&) const = default;

 private:
  std::vector<int> w_;
};

// All permutations of [n] in lexicographic one-line order.
std::vector<Permutation> all_permutations(int n);
// Position of w in all_permutations(w.n()).
std::size_t lex_rank(const Permutation& w);
std::size_t factorial(int n);
Permutation parse_permutation(const std::string& s);

}  // namespace hess
