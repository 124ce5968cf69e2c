#pragma once

// Exact linear algebra: sparse fraction-free echelon forms over Z (int64 fast
// path, GMP fallback on overflow) and small dense helpers over Z and Q.

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <utility>
#include <vector>

namespace hess {

template <class Int>
using SparseRow = std::vector<std::pair<int, Int>>;  // sorted by column, no zeros
using SparseRow64 = SparseRow<std::int64_t>;
using SparseRowZ = SparseRow<mpz_class>;

// Incremental semi-echelon basis of a row space; rank and membership are exact.
class ExactEchelon {
 public:
  explicit ExactEchelon(int columns);
  ExactEchelon(const ExactEchelon& o);
  ExactEchelon& operator=(const ExactEchelon& o);
  ExactEchelon(ExactEchelon&&) noexcept;
  ExactEchelon& operator=(ExactEchelon&&) noexcept;
  ~ExactEchelon();

  // true if the row was independent of the current basis
  bool insert(const SparseRow64& row);
  bool insert(const SparseRowZ& row);
  bool in_span(const SparseRow64& row) const;
  bool in_span(const SparseRowZ& row) const;
  int rank() const;
  int columns() const { return columns_; }
  bool uses_bignum() const;
  // current basis, one row per pivot, in insertion order
  std::vector<SparseRowZ> basis() const;

 private:
  struct Small;
  struct Big;
  void promote();
  int columns_;
  std::unique_ptr<Small> small_;
  std::unique_ptr<Big> big_;
};

// Integer basis of {x : row.x = 0 for all rows}; vectors are primitive.
std::vector<SparseRowZ> nullspace(int columns, const std::vector<SparseRow64>& rows);

using MatZ = std::vector<std::vector<mpz_class>>;
using MatQ = std::vector<std::vector<mpq_class>>;

// Bareiss elimination; throws NotSquare
mpz_class determinant(const MatZ& m);
int rank(const MatZ& m);

struct Rref {
  MatQ rows;                // nonzero rows only, leading entry 1
  std::vector<int> pivots;  // pivot column of each row
};
// Gauss-Jordan over Q. Columns are eliminated in the order given by
// column_order (all columns, a permutation); pivots are chosen in that order.
Rref rref(const MatQ& m, const std::vector<int>& column_order);
Rref rref(const MatQ& m);

}  // namespace hess
