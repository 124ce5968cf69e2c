#pragma once

#include <gmpxx.h>

#include <string>
#include <utility>
#include <vector>

#include "hess/hessenberg.hpp"
#include "hess/poly.hpp"

namespace hess {

class Partition {
 public:
  Partition() = default;
  // InvalidPartition unless the parts are positive and weakly decreasing
  static Partition from_parts(std::vector<int> parts);
  static Partition column(int n);  // (1^n)
  static Partition hook(int n);    // (2, 1^{n-2}), n >= 2

  const std::vector<int>& parts() const { return parts_; }
  int size() const;
  int length() const { return static_cast<int>(parts_.size()); }
  int operator[](int i) const { return parts_[i]; }
  std::string to_string() const;

  auto operator<=>(const Partition&) const = default;

 private:
  std::vector<int> parts_;
};

Partition conjugate(const Partition& p);
// partitions of n, largest first: (n), (n-1,1), ...
std::vector<Partition> partitions_of(int n);
Partition parse_partition(const std::string& comma_list);

// Filling of a partition shape in French orientation: rows()[0] is the
// bottom (longest) row, "directly above" means one row higher, same column.
class Tableau {
 public:
  Tableau() = default;
  // ShapeMismatch unless each row length equals the matching part
  Tableau(Partition shape, std::vector<std::vector<int>> rows);
  static Tableau from_rows(std::vector<std::vector<int>> rows);
  static Tableau column(const std::vector<int>& bottom_to_top);

  const Partition& shape() const { return shape_; }
  const std::vector<std::vector<int>>& rows() const { return rows_; }
  int size() const { return shape_.size(); }
  // 1-based, row 1 is the bottom row
  int at(int row, int col) const { return rows_[row - 1][col - 1]; }
  // (row, col) of an entry, (0, 0) if absent
  std::pair<int, int> position(int entry) const;
  int row_of(int entry) const { return position(entry).first; }
  // bottom-to-top, left-to-right
  std::vector<int> reading_word() const;
  std::vector<int> column_entries(int col, bool top_to_bottom) const;
  bool is_permutation_filling() const;
  // rows drawn top first, one line each
  std::string to_string() const;

  bool operator==(const Tableau& o) const { return rows_ == o.rows_; }
  bool operator<(const Tableau& o) const { return reading_word() < o.reading_word(); }

 private:
  Partition shape_;
  std::vector<std::vector<int>> rows_;
};

bool is_p_tableau(const PosetPh& p, const Tableau& t);
bool is_p_tableau(const HessenbergFunction& h, const Tableau& t);
// ShapeMismatch when the filling does not have the given shape
bool is_p_tableau(const HessenbergFunction& h, const Partition& shape,
                  const std::vector<std::vector<int>>& rows);

// in lexicographic order of reading words
std::vector<Tableau> enumerate_p_tableaux(const PosetPh& p, const Partition& shape);
std::vector<Tableau> enumerate_p_tableaux(const HessenbergFunction& h, const Partition& shape);

struct InversionData {
  std::vector<std::pair<int, int>> pairs;  // (i, j), i < j, i strictly higher
  int count() const { return static_cast<int>(pairs.size()); }
};

InversionData inversions(const PosetPh& p, const Tableau& t);
InversionData inversions(const HessenbergFunction& h, const Tableau& t);

// rows increase rightward, columns increase upward
bool is_standard(const Tableau& t);
std::vector<Tableau> enumerate_syt(const Partition& shape);
mpz_class count_syt(const Partition& shape);
// standard tableau of shape (2,1^{n-2}) with bottom row (1,k); KOutOfRange
Tableau syt_with_bottom_pair(int n, int k);

// product over columns of (x_b - x_a) for entries a < b in the same column
Poly specht_polynomial(const Tableau& t);

// I_h = {(a,b) : 1 < a < b <= h(a)}
std::vector<std::pair<int, int>> potential_inversions(const HessenbergFunction& h);

}  // namespace hess
