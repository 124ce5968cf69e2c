#pragma once

#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace hess {

class HessenbergFunction {
 public:
  // validating constructor; throws EmptyInput, NotWeaklyIncreasing,
  // BelowDiagonal or OutOfRange
  static HessenbergFunction from_values(std::vector<int> values);

  int n() const { return static_cast<int>(values_.size()); }
  int operator()(int i) const { return values_[i - 1]; }
  const std::vector<int>& values() const { return values_; }
  // "(2,3,3)"
  std::string to_string() const;

  auto operator<=>(const HessenbergFunction&) const = default;

 private:
  std::vector<int> values_;
};

inline HessenbergFunction new_hessenberg(std::vector<int> values) {
  return HessenbergFunction::from_values(std::move(values));
}

HessenbergFunction transpose(const HessenbergFunction& h);

// Which of the two special shapes h has; both may hold at once.
struct FormTag {
  std::optional<int> one_row;    // h(1) when h = (h(1), n, ..., n)
  std::optional<int> transpose;  // m when h = ((n-1)^{n-m}, n^m)

  bool is_one_row() const { return one_row.has_value(); }
  bool is_transpose() const { return transpose.has_value(); }
  bool is_both() const { return is_one_row() && is_transpose(); }
  bool is_general() const { return !is_one_row() && !is_transpose(); }
  std::string to_string() const;
};

FormTag classify_form(const HessenbergFunction& h);
HessenbergFunction one_row_form(int n, int h1);
HessenbergFunction transpose_form(int n, int m);

// Strict order i < j iff h(i) < j.
class PosetPh {
 public:
  int n() const { return n_; }
  bool less(int i, int j) const { return less_[(i - 1) * n_ + (j - 1)] != 0; }
  bool comparable(int i, int j) const { return less(i, j) || less(j, i); }
  const std::set<std::pair<int, int>>& relations() const { return relations_; }

  friend PosetPh poset_of(const HessenbergFunction& h);
  friend PosetPh antichain(int n);

 private:
  int n_ = 0;
  std::vector<char> less_;
  std::set<std::pair<int, int>> relations_;
};

PosetPh poset_of(const HessenbergFunction& h);
PosetPh antichain(int n);

// Simple graph on [n]; edges stored as (i, j) with i < j.
struct Graph {
  int n = 0;
  std::set<std::pair<int, int>> edges;
  bool adjacent(int i, int j) const {
    return edges.count(i < j ? std::make_pair(i, j) : std::make_pair(j, i)) > 0;
  }
};
using IncGraph = Graph;

IncGraph inc_graph(const PosetPh& p);
std::vector<int> box_counts(const HessenbergFunction& h);
// pairs (j, i) with j < i <= h(j)
std::vector<std::pair<int, int>> gkm_pairs(const HessenbergFunction& h);
// every Hessenberg function of length n, lexicographic
std::vector<HessenbergFunction> all_hessenberg_functions(int n);
HessenbergFunction parse_hessenberg(const std::string& comma_list);

}  // namespace hess
