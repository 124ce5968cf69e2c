#include <doctest.h>

#include <random>

#include "hess/error.hpp"
#include "hess/linalg.hpp"

using namespace hess;

namespace {
SparseRow64 dense_to_sparse(const std::vector<long>& v) {
  SparseRow64 r;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i]) r.emplace_back(static_cast<int>(i), v[i]);
  return r;
}
}  // namespace

TEST_CASE("echelon rank and membership") {
  ExactEchelon e(4);
  CHECK(e.insert(dense_to_sparse({1, 2, 0, 3})));
  CHECK(e.insert(dense_to_sparse({0, 1, 1, 0})));
  CHECK(!e.insert(dense_to_sparse({2, 5, 1, 6})));
  CHECK(e.rank() == 2);
  CHECK(e.in_span(dense_to_sparse({3, 7, 1, 9})));
  CHECK(!e.in_span(dense_to_sparse({0, 0, 0, 1})));
}

TEST_CASE("echelon falls back to big integers and agrees with the dense rank") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> dist(-(1L << 40), 1L << 40);
  MatZ dense;
  ExactEchelon e(6);
  for (int r = 0; r < 5; ++r) {
    std::vector<long> v(6);
    for (auto& x : v) x = dist(rng);
    dense.emplace_back(v.begin(), v.end());
    e.insert(dense_to_sparse(v));
  }
  CHECK(e.uses_bignum());
  CHECK(e.rank() == rank(dense));
  CHECK(e.rank() == 5);
}

TEST_CASE("Bareiss determinant") {
  MatZ m{{1, 0, 1}, {0, 1, -1}, {0, -1, -2}};
  CHECK(determinant(m) == -3);
  MatZ swap{{0, 1}, {1, 0}};
  CHECK(determinant(swap) == -1);
  MatZ sing{{1, 2}, {2, 4}};
  CHECK(determinant(sing) == 0);
  CHECK_THROWS_AS(determinant(MatZ{{1, 2}}), Error);
}

TEST_CASE("nullspace vectors are annihilated and span the kernel") {
  std::vector<SparseRow64> rows{dense_to_sparse({1, 1, 0, 0, -1}), dense_to_sparse({0, 2, 3, 0, 0})};
  auto ker = nullspace(5, rows);
  CHECK(ker.size() == 3);
  for (auto& v : ker)
    for (auto& r : rows) {
      mpz_class dot = 0;
      for (auto& [c, x] : r)
        for (auto& [c2, y] : v)
          if (c == c2) dot += x * y;
      CHECK(dot == 0);
    }
  ExactEchelon e(5);
  for (auto& v : ker) CHECK(e.insert(v));
}

TEST_CASE("rref over Q with a preferred column order") {
  MatQ m{{1, 2, 3}, {2, 4, 7}};
  Rref r = rref(m, {2, 1, 0});
  CHECK(r.pivots == std::vector<int>{2, 1});
  CHECK(r.rows[0][2] == 1);
  CHECK(r.rows[1][2] == 0);
}
