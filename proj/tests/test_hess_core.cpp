#include <doctest.h>

#include "hess/error.hpp"
#include "hess/hessenberg.hpp"
#include "oracles.hpp"

using namespace hess;

namespace {
ErrorCode code_of(std::vector<int> v) {
  try {
    new_hessenberg(std::move(v));
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::Internal;
}
}  // namespace

TEST_CASE("validation of Hessenberg functions") {
  CHECK_NOTHROW(new_hessenberg({2, 3, 3}));
  CHECK_NOTHROW(new_hessenberg({1, 2, 3}));
  CHECK(code_of({2, 1, 3}) == ErrorCode::NotWeaklyIncreasing);
  CHECK(code_of({1, 1, 3}) == ErrorCode::BelowDiagonal);
  CHECK(code_of({2, 4, 3}) == ErrorCode::OutOfRange);
  CHECK(code_of({}) == ErrorCode::EmptyInput);
  CHECK(parse_hessenberg("2,3,3") == new_hessenberg({2, 3, 3}));
  CHECK_THROWS_AS(parse_hessenberg("2,x,3"), Error);
}

TEST_CASE("transpose examples") {
  CHECK(transpose(new_hessenberg({3, 3, 3})).values() == std::vector<int>{3, 3, 3});
  CHECK(transpose(new_hessenberg({2, 3, 3})).values() == std::vector<int>{2, 3, 3});
  CHECK(transpose(new_hessenberg({2, 4, 4, 4})).values() == std::vector<int>{3, 3, 4, 4});
}

TEST_CASE("transpose agrees with the reflected Dyck path and is an involution") {
  for (int n = 1; n <= 7; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      auto t = transpose(h);
      CHECK(t.values() == oracle::reflect_dyck(h.values()));
      CHECK(transpose(t) == h);
    }
}

TEST_CASE("number of Hessenberg functions is Catalan") {
  const int catalan[] = {1, 1, 2, 5, 14, 42, 132, 429};
  for (int n = 1; n <= 7; ++n) CHECK(all_hessenberg_functions(n).size() == static_cast<std::size_t>(catalan[n]));
}

TEST_CASE("classify_form") {
  auto tag = classify_form(new_hessenberg({2, 3, 3}));
  CHECK(tag.one_row == 2);
  CHECK(tag.transpose == 2);
  auto full = classify_form(new_hessenberg({3, 3, 3}));
  CHECK(full.one_row == 3);
  CHECK(full.transpose == 3);
  CHECK(classify_form(new_hessenberg({2, 3, 4, 4})).is_general());
  CHECK(classify_form(new_hessenberg({3, 3, 4, 4})).transpose == 2);
  CHECK(!classify_form(new_hessenberg({3, 3, 4, 4})).is_one_row());
  CHECK(classify_form(new_hessenberg({1})).is_both());
}

TEST_CASE("one-row forms transpose to transpose forms with m = h(1)") {
  for (int n = 1; n <= 7; ++n)
    for (int h1 = 1; h1 <= n; ++h1) {
      auto h = one_row_form(n, h1);
      CHECK(classify_form(h).one_row == h1);
      auto t = classify_form(transpose(h));
      CHECK(t.transpose == h1);
      CHECK(transpose(h) == transpose_form(n, h1));
    }
  for (int n = 1; n <= 7; ++n)
    for (const auto& h : all_hessenberg_functions(n))
      if (auto tag = classify_form(h); tag.one_row) CHECK(classify_form(transpose(h)).transpose == *tag.one_row);
}

TEST_CASE("poset and incomparability graph") {
  CHECK(poset_of(new_hessenberg({2, 3, 3})).relations() == std::set<std::pair<int, int>>{{1, 3}});
  CHECK(poset_of(new_hessenberg({3, 3, 3})).relations().empty());
  CHECK(poset_of(new_hessenberg({4, 5, 5, 5, 5})).relations() == std::set<std::pair<int, int>>{{1, 5}});
  auto g = inc_graph(poset_of(new_hessenberg({4, 5, 5, 5, 5})));
  CHECK(g.edges.size() == 9);
  CHECK(!g.adjacent(1, 5));
  CHECK(g.adjacent(5, 2));
  CHECK(inc_graph(poset_of(new_hessenberg({3, 3, 3}))).edges.size() == 3);
  CHECK(inc_graph(poset_of(new_hessenberg({1, 2, 3}))).edges.empty());
}

TEST_CASE("poset properties over all h") {
  for (int n = 1; n <= 6; ++n)
    for (const auto& h : all_hessenberg_functions(n)) {
      auto p = poset_of(h);
      bool full = true;
      for (int v : h.values()) full = full && v == n;
      CHECK(p.relations().empty() == full);
      CHECK(inc_graph(p).edges.size() == static_cast<std::size_t>(n * (n - 1) / 2) - p.relations().size());
      int sum = 0;
      for (int b : box_counts(h)) {
        CHECK(b >= 0);
        sum += b;
      }
      CHECK(sum == static_cast<int>(gkm_pairs(h).size()));
      CHECK(sum == static_cast<int>(inc_graph(p).edges.size()));
    }
}

TEST_CASE("box counts") {
  CHECK(box_counts(new_hessenberg({2, 3, 3})) == std::vector<int>{1, 1, 0});
  CHECK(box_counts(new_hessenberg({1, 2, 3})) == std::vector<int>{0, 0, 0});
  CHECK(box_counts(new_hessenberg({3, 3, 3})) == std::vector<int>{2, 1, 0});
}
