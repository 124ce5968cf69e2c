#include <doctest.h>

#include <random>
#include <set>

#include "hess/cohomology.hpp"
#include "hess/error.hpp"
#include "hess/symfunc.hpp"
#include "oracles.hpp"

using namespace hess;

namespace {

const auto h233 = new_hessenberg({2, 3, 3});

XYMonomial xm(std::vector<int> x, int y = 0) { return XYMonomial{std::move(x), y}; }
XYElement el(std::vector<int> x, int y = 0, long c = 1) { return XYElement::monomial(xm(std::move(x), y), c); }

using ElemSet = std::set<std::string>;
ElemSet as_set(const BasisSet& b) {
  ElemSet s;
  for (const auto& e : b.elements) s.insert(e.to_string());
  return s;
}
ElemSet set_of(std::initializer_list<XYElement> es) {
  ElemSet s;
  for (const auto& e : es) s.insert(e.to_string());
  return s;
}

long fact(int n) { return n <= 1 ? 1 : n * fact(n - 1); }

std::vector<std::vector<int>> exponent_vectors(int n, int d) {
  std::vector<std::vector<int>> out;
  std::vector<int> cur(n, 0);
  std::function<void(int, int)> rec = [&](int i, int left) {
    if (i == n - 1) {
      cur[i] = left;
      out.push_back(cur);
      return;
    }
    for (int e = 0; e <= left; ++e) {
      cur[i] = e;
      rec(i + 1, left - e);
    }
  };
  if (n > 0) rec(0, d);
  return out;
}

// random homogeneous element of q-degree d in the given presentation
XYElement random_element(std::mt19937& rng, int n, int ydeg, int d, int terms) {
  std::uniform_int_distribution<int> coef(-3, 3), yk(0, n);
  XYElement e;
  for (int t = 0; t < terms; ++t) {
    int k = yk(rng);
    int xd = d - (k ? ydeg : 0);
    if (xd < 0) k = 0, xd = d;
    auto vs = exponent_vectors(n, xd);
    std::uniform_int_distribution<std::size_t> pick(0, vs.size() - 1);
    e.add_term(xm(vs[pick(rng)], k), coef(rng));
  }
  return e;
}

struct FormCase {
  HessenbergFunction h;
  Form form;
  int param;
};

std::vector<FormCase> form_cases(int n) {
  std::vector<FormCase> out;
  for (int p = 1; p <= n; ++p) {
    out.push_back({one_row_form(n, p), Form::one_row, p});
    out.push_back({transpose_form(n, p), Form::transpose, p});
  }
  return out;
}

}  // namespace

TEST_CASE("bases for (2,3,3)") {
  CHECK(as_set(basis_B1(h233)) == set_of({el({0, 0, 0}), el({1, 0, 0}), el({2, 0, 0}), el({0, 1, 0})}));
  CHECK(as_set(basis_B2(h233)) == set_of({el({0, 0, 0}, 1), el({0, 0, 0}, 2)}));
  CHECK(as_set(basis_B3(h233)) == set_of({el({0, 0, 0}, 2) - el({0, 0, 0}, 1),
                                                       el({0, 0, 0}, 3) - el({0, 0, 0}, 1)}));
  auto t = basis_transpose(h233);
  CHECK(as_set(t.b1) == set_of({el({0, 0, 0}), el({0, 1, 0}), el({0, 0, 1}), el({0, 0, 2})}));
  CHECK(t.b1.label == BasisLabel::TransposeB1);
  CHECK(basis_transpose(new_hessenberg({3, 3, 3})).b3.size() == 0);
  CHECK(basis_transpose(transpose_form(4, 2)).b1.size() == 12);
}

TEST_CASE("nilpotent bases") {
  CHECK(as_set(basis_nilpotent(h233)) ==
        set_of({el({0, 0, 0}), el({1, 0, 0}), el({0, 1, 0}), el({1, 1, 0})}));
  CHECK(basis_nilpotent(new_hessenberg({1, 2, 3})).size() == 1);
  CHECK(basis_nilpotent(new_hessenberg({4, 4, 4, 4})).size() == 24);
}

TEST_CASE("form preconditions") {
  auto general = new_hessenberg({2, 3, 4, 4});
  CHECK_THROWS_AS(basis_B1(general), Error);
  try {
    basis_B3(general);
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FormMismatch);
  }
  try {
    basis_transpose(new_hessenberg({1, 3, 3}));
    FAIL("expected FormMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::FormMismatch);
  }
  CHECK_THROWS_AS(QuotientRing(general, Form::one_row), Error);
  CHECK_THROWS_AS(transition_blocks(general), Error);
}

TEST_CASE("basis census for n <= 7") {
  for (int n = 1; n <= 7; ++n) {
    for (int p = 1; p <= n; ++p) {
      auto h = one_row_form(n, p);
      CHECK(basis_B1(h).size() == static_cast<std::size_t>(p * fact(n - 1)));
      CHECK(basis_B2(h).size() == static_cast<std::size_t>((n - p) * fact(n - 1)));
      CHECK(basis_B3(h).size() == static_cast<std::size_t>((n - p) * fact(n - 1)));
      auto t = basis_transpose(transpose_form(n, p));
      CHECK(t.b1.size() == static_cast<std::size_t>(p * fact(n - 1)));
      CHECK(t.b3.size() == static_cast<std::size_t>((n - p) * fact(n - 1)));
    }
    if (n <= 6)
      for (const auto& h : all_hessenberg_functions(n)) {
        long prod = 1;
        for (int k = 1; k <= n; ++k) prod *= h(k) - k + 1;
        CHECK(basis_nilpotent(h).size() == static_cast<std::size_t>(prod));
      }
  }
}

TEST_CASE("B1 and B2 against their defining constraints") {
  // independent enumeration over the full box [0, n-1]^n
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p <= n; ++p) {
      auto h = one_row_form(n, p);
      ElemSet b1, b2;
      std::vector<int> x(n, 0);
      std::function<void(int)> rec = [&](int i) {
        if (i == n) {
          bool stair = true, sector = x[0] == 0, all_low = true, all_high = true;
          for (int j = 1; j <= n; ++j) {
            stair = stair && x[j - 1] <= n - j;
            if (j >= 2) sector = sector && x[j - 1] <= j - 2;
            if (j <= p) all_low = all_low && x[j - 1] > 0;
            if (j > p) all_high = all_high && x[j - 1] > 0;
          }
          if (stair && !all_low) b1.insert(el(x).to_string());
          if (sector && !all_high)
            for (int k = 1; k <= n - 1; ++k) b2.insert(el(x, k).to_string());
          return;
        }
        for (int e = 0; e < n; ++e) {
          x[i] = e;
          rec(i + 1);
        }
        x[i] = 0;
      };
      rec(0);
      CHECK(as_set(basis_B1(h)) == b1);
      CHECK(as_set(basis_B2(h)) == b2);
    }
}

TEST_CASE("degree generating functions") {
  using oracle::q_fact;
  using oracle::q_int;
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p <= n; ++p) {
      auto h = one_row_form(n, p);
      CHECK(degree_gf(basis_B1(h)) == q_int(p) * q_fact(n - 1));
      QPolynomial b3 = QPolynomial(n - 1) * QPolynomial::monomial(p - 1) * q_int(n - p) * q_fact(n - 2);
      CHECK(degree_gf(basis_B3(h)) == b3);
      CHECK(degree_gf(basis_B2(h)) == b3);
    }
  CHECK(degree_gf(basis_B1(h233)).to_string() == "1 + 2q + q^2");
  CHECK(degree_gf(basis_B3(h233)).to_string() == "2q");
  CHECK(degree_gf(basis_nilpotent(new_hessenberg({1, 2, 3}))) == QPolynomial(1));
}

TEST_CASE("normal form examples") {
  CHECK(normal_form(el({1, 0, 0}, 2), h233).is_zero());
  auto y3 = normal_form(el({0, 0, 0}, 3), h233);
  CHECK(y3 == el({1, 0, 0}) - el({0, 1, 0}) - el({0, 0, 0}, 1) - el({0, 0, 0}, 2));
  CHECK(y3.to_string() == "x_1 - x_2 - y_1 - y_2");
  CHECK(normal_form(el({0, 0, 0}), h233) == el({0, 0, 0}));
  // e_1 and e_3 vanish
  CHECK(normal_form(el({1, 0, 0}) + el({0, 1, 0}) + el({0, 0, 1}), h233).is_zero());
  CHECK(normal_form(el({1, 1, 1}), h233).is_zero());
}

TEST_CASE("normal form is idempotent and lands in B1 ∪ B2") {
  std::mt19937 rng(7);
  for (int n = 2; n <= 5; ++n)
    for (const auto& fc : form_cases(n)) {
      QuotientRing ring(fc.h, fc.form);
      std::set<XYMonomial> std_set(ring.standard_monomials().begin(), ring.standard_monomials().end());
      CHECK(std_set.size() == static_cast<std::size_t>(fact(n)));
      for (int d = 0; d <= 4; ++d) {
        auto e = random_element(rng, n, ring.y_degree(), d, 4);
        auto nf = ring.normal_form(e);
        CHECK(ring.normal_form(nf) == nf);
        for (const auto& [m, c] : nf.terms()) CHECK(std_set.count(m) == 1);
      }
      // standard monomials are fixed points
      for (const auto& m : ring.standard_monomials())
        CHECK(ring.normal_form(XYElement::monomial(m)) == XYElement::monomial(m));
    }
}

TEST_CASE("normal form agrees with the GKM model for n <= 4") {
  std::mt19937 rng(11);
  for (int n = 2; n <= 4; ++n)
    for (const auto& fc : form_cases(n)) {
      CAPTURE(fc.h.to_string());
      CAPTURE(to_string(fc.form));
      QuotientRing ring(fc.h, fc.form);
      GkmRankModel model(fc.h, RankRoute::generators);
      const int top = model.top_degree();
      for (int d = 0; d <= top; ++d) {
        for (int trial = 0; trial < 3; ++trial) {
          auto e = random_element(rng, n, ring.y_degree(), d, 3);
          auto nf = ring.normal_form(e);
          // e and its normal form agree modulo (t)
          CHECK(model.in_torus_ideal(element_to_gkm(e - nf, fc.h, fc.form)));
          // a nonzero normal form is not in (t): B1 ∪ B2 is independent
          CHECK(model.in_torus_ideal(element_to_gkm(nf, fc.h, fc.form)) == nf.is_zero());
        }
      }
    }
}

TEST_CASE("products agree with the GKM model for n <= 4") {
  std::mt19937 rng(3);
  for (int n = 2; n <= 4; ++n)
    for (const auto& fc : form_cases(n)) {
      QuotientRing ring(fc.h, fc.form);
      GkmRankModel model(fc.h, RankRoute::generators);
      for (int k = 1; k <= n; ++k) {
        auto yk = XYElement::monomial(XYMonomial::y_var(n, k));
        auto sq = ring.multiply(yk, yk);
        CHECK(model.in_torus_ideal(element_to_gkm(sq, fc.h, fc.form) -
                                   element_to_gkm(yk, fc.h, fc.form) * element_to_gkm(yk, fc.h, fc.form)));
        for (int k2 = 1; k2 <= n; ++k2)
          if (k2 != k) CHECK(ring.multiply(yk, XYElement::monomial(XYMonomial::y_var(n, k2))).is_zero());
      }
      for (int trial = 0; trial < 4; ++trial) {
        auto a = random_element(rng, n, ring.y_degree(), 1 + trial % 2, 2);
        auto b = random_element(rng, n, ring.y_degree(), ring.y_degree(), 2);
        auto prod = ring.multiply(a, b);
        auto gkm = element_to_gkm(a, fc.h, fc.form) * element_to_gkm(b, fc.h, fc.form);
        CHECK(model.in_torus_ideal(element_to_gkm(prod, fc.h, fc.form) - gkm));
      }
    }
}

TEST_CASE("symmetric y-free elements reduce into B1") {
  std::mt19937 rng(5);
  std::uniform_int_distribution<int> coef(-4, 4);
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p <= n; ++p) {
      auto h = one_row_form(n, p);
      for (int d = 0; d <= 3; ++d) {
        // random combination of monomial symmetric polynomials
        XYElement e;
        std::set<std::vector<int>> seen;
        for (auto x : exponent_vectors(n, d)) {
          std::vector<int> key = x;
          std::sort(key.begin(), key.end());
          if (!seen.insert(key).second) continue;
          const int c = coef(rng);
          std::sort(x.begin(), x.end());
          do e.add_term(xm(x), c);
          while (std::next_permutation(x.begin(), x.end()));
        }
        const auto nf = normal_form(e, h);
        for (const auto& [m, c] : nf.terms()) CHECK(m.y == 0);
      }
    }
}

TEST_CASE("transition block for (2,3,3) in degree 2") {
  auto blocks = transition_blocks(h233);
  REQUIRE(blocks.size() == 3);
  const auto& b = blocks[1];
  CHECK(b.degree == 2);
  REQUIRE(b.row_labels.size() == 4);
  CHECK(b.row_labels[0] == xm({1, 0, 0}));
  CHECK(b.row_labels[1] == xm({0, 1, 0}));
  CHECK(b.row_labels[2] == xm({0, 0, 0}, 2));
  CHECK(b.row_labels[3] == xm({0, 0, 0}, 1));
  // y_3 - y_1 = x_1 - x_2 - 2 y_1 - y_2
  MatZ want = {{1, 0, 0, 1}, {0, 1, 0, -1}, {0, 0, 1, -1}, {0, 0, -1, -2}};
  CHECK(b.matrix == want);
  CHECK(block_determinant(b) == -3);
  CHECK_FALSE(check_unimodular(b));
}

TEST_CASE("degree-zero block for h(1) = 1") {
  for (int n = 2; n <= 6; ++n) {
    auto b = transition_blocks(one_row_form(n, 1)).front();
    CHECK(b.degree == 0);
    REQUIRE(b.matrix.size() == static_cast<std::size_t>(n));
    // first row: 1 at the corner of B1 and the last column; then identity
    // with -1 in the last column; last row -1 ... -1, -2
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        long want = 0;
        if (i == j && i < n - 1) want = 1;
        if (j == n - 1) want = i == 0 ? 1 : (i == n - 1 ? -2 : -1);
        if (i == n - 1 && j > 0 && j < n - 1) want = -1;
        CHECK(b.matrix[i][j] == want);
      }
    // invertible over Q but of index n over Z
    CHECK(block_determinant(b) == -n);
  }
}

TEST_CASE("transition determinants are (-n)^(number of B3 x-parts)") {
  for (int n = 2; n <= 5; ++n)
    for (int p = 1; p <= n; ++p) {
      for (bool tr : {false, true}) {
        auto h = tr ? transpose_form(n, p) : one_row_form(n, p);
        auto blocks = tr ? transition_blocks_transpose(h) : transition_blocks(h);
        long rows = 0;
        for (const auto& b : blocks) {
          REQUIRE(b.matrix.size() == b.column_labels.size());
          rows += static_cast<long>(b.matrix.size());
          long groups = 0;
          for (const auto& c : b.column_labels)
            if (c.terms().size() == 2) ++groups;
          groups /= n - 1 > 0 ? n - 1 : 1;
          mpz_class want = 1;
          for (long g = 0; g < groups; ++g) want *= -n;
          CHECK(block_determinant(b) == want);
          if (groups == 0) CHECK(check_unimodular(b));
        }
        CHECK(rows == fact(n));
      }
    }
  // h(1) = n: every block is an identity
  for (const auto& b : transition_blocks(one_row_form(4, 4))) {
    for (std::size_t i = 0; i < b.matrix.size(); ++i)
      for (std::size_t j = 0; j < b.matrix.size(); ++j) CHECK(b.matrix[i][j] == (i == j ? 1 : 0));
  }
}

TEST_CASE("check_unimodular basics") {
  TransitionBlock id;
  id.matrix = {{1, 0}, {0, 1}};
  CHECK(check_unimodular(id));
  TransitionBlock doubled;
  doubled.matrix = {{1, 1}, {2, 2}};
  CHECK_FALSE(check_unimodular(doubled));
  TransitionBlock ragged;
  ragged.matrix = {{1, 0, 0}, {0, 1, 0}};
  try {
    check_unimodular(ragged);
    FAIL("expected NotSquare");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::NotSquare);
  }
}

TEST_CASE("decomposition counts") {
  auto d = decomposition_counts(h233);
  CHECK(d.total_trivial() == 4);
  CHECK(d.total_standard() == 1);
  auto d4 = decomposition_counts(one_row_form(4, 2));
  CHECK(d4.total_trivial() == 12);
  CHECK(d4.total_standard() == 4);
  CHECK(d4.dimension() == 24);
  CHECK(decomposition_counts(one_row_form(4, 4)).total_standard() == 0);
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p <= n; ++p) {
      auto c = decomposition_counts(one_row_form(n, p));
      CHECK(c.total_trivial() == p * fact(n - 1));
      CHECK(c.total_standard() == (n - p) * fact(n - 2));
      CHECK(c.dimension() == fact(n));
    }
}

TEST_CASE("permutation orbits") {
  auto o = permutation_orbits(h233);
  CHECK(o.orbits.size() == 1);
  CHECK(o.orbits[0] == std::vector<XYMonomial>{xm({0, 0, 0}, 1), xm({0, 0, 0}, 2), xm({0, 0, 0}, 3)});
  CHECK(o.fixed.size() == 3);
  CHECK(o.rank == 6);
  auto o4 = permutation_orbits(one_row_form(4, 3));
  CHECK(o4.orbits.size() == 2);
  CHECK(o4.fixed.size() == 16);
  auto o1 = permutation_orbits(one_row_form(3, 1));
  CHECK(o1.orbits.size() == 2);
  CHECK(o1.fixed.empty());
  for (int n = 2; n <= 4; ++n)
    for (int p = 1; p < n; ++p) {
      auto op = permutation_orbits(one_row_form(n, p));
      CHECK(static_cast<long>(op.orbits.size()) == (n - p) * fact(n - 2));
      CHECK(static_cast<long>(op.fixed.size()) == n * (p - 1) * fact(n - 2));
      CHECK(op.rank == fact(n));
    }
  try {
    permutation_orbits(one_row_form(3, 3));
    FAIL("expected DegenerateForm");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::DegenerateForm);
  }
}

TEST_CASE("monomial to GKM class") {
  CHECK(monomial_to_gkm(XYMonomial::one(3), h233) == GkmClass::constant(3, Poly(1)));
  CHECK(monomial_to_gkm(xm({0, 1, 0}), h233) == class_x(3, 2));
  CHECK(monomial_to_gkm(xm({0, 0, 0}, 2), h233) == class_y_one_row(h233, 2));
  CHECK(monomial_to_gkm(xm({0, 0, 0}, 2), h233, Form::transpose) == class_y_transpose(h233, 2));
  CHECK(monomial_to_gkm(xm({2, 0, 0}, 1), h233) == class_x(3, 1) * class_x(3, 1) * class_y_one_row(h233, 1));
  CHECK_THROWS_AS(monomial_to_gkm(XYMonomial::one(4), new_hessenberg({2, 3, 4, 4})), Error);
  // every monomial class satisfies the GKM condition
  auto g = build_gkm_graph(h233);
  const QuotientRing ring(h233, Form::one_row);
  for (const auto& m : ring.standard_monomials())
    CHECK(check_gkm_condition(g, monomial_to_gkm(m, h233)).ok);
}

TEST_CASE("XY element arithmetic and printing") {
  auto a = el({1, 0}, 0, 2) - el({0, 1}, 1);
  CHECK(a.to_string() == "2*x_1 - x_2*y_1");
  CHECK((a - a).is_zero());
  CHECK((mpz_class(3) * a).coefficient(xm({0, 1}, 1)) == -3);
  CHECK(XYElement().to_string() == "0");
  CHECK(mirrored(xm({2, 0, 1}, 3)) == xm({1, 0, 2}, 3));
  CHECK_THROWS_AS(a + el({1, 0, 0}), Error);
}

TEST_CASE("decomposition Frobenius image is omega of X_G") {
  auto f = frobenius_from_decomposition(decomposition_counts(h233));
  SymFn want(3, Basis::schur);
  want.add_term(Partition::from_parts({3}), QPolynomial(1) + QPolynomial::monomial(1, 2) + QPolynomial::monomial(2));
  want.add_term(Partition::from_parts({2, 1}), QPolynomial::monomial(1));
  CHECK(f == want);
  for (int n = 2; n <= 6; ++n)
    for (int p = 1; p <= n; ++p) {
      auto h = one_row_form(n, p);
      CAPTURE(h.to_string());
      CHECK(frobenius_from_decomposition(decomposition_counts(h)) == omega(csf_schur_by_ptableaux(h)));
    }
}
