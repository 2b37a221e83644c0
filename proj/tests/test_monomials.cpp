#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <numeric>

#include "sundial/counting.hpp"
#include "sundial/monomials.hpp"
#include "sundial/rng.hpp"

using namespace sundial;

namespace {

std::vector<FieldElement> random_point(unsigned n, const PrimeField& f, Rng& rng) {
  std::vector<FieldElement> p(n + 1);
  for (auto& c : p) c = rng.below(f.p());
  if (std::all_of(p.begin(), p.end(), [](FieldElement c) { return c == 0; })) p[0] = 1;
  return p;
}

// naive per-monomial evaluation, the independent oracle for evaluation_row
FieldElement eval_monomial(const Monomial& e, const std::vector<FieldElement>& p,
                           const PrimeField& f) {
  FieldElement v = 1;
  for (std::size_t i = 0; i < e.size(); ++i)
    for (unsigned k = 0; k < e[i]; ++k) v = f.mul(v, p[i]);
  return v;
}

}  // namespace

TEST_CASE("basis sizes") {
  CHECK(monomial_basis(3, 4).size() == 35);  // C(7,3)
  for (unsigned d = 0; d <= 9; ++d) CHECK(monomial_basis(1, d).size() == d + 1);
  for (unsigned n = 1; n <= 6; ++n) CHECK(monomial_basis(n, 0).size() == 1);
  CHECK_THROWS_AS(monomial_basis(0, 3), InvalidDimension);
}

TEST_CASE("basis contents and order") {
  MonomialBasis b = monomial_basis(2, 2);
  REQUIRE(b.size() == 6);
  CHECK(b.exponents[0] == Monomial{2, 0, 0});
  CHECK(b.exponents[1] == Monomial{1, 1, 0});
  CHECK(b.exponents[2] == Monomial{1, 0, 1});
  CHECK(b.exponents[3] == Monomial{0, 2, 0});
  CHECK(b.exponents[4] == Monomial{0, 1, 1});
  CHECK(b.exponents[5] == Monomial{0, 0, 2});

  for (unsigned n = 1; n <= 4; ++n) {
    for (unsigned d = 1; d <= 6; ++d) {
      MonomialBasis bb = monomial_basis(n, d);
      CHECK(bb.size() == binomial(d + n, n));
      // every tuple sums to d, first is x0^d, last is xn^d
      for (const Monomial& e : bb.exponents)
        CHECK(std::accumulate(e.begin(), e.end(), 0u) == d);
      CHECK(bb.exponents.front()[0] == d);
      CHECK(bb.exponents.back()[n] == d);
      // strictly descending lex order
      for (std::size_t i = 1; i < bb.size(); ++i)
        CHECK(std::lexicographical_compare(bb.exponents[i].begin(), bb.exponents[i].end(),
                                           bb.exponents[i - 1].begin(),
                                           bb.exponents[i - 1].end()));
    }
  }
}

TEST_CASE("basis size Pascal recurrence") {
  for (unsigned n = 2; n <= 5; ++n)
    for (unsigned d = 1; d <= 7; ++d)
      CHECK(monomial_basis(n, d).size() ==
            monomial_basis(n - 1, d).size() + monomial_basis(n, d - 1).size());
}

TEST_CASE("evaluation rows") {
  PrimeField f{Prime(32003)};
  MonomialBasis b = monomial_basis(3, 4);

  SUBCASE("coordinate point hits the pure power") {
    auto row = evaluation_row(b, {1, 0, 0, 0}, f);
    CHECK(row[0] == 1);  // x0^4 is first in graded-lex
    for (std::size_t j = 1; j < row.size(); ++j) CHECK(row[j] == 0);
  }

  SUBCASE("all-ones point gives all-ones row") {
    auto row = evaluation_row(b, {1, 1, 1, 1}, f);
    for (FieldElement v : row) CHECK(v == 1);
  }

  SUBCASE("random point matches term-by-term oracle") {
    Rng rng(1234);
    for (int trial = 0; trial < 10; ++trial) {
      auto p = random_point(3, f, rng);
      auto row = evaluation_row(b, p, f);
      for (std::size_t j = 0; j < b.size(); ++j)
        CHECK(row[j] == eval_monomial(b.exponents[j], p, f));
    }
  }

  SUBCASE("wrong coordinate count") {
    CHECK_THROWS_AS(evaluation_row(b, {1, 2, 3}, f), DimensionMismatch);
  }
}

TEST_CASE("evaluation homogeneity: scaling P scales the row by lambda^d") {
  PrimeField f{Prime(32003)};
  Rng rng(77);
  for (unsigned d : {1u, 3u, 5u}) {
    MonomialBasis b = monomial_basis(3, d);
    auto p = random_point(3, f, rng);
    FieldElement lambda = 1 + rng.below(f.p() - 1);
    std::vector<FieldElement> q(p);
    for (auto& c : q) c = f.mul(c, lambda);
    auto row_p = evaluation_row(b, p, f);
    auto row_q = evaluation_row(b, q, f);
    FieldElement scale = f.pow(lambda, d);
    for (std::size_t j = 0; j < b.size(); ++j) CHECK(row_q[j] == f.mul(scale, row_p[j]));
  }
}

TEST_CASE("derivative rows") {
  PrimeField f{Prime(32003)};

  SUBCASE("Euler identity: direction = P gives d * evaluation") {
    Rng rng(5);
    for (unsigned d : {1u, 2u, 4u}) {
      MonomialBasis b = monomial_basis(3, d);
      auto p = random_point(3, f, rng);
      auto ev = evaluation_row(b, p, f);
      auto dv = derivative_row(b, p, p, f);
      for (std::size_t j = 0; j < b.size(); ++j) CHECK(dv[j] == f.mul(f.reduce(d), ev[j]));
    }
  }

  SUBCASE("single partial at a coordinate point") {
    for (unsigned d = 1; d <= 5; ++d) {
      MonomialBasis b = monomial_basis(3, d);
      auto row = derivative_row(b, {1, 0, 0, 0}, {0, 1, 0, 0}, f);
      // only x0^{d-1} x1 has a nonzero x1-partial at (1,0,0,0); its
      // derivative is 1 * x0^{d-1} = 1, and it sits at index 1 in graded-lex
      for (std::size_t j = 0; j < b.size(); ++j) {
        Monomial want(4, 0);
        want[0] = d - 1;
        want[1] = 1;
        CHECK(row[j] == (b.exponents[j] == want ? 1u : 0u));
      }
    }
  }

  SUBCASE("linearity in the direction") {
    Rng rng(9);
    MonomialBasis b = monomial_basis(4, 3);
    for (int trial = 0; trial < 8; ++trial) {
      auto p = random_point(4, f, rng);
      auto v = random_point(4, f, rng);
      auto w = random_point(4, f, rng);
      FieldElement a = rng.below(f.p()), c = rng.below(f.p());
      std::vector<FieldElement> combo(5);
      for (std::size_t i = 0; i < 5; ++i) combo[i] = f.add(f.mul(a, v[i]), f.mul(c, w[i]));
      auto row_combo = derivative_row(b, p, combo, f);
      auto row_v = derivative_row(b, p, v, f);
      auto row_w = derivative_row(b, p, w, f);
      for (std::size_t j = 0; j < b.size(); ++j)
        CHECK(row_combo[j] == f.add(f.mul(a, row_v[j]), f.mul(c, row_w[j])));
    }
  }

  SUBCASE("direction in span(P) is proportional to the evaluation row") {
    Rng rng(13);
    MonomialBasis b = monomial_basis(3, 4);
    auto p = random_point(3, f, rng);
    FieldElement lambda = 1 + rng.below(f.p() - 1);
    std::vector<FieldElement> v(p);
    for (auto& c : v) c = f.mul(c, lambda);
    auto dv = derivative_row(b, p, v, f);
    auto ev = evaluation_row(b, p, f);
    FieldElement factor = f.mul(lambda, f.reduce(b.d));
    for (std::size_t j = 0; j < b.size(); ++j) CHECK(dv[j] == f.mul(factor, ev[j]));
  }

  SUBCASE("wrong coordinate count") {
    MonomialBasis b = monomial_basis(2, 2);
    CHECK_THROWS_AS(derivative_row(b, {1, 0}, {0, 1, 0}, f), DimensionMismatch);
    CHECK_THROWS_AS(derivative_row(b, {1, 0, 0}, {0, 1}, f), DimensionMismatch);
  }
}
