#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fischerlab/basis.hpp"
#include "fischerlab/matrix.hpp"
#include "fischerlab/text.hpp"
#include "support/testing.hpp"

using namespace fischerlab;
using fischerlab::testing::Rng;

namespace {

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

ExactMatrix from_rows(const std::vector<std::vector<long>>& rows) {
  ExactMatrix m(static_cast<int>(rows.size()), static_cast<int>(rows[0].size()));
  for (std::size_t r = 0; r < rows.size(); ++r) {
    for (std::size_t c = 0; c < rows[r].size(); ++c) m.at(static_cast<int>(r), static_cast<int>(c)) = Rational(rows[r][c]);
  }
  return m;
}

}  // namespace

TEST_CASE("monomial basis enumeration") {
  const GradedBasis b = GradedBasis::of_degree(2, 2);
  REQUIRE(b.size() == 3);
  CHECK(b.monomial(0) == Exponents{2, 0});  // x^2, x*y, y^2
  CHECK(b.monomial(1) == Exponents{1, 1});
  CHECK(b.monomial(2) == Exponents{0, 2});
  CHECK(GradedBasis::of_degree(3, 0).size() == 1);
  CHECK(GradedBasis::up_to_degree(2, 2).size() == 6);
}

TEST_CASE("basis sizes match binomial counts") {
  for (int d = 1; d <= 5; ++d) {
    for (int n = 0; n <= 12; ++n) {
      CHECK(static_cast<long>(GradedBasis::of_degree(d, n).size()) == binomial(n + d - 1, d - 1));
      CHECK(static_cast<long>(GradedBasis::up_to_degree(d, n).size()) == binomial(n + d, d));
    }
  }
}

TEST_CASE("basis ordering is strictly monotone in the listing order") {
  const GradedBasis b = GradedBasis::up_to_degree(3, 4);
  for (std::size_t i = 0; i + 1 < b.size(); ++i) CHECK(listed_before(b.monomial(i), b.monomial(i + 1)));
}

TEST_CASE("coordinates") {
  const GradedBasis b = GradedBasis::of_degree(2, 2);
  const auto v = to_coords(parse_polynomial("x^2 + 2*y^2"), b);
  CHECK(v == std::vector<Rational>{Rational(1), Rational(0), Rational(2)});
  CHECK(to_coords(Polynomial::zero(2), b) == std::vector<Rational>(3, Rational(0)));
  CHECK_THROWS_AS(to_coords(parse_polynomial("x*y", 2), GradedBasis::of_degree(2, 1)),
                  std::out_of_range);
  Rng rng(43);
  for (int i = 0; i < 30; ++i) {
    const GradedBasis bb = GradedBasis::up_to_degree(2, 5);
    const Polynomial p = rng.polynomial(2, 5, 5, 30, 7);
    CHECK(from_coords(to_coords(p, bb), bb) == p);
  }
}

TEST_CASE("solve on pinned examples") {
  const ExactMatrix id3 = ExactMatrix::identity(3);
  const auto x = solve(id3, {Rational(1), Rational(2), Rational(3)});
  REQUIRE(x.has_value());
  CHECK(*x == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});

  const ExactMatrix m = from_rows({{1, 1}, {2, 2}});
  CHECK(!solve(m, {Rational(1), Rational(3)}).has_value());  // inconsistent
  CHECK(rank(m) == 1);
  const auto null = nullspace_basis(m);
  REQUIRE(null.size() == 1);
  CHECK(null[0] == std::vector<Rational>{Rational(-1), Rational(1)});  // spans (1,-1)
  CHECK_THROWS(solve(m, {Rational(1)}));
}

TEST_CASE("determinant and positive definiteness") {
  CHECK(determinant(from_rows({{1, 2}, {3, 4}})) == Rational(-2));
  CHECK(determinant(from_rows({{1, 1}, {2, 2}})) == Rational(0));
  CHECK(determinant(from_rows({{0, 1}, {1, 0}})) == Rational(-1));  // needs a row swap
  CHECK(positive_definite(from_rows({{2, 1}, {1, 2}})));
  CHECK(!positive_definite(from_rows({{1, 2}, {2, 1}})));
  CHECK(!positive_definite(from_rows({{0, 1}, {1, 0}})));
  CHECK(!positive_definite(from_rows({{1, 2}, {3, 4}})));  // not symmetric
  Rng rng(47);
  for (int i = 0; i < 40; ++i) {
    const int n = static_cast<int>(rng.range(1, 5));
    ExactMatrix m = rng.matrix(n, n, 9, 4);
    // det != 0 iff full rank, checked against the naive oracle.
    CHECK((determinant(m) != Rational(0)) == (testing::naive_rank(m) == n));
  }
}

TEST_CASE("solve results satisfy M*x = b exactly") {
  Rng rng(53);
  for (int i = 0; i < 200; ++i) {
    const int rows = static_cast<int>(rng.range(1, 6));
    const int cols = static_cast<int>(rng.range(1, 6));
    const ExactMatrix m = rng.matrix(rows, cols, 9, 4);
    std::vector<Rational> b;
    for (int r = 0; r < rows; ++r) b.push_back(rng.rational(9, 4));
    const auto x = solve(m, b);
    if (x) CHECK(m.apply(*x) == b);
  }
}

TEST_CASE("oracle agreement: solve, rank, nullspace on 500 random matrices") {
  Rng rng(59);
  for (int i = 0; i < 500; ++i) {
    const int rows = static_cast<int>(rng.range(1, 6));
    const int cols = static_cast<int>(rng.range(1, 6));
    const ExactMatrix m = rng.matrix(rows, cols, 9, 4);
    std::vector<Rational> b;
    for (int r = 0; r < rows; ++r) b.push_back(rng.below(3) == 0 ? Rational(0) : rng.rational(9, 4));

    CHECK(rank(m) == testing::naive_rank(m));
    const auto mine = solve(m, b);
    const auto theirs = testing::naive_solve(m, b);
    REQUIRE(mine.has_value() == theirs.has_value());
    if (mine) {
      CHECK(*mine == *theirs);  // same free-variable pinning => identical vectors
      CHECK(m.apply(*mine) == b);
    }
    const auto null_mine = nullspace_basis(m);
    const auto null_theirs = testing::naive_nullspace(m);
    REQUIRE(null_mine.size() == null_theirs.size());
    for (std::size_t k = 0; k < null_mine.size(); ++k) {
      CHECK(null_mine[k] == null_theirs[k]);
      CHECK(m.apply(null_mine[k]) == std::vector<Rational>(rows, Rational(0)));
    }
    CHECK(rank(m) + static_cast<int>(null_mine.size()) == cols);
  }
}

TEST_CASE("infeasibility certified against the oracle on small systems") {
  Rng rng(61);
  int infeasible_seen = 0;
  for (int i = 0; i < 300; ++i) {
    const int rows = static_cast<int>(rng.range(2, 6));
    const int cols = static_cast<int>(rng.range(1, 4));
    const ExactMatrix m = rng.matrix(rows, cols, 5, 2);
    std::vector<Rational> b;
    for (int r = 0; r < rows; ++r) b.push_back(rng.rational(5, 2));
    const auto mine = solve(m, b);
    CHECK(mine.has_value() == testing::naive_solve(m, b).has_value());
    if (!mine) ++infeasible_seen;
  }
  CHECK(infeasible_seen > 50);  // the sample actually exercises the infeasible path
}
