#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "fischerlab/harmonic.hpp"
#include "fischerlab/text.hpp"
#include "support/testing.hpp"

using namespace fischerlab;
using fischerlab::testing::Rng;

namespace {

Polynomial P(const std::string& text, int dim = 2) { return parse_polynomial(text, dim); }

const QuadraticOperator kLap = QuadraticOperator::laplacian(2);
const QuadraticOperator kSheared = QuadraticOperator::diagonal({Rational(1), Rational(1, 3)});

long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("is_harmonic") {
  CHECK(is_harmonic(P("x^2 - y^2"), kLap));
  CHECK(!is_harmonic(P("x^2 + y^2"), kLap));
  CHECK(is_harmonic(P("x^3*y - x*y^3"), kLap));
  CHECK(is_harmonic(Polynomial::zero(2), kLap));
  CHECK(is_harmonic(P("x^2 - 3*y^2"), kSheared));  // dx^2 + (1/3)dy^2 kills it
}

TEST_CASE("harmonic basis: pinned dimensions") {
  const auto deg3 = harmonic_basis(2, 3, kLap);
  REQUIRE(deg3.size() == 2);
  for (const auto& p : deg3) {
    CHECK(is_harmonic(p, kLap));
    CHECK(p.is_homogeneous());
    CHECK(p.degree() == 3);
  }
  const auto deg0 = harmonic_basis(2, 0, kLap);
  REQUIRE(deg0.size() == 1);
  CHECK(deg0[0] == P("1"));
  CHECK(harmonic_basis(3, 2, QuadraticOperator::laplacian(3)).size() == 5);
}

TEST_CASE("harmonic basis sizes match the classical dimension formula") {
  for (int d = 2; d <= 4; ++d) {
    const QuadraticOperator lap = QuadraticOperator::laplacian(d);
    for (int n = 2; n <= 10; ++n) {
      if (d == 4 && n > 8) continue;  // keep the suite quick
      const long expected = binomial(n + d - 1, d - 1) - binomial(n + d - 3, d - 1);
      CHECK(static_cast<long>(harmonic_basis(d, n, lap).size()) == expected);
    }
  }
}

TEST_CASE("divisor witness validates at construction") {
  CHECK_NOTHROW(DivisorWitness(P("x"), P("1"), kLap));
  CHECK_NOTHROW(DivisorWitness(P("x*(x+y)"), P("y^2 - x*y"), kLap));
  CHECK_THROWS_AS(DivisorWitness(P("x^2+y^2"), P("1"), kLap), VerificationError);
  CHECK_THROWS_AS(DivisorWitness(P("x"), Polynomial::zero(2), kLap), std::invalid_argument);
}

TEST_CASE("harmonic divisor search: pinned examples") {
  const auto immediate = find_harmonic_divisor_witness(P("x"), 0, kLap);
  REQUIRE(immediate.status == DivisorSearchStatus::WitnessFound);
  CHECK(immediate.witness->witness() == P("1"));

  const auto skew = find_harmonic_divisor_witness(P("x*(x+y)"), 2, kLap);
  REQUIRE(skew.status == DivisorSearchStatus::WitnessFound);
  CHECK(skew.witness->witness() == P("y^2 - x*y"));  // y*(y-x)

  const auto too_low = find_harmonic_divisor_witness(P("x*(x+y)"), 1, kLap);
  CHECK(too_low.status == DivisorSearchStatus::NotFoundAtBound);

  const auto positive = find_harmonic_divisor_witness(P("x^2+y^2"), 8, kLap, true);
  CHECK(positive.status == DivisorSearchStatus::Never);
  CHECK(!positive.reason.empty());

  // Without the caller's nonnegativity assertion the honest answer is bounded.
  const auto unasserted = find_harmonic_divisor_witness(P("x^2+y^2"), 4, kLap);
  CHECK(unasserted.status == DivisorSearchStatus::NotFoundAtBound);

  CHECK_THROWS_AS(find_harmonic_divisor_witness(Polynomial::zero(2), 2, kLap),
                  ZeroPolynomialError);
}

TEST_CASE("inhomogeneous divisor with known witness") {
  // f = x+y+1 divides the harmonic (x+y+1)(x-y): the kernel at bound 1 is
  // spanned by {x-y, 1} and the deterministic first basis vector is y - x.
  const auto found = find_harmonic_divisor_witness(P("x+y+1"), 1, kLap);
  REQUIRE(found.status == DivisorSearchStatus::WitnessFound);
  CHECK(found.witness->witness() == P("y - x"));
  CHECK(parts_are_divisors_check(*found.witness));
}

TEST_CASE("angle pi/n pairs have witnesses of degree n-2") {
  // n = 2: perpendicular lines.
  const auto perp = find_harmonic_divisor_witness(P("x*y"), 0, kLap);
  REQUIRE(perp.status == DivisorSearchStatus::WitnessFound);
  CHECK(perp.witness->witness().degree() == 0);

  // n = 3: the 60-degree pair lives in the sheared rational model.
  const auto sixty = find_harmonic_divisor_witness(P("y*(x-y)"), 1, kSheared);
  REQUIRE(sixty.status == DivisorSearchStatus::WitnessFound);
  CHECK(sixty.witness->witness() == P("x + y"));
  CHECK(sixty.witness->witness().degree() == 1);

  // n = 4: lines meeting at 45 degrees.
  const auto fortyfive = find_harmonic_divisor_witness(P("x*(x+y)"), 2, kLap);
  REQUIRE(fortyfive.status == DivisorSearchStatus::WitnessFound);
  CHECK(fortyfive.witness->witness().degree() == 2);
}

TEST_CASE("every found witness passes the homogeneous-parts check") {
  Rng rng(89);
  int found_count = 0;
  for (int i = 0; i < 60; ++i) {
    Polynomial f(2);
    switch (rng.below(3)) {
      case 0: {  // random harmonic combination: guaranteed witness q = 1
        const int n = static_cast<int>(rng.range(1, 4));
        f = Polynomial::zero(2);
        for (const auto& h : harmonic_basis(2, n, kLap)) f = f + h * rng.rational(5, 2);
        f = f + P("x");
        break;
      }
      case 1: {  // product of two linear forms through the origin
        const Polynomial l1 = Polynomial::variable(2, 0) * rng.rational(3, 1) +
                              Polynomial::variable(2, 1) * rng.rational(3, 1);
        const Polynomial l2 = Polynomial::variable(2, 0) * rng.rational(3, 1) +
                              Polynomial::variable(2, 1) * rng.rational(3, 1);
        f = l1 * l2;
        break;
      }
      default:
        f = rng.polynomial(2, 4, 4, 6, 3);
    }
    if (f.is_zero()) continue;
    const auto result = find_harmonic_divisor_witness(f, 4, kLap);
    if (result.status != DivisorSearchStatus::WitnessFound) continue;
    ++found_count;
    CHECK(parts_are_divisors_check(*result.witness));
  }
  CHECK(found_count >= 15);  // the scan genuinely exercises the witness path
}

TEST_CASE("constant divisors are trivially harmonic divisors") {
  const auto c = find_harmonic_divisor_witness(P("5"), 0, kLap);
  REQUIRE(c.status == DivisorSearchStatus::WitnessFound);
  CHECK(c.witness->witness() == P("1"));
}
