#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "sqz/scalar.hpp"

using namespace sqz;

TEST_CASE("rational parsing round-trips") {
  Rational q = rational_from_string("-14/6");
  CHECK(rational_to_string(q) == "-7/3");
  CHECK_THROWS_AS(rational_from_string("abc"), Error);
  CHECK_THROWS_AS(rational_from_string("1/0"), Error);
}

TEST_CASE("sqrt enclosure brackets the root") {
  Rational q(2);
  auto [lo, hi] = sqrt_enclosure(q, 64);
  CHECK(lo * lo <= q);
  CHECK(hi * hi >= q);
  CHECK(hi - lo <= Rational(1, Integer(1) << 60));
  CHECK(sqrt_lower(Rational(4), 16) == 2);
  CHECK(sqrt_upper(Rational(4), 16) == 2);
}

TEST_CASE("quadratic canonicalization extracts square factors") {
  // sqrt(8) = 2 sqrt(2)
  Scalar s = Scalar::sqrt_of(Rational(8));
  CHECK(s.discriminant() == 2);
  CHECK(s.quad_part() == 2);
  // sqrt(9/4) is rational
  Scalar r = Scalar::sqrt_of(Rational(9, 4));
  CHECK(r.is_rational());
  CHECK(r.as_rational() == Rational(3, 2));
  // sqrt(1/2) = sqrt(2)/2
  Scalar h = Scalar::sqrt_of(Rational(1, 2));
  CHECK(h.discriminant() == 2);
  CHECK(h.quad_part() == Rational(1, 2));
}

TEST_CASE("field arithmetic in Q(sqrt(5))") {
  Scalar phi = (Scalar(1) + Scalar::sqrt_of(Rational(5))) / Scalar(2);
  // phi^2 = phi + 1
  CHECK(phi.squared() == phi + Scalar(1));
  CHECK((phi * phi.inverse()) == Scalar(1));
  CHECK(phi.conjugate() * phi == Scalar(-1));
}

TEST_CASE("exact sign of mixed-sign quadratic values") {
  Scalar a = Scalar::quadratic(Rational(3), Rational(-2), Rational(2));  // 3 - 2 sqrt2 > 0
  CHECK(a.sign() == 1);
  Scalar b = Scalar::quadratic(Rational(-3), Rational(2), Rational(2));
  CHECK(b.sign() == -1);
  Scalar c = Scalar::quadratic(Rational(2), Rational(-1), Rational(4));  // 2 - 2 = 0
  CHECK(c.sign() == 0);
  CHECK(c.is_rational());
}

TEST_CASE("cross-field comparison refines intervals") {
  Scalar r2 = Scalar::sqrt_of(Rational(2));
  Scalar r3 = Scalar::sqrt_of(Rational(3));
  CHECK(r2.compare(r3) < 0);
  CHECK(r3.compare(r2) > 0);
  CHECK_FALSE(r2.equals(r3));
  // sqrt(2) + sqrt-free rational vs sqrt(3): still separable
  CHECK((r2 + Scalar(Rational(1, 4))).compare(r3) < 0);
}

TEST_CASE("cross-field equality is decided structurally") {
  Scalar a = Scalar::quadratic(Rational(1), Rational(1), Rational(2));
  Scalar b = Scalar::quadratic(Rational(1), Rational(1), Rational(3));
  CHECK_FALSE(a.equals(b));
  // equal after canonicalization: 1 + sqrt(8) == 1 + 2 sqrt(2)
  Scalar c = Scalar::quadratic(Rational(1), Rational(2), Rational(2));
  Scalar d = Scalar::quadratic(Rational(1), Rational(1), Rational(8));
  CHECK(c.equals(d));
}

TEST_CASE("enclosures bracket the value") {
  Scalar s = Scalar::quadratic(Rational(-1), Rational(3), Rational(7));
  auto [lo, hi] = s.enclosure(128);
  CHECK(lo < hi);
  // (value - (-1))/3 squared must be 7; check via the bounds
  CHECK((lo + 1) * (lo + 1) <= 9 * 7);
  CHECK((hi + 1) * (hi + 1) >= 9 * 7);
}

TEST_CASE("rational_strictly_between separates scalars") {
  Scalar r2 = Scalar::sqrt_of(Rational(2));
  Rational m = rational_strictly_between(Scalar(1), r2);
  CHECK(m > 1);
  CHECK(m * m < 2);
  Rational m2 = rational_strictly_between(r2, Scalar::sqrt_of(Rational(3)));
  CHECK(m2 * m2 > 2);
  CHECK(m2 * m2 < 3);
}

TEST_CASE("arithmetic across incompatible fields throws") {
  Scalar r2 = Scalar::sqrt_of(Rational(2));
  Scalar r3 = Scalar::sqrt_of(Rational(3));
  CHECK_THROWS_AS(r2 + r3, Error);
  CHECK_THROWS_AS(r2 * r3, Error);
}
