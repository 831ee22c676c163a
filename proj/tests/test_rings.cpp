#include "doctest.h"

#include "lowrank/matrix.hpp"
#include "lowrank/polynomial.hpp"
#include "lowrank/rings.hpp"
#include "support/generators.hpp"

using namespace lowrank;
using lowrank::testing::el;
using lowrank::testing::Gen;

namespace {
const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();
}  // namespace

TEST_CASE("basic ring arithmetic") {
  CHECK(el(Z, 2) + el(Z, 3) == el(Z, 5));
  RingSpec f5 = RingSpec::prime_field(5);
  CHECK(el(f5, 3) * el(f5, 4) == el(f5, 2));
  CHECK(RingElement::parse(Q, "1/2") / RingElement::parse(Q, "1/3") == RingElement::parse(Q, "3/2"));
  CHECK(RingElement::parse(Q, "-4/6").to_string() == "-2/3");
  CHECK(el(f5, -1).to_string() == "4");
  CHECK_THROWS_AS(el(Z, 1) / el(Z, 2), DomainError);
  CHECK_THROWS_AS(el(Z, 1) + el(Q, 1), DomainError);
  CHECK_THROWS_AS(RingElement::parse(Q, "1/0"), InputError);
  CHECK_THROWS_AS(RingElement::parse(Z, "x"), InputError);
  CHECK_THROWS_AS(RingSpec::prime_field(6), DomainError);
}

TEST_CASE("units and characteristic") {
  CHECK_FALSE(is_unit(el(Z, 2)));
  CHECK(is_unit(el(Z, -1)));
  CHECK(is_unit(el(RingSpec::prime_field(5), 2)));
  CHECK_FALSE(is_unit(el(Q, 0)));
  CHECK(characteristic(Z) == 0);
  CHECK(characteristic(Q) == 0);
  CHECK(characteristic(RingSpec::prime_field(2)) == 2);
}

TEST_CASE("square classes") {
  RingSpec f5 = RingSpec::prime_field(5);
  CHECK(square_class_equal(el(f5, 1), el(f5, 4)));
  CHECK_FALSE(square_class_equal(el(f5, 1), el(f5, 2)));
  CHECK(square_class_equal(el(Z, 0), el(Z, 0)));
  CHECK(square_class_equal(RingElement::parse(Q, "8/9"), el(Q, 2)));
  CHECK_FALSE(square_class_equal(el(Q, 3), el(Q, 2)));
  CHECK_FALSE(square_class_equal(el(Q, 0), el(Q, 2)));
  CHECK_FALSE(square_class_equal(el(Z, 4), el(Z, 1)));
}

TEST_CASE("bezout") {
  auto r = bezout(el(Z, 3), el(Z, 5));
  REQUIRE(r);
  CHECK(r->t == el(Z, 2));
  CHECK(r->s == el(Z, 1));
  auto id = bezout(el(Z, 1), el(Z, 0));
  REQUIRE(id);
  CHECK(id->t == el(Z, 1));
  CHECK(id->s == el(Z, 0));
  CHECK_FALSE(bezout(el(Z, 2), el(Z, 4)));
}

TEST_CASE("property: canonical form is idempotent and ring axioms hold") {
  Gen g(11);
  std::vector<RingSpec> specs{Z, Q, RingSpec::prime_field(2), RingSpec::prime_field(7), RingSpec::prime_field(13)};
  for (const auto& spec : specs) {
    for (int k = 0; k < 1000; ++k) {
      RingElement a = g.element(spec, 50), b = g.element(spec, 50), c = g.element(spec, 50);
      RingElement copy = a;
      copy.canonicalize();
      REQUIRE(copy == a);
      REQUIRE((a + b) + c == a + (b + c));
      REQUIRE((a * b) * c == a * (b * c));
      REQUIRE(a * (b + c) == a * b + a * c);
      REQUIRE(a + b == b + a);
      REQUIRE(a * b == b * a);
      REQUIRE(a - a == RingElement::zero(spec));
      if (a.is_unit()) REQUIRE(a * a.inverse() == RingElement::one(spec));
    }
  }
}

TEST_CASE("property: square_class_equal is an equivalence relation over small prime fields") {
  Gen g(12);
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13}) {
    RingSpec f = RingSpec::prime_field(p);
    for (int k = 0; k < 300; ++k) {
      RingElement a = g.element(f), b = g.element(f), c = g.element(f);
      REQUIRE(square_class_equal(a, a));
      REQUIRE(square_class_equal(a, b) == square_class_equal(b, a));
      if (square_class_equal(a, b) && square_class_equal(b, c)) REQUIRE(square_class_equal(a, c));
    }
  }
}

TEST_CASE("property: bezout output satisfies its identity") {
  Gen g(13);
  for (const auto& spec : {Z, Q, RingSpec::prime_field(7)}) {
    for (int k = 0; k < 500; ++k) {
      RingElement a = g.element(spec, 40), b = g.element(spec, 40);
      auto r = bezout(a, b);
      if (r) {
        REQUIRE(a * r->t - r->s * b == RingElement::one(spec));
      } else if (spec.kind() == RingKind::Integers) {
        // Oracle: no solution exactly when gcd(a, b) != 1.
        BigInt x = abs(a.numerator()), y = abs(b.numerator());
        while (y != 0) {
          BigInt t = x % y;
          x = y;
          y = t;
        }
        REQUIRE(x != 1);
      } else {
        REQUIRE(a.is_zero());
        REQUIRE(b.is_zero());
      }
    }
  }
}

TEST_CASE("polynomials") {
  Polynomial t = Polynomial::monomial(Q, 1);
  Polynomial p = t * (t + Polynomial::constant(el(Q, 1))) * (t - Polynomial::constant(el(Q, 1)));
  CHECK(p.to_string() == "T^3 - T");
  auto [q, r] = divmod(p, Polynomial::linear_factor(el(Q, 1)));
  CHECK(r.is_zero());
  CHECK(q.to_string() == "T^2 + T");
  CHECK(gcd(p, t * t).to_string() == "T");
  CHECK(Polynomial(Q).degree() == -1);
}

TEST_CASE("matrices: determinant, inverse and characteristic polynomial") {
  SquareMatrix d = SquareMatrix::diagonal(Q, {el(Q, 0), el(Q, -1), el(Q, 1)});
  CHECK(char_poly(d).to_string() == "T^3 - T");
  CHECK(char_poly(SquareMatrix::identity(Z, 2)).to_string() == "T^2 - 2*T + 1");
  SquareMatrix m(Z, {{el(Z, 2), el(Z, 1)}, {el(Z, 1), el(Z, 1)}});
  CHECK(determinant(m) == el(Z, 1));
  auto inv = inverse(m);
  REQUIRE(inv);
  CHECK(*inv * m == SquareMatrix::identity(Z, 2));
  SquareMatrix singular(Z, {{el(Z, 2), el(Z, 0)}, {el(Z, 0), el(Z, 1)}});
  CHECK_FALSE(inverse(singular));
}

TEST_CASE("property: Bareiss determinant and both char poly routes agree with cofactor oracle") {
  Gen g(14);
  for (const auto& spec : {Z, Q, RingSpec::prime_field(5)}) {
    for (std::size_t n = 1; n <= 4; ++n) {
      for (int k = 0; k < 40; ++k) {
        SquareMatrix m = g.matrix(spec, n, 6);
        Polynomial cp = char_poly_cofactor(m);
        REQUIRE(cp == char_poly_berkowitz(m));
        // det(M) = (-1)^n * P(0)
        RingElement det = cp.coeff(0);
        if (n % 2 == 1) det = -det;
        REQUIRE(determinant(m) == det);
        REQUIRE(cp.is_monic());
        REQUIRE(cp.degree() == static_cast<int>(n));
      }
    }
  }
}

TEST_CASE("property: determinant is multiplicative") {
  Gen g(15);
  for (int k = 0; k < 200; ++k) {
    SquareMatrix a = g.matrix(Z, 5, 5), b = g.matrix(Z, 5, 5);
    REQUIRE(determinant(a * b) == determinant(a) * determinant(b));
  }
}
