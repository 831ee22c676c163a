#include "doctest.h"

#include "lowrank/cubic.hpp"
#include "lowrank/involutions.hpp"
#include "support/generators.hpp"

using namespace lowrank;
using lowrank::testing::el;
using lowrank::testing::Gen;
using lowrank::testing::vec;

namespace {

const RingSpec Z = RingSpec::integers();
const RingSpec Q = RingSpec::rationals();

Involution identity_map(const AlgebraPtr& a) {
  Involution inv{a, {}};
  for (std::size_t i = 0; i < a->rank(); ++i) inv.images.push_back(AlgebraElement::basis(a, i));
  return inv;
}

}  // namespace

TEST_CASE("verify_involution") {
  auto comm = make_algebra(build_algebra(CubicCoefficients::from_ints(Z, 1, 1, 0, 0, 1, 1)));
  CHECK(verify_involution(identity_map(comm)).ok);

  auto e = make_algebra(build_algebra(CubicCoefficients::exceptional(el(Z, 1), el(Z, 0))));
  auto r = verify_involution(identity_map(e));
  CHECK_FALSE(r.ok);
  CHECK(r.violated == "anti-multiplicative");
  REQUIRE(r.witness);
  CHECK(*r.witness == std::pair<std::size_t, std::size_t>{1, 2});

  Involution not_unital = identity_map(comm);
  not_unital.images[0] = -not_unital.images[0];
  CHECK(verify_involution(not_unital).violated == "identity");

  Involution not_order_two = identity_map(comm);
  not_order_two.images[1] = AlgebraElement::basis(comm, 2);
  not_order_two.images[2] = AlgebraElement::basis(comm, 1) + AlgebraElement::basis(comm, 2);
  CHECK(verify_involution(not_order_two).violated == "order");
}

TEST_CASE("standardness") {
  Involution adj = m2_adjoint(Q);
  CHECK(verify_standard(adj));
  // x xbar = det(x) Id
  auto x = matrix_element(adj.algebra, SquareMatrix(Q, {{el(Q, 2), el(Q, 3)}, {el(Q, 5), el(Q, 7)}}));
  CHECK(norm(adj, x) == el(Q, -1));
  CHECK(trace(adj, x) == el(Q, 9));

  Involution swap = pair_swap(Q);
  CHECK(verify_standard(swap));
  auto f = make_algebra(StructureConstants(Q, {{vec(Q, {1})}}));
  auto pair = product_element(swap.algebra, AlgebraElement::scalar(f, el(Q, 3)), AlgebraElement::scalar(f, el(Q, 4)));
  CHECK(pair * swap.apply(pair) == AlgebraElement::scalar(swap.algebra, el(Q, 12)));

  auto comm = make_algebra(build_algebra(CubicCoefficients::from_ints(Z, 1, 1, 0, 0, 1, 1)));
  CHECK_FALSE(verify_standard(identity_map(comm)));
  CHECK_THROWS_AS(norm(identity_map(comm), AlgebraElement::basis(comm, 1)), DomainError);
}

TEST_CASE("quaternion trace and norm") {
  Involution h = quaternion_conjugation(el(Q, -1), el(Q, -1));
  auto q = h.algebra;
  CHECK(q->product(2, 1) == vec(Q, {0, 0, 0, -1}));
  CHECK(q->product(1, 2) == vec(Q, {0, 0, 0, 1}));
  auto x = AlgebraElement(q, vec(Q, {1, 1, 1, 1}));
  CHECK(trace(h, x) == el(Q, 2));
  CHECK(norm(h, x) == el(Q, 4));
  CHECK(trace(h, AlgebraElement::one(q)) == el(Q, 2));
  CHECK(norm(h, AlgebraElement::one(q)) == el(Q, 1));
  auto c = quadratic_certificate(h, AlgebraElement::basis(q, 1));
  CHECK(c.t == el(Q, 0));
  CHECK(c.n == el(Q, 1));
  CHECK_THROWS_AS(quaternion_algebra(el(Z, 2), el(Z, 1)), DomainError);
  CHECK_THROWS_AS(quaternion_algebra(el(RingSpec::prime_field(2), 1), el(RingSpec::prime_field(2), 1)), DomainError);
}

TEST_CASE("quadratic certificate on a case-E element") {
  auto inv = standard_involution_E(CubicCoefficients::exceptional(el(Z, 1), el(Z, 0)));
  auto c = quadratic_certificate(inv, AlgebraElement::basis(inv.algebra, 1));
  CHECK(c.t == el(Z, 1));
  CHECK(c.n == el(Z, 0));
}

TEST_CASE("find_standard_involution") {
  auto nil = make_algebra(build_algebra(CubicCoefficients::from_ints(Z, 0, 0, 0, 0, 0, 0)));
  auto found = find_standard_involution(nil);
  REQUIRE(found);
  CHECK(found->images[1] == -AlgebraElement::basis(nil, 1));
  CHECK(found->images[2] == -AlgebraElement::basis(nil, 2));

  auto comm = make_algebra(build_algebra(CubicCoefficients::from_ints(Z, 1, 1, 0, 0, 1, 1)));
  CHECK_FALSE(find_standard_involution(comm));

  auto k = CubicCoefficients::exceptional(el(Z, 1), el(Z, 1));
  auto e = find_standard_involution(make_algebra(build_algebra(k)));
  REQUIRE(e);
  CHECK(e->images == standard_involution_E(k).images);

  auto q = find_standard_involution(quaternion_algebra(el(Q, 2), el(Q, 3)));
  REQUIRE(q);
  CHECK(q->images == quaternion_conjugation(el(Q, 2), el(Q, 3)).images);
  auto m3 = find_standard_involution(make_algebra(matrix_algebra(Q, 3)));
  CHECK_FALSE(m3);
}

TEST_CASE("brute-force search on M2 over F2 agrees with the adjoint") {
  RingSpec f2 = RingSpec::prime_field(2);
  Involution adj = m2_adjoint(f2);
  auto all = standard_involutions_bruteforce(adj.algebra);
  REQUIRE(all.size() == 1);
  CHECK(all[0].images == adj.images);
  auto algebraic = find_standard_involution(adj.algebra);
  REQUIRE(algebraic);
  CHECK(algebraic->images == adj.images);
}

TEST_CASE("builtin involutions square to the identity") {
  for (const auto& inv : {m2_adjoint(Q), pair_swap(Q), quaternion_conjugation(el(Q, 2), el(Q, 3))}) {
    CHECK(verify_involution(inv).ok);
    for (std::size_t i = 0; i < inv.algebra->rank(); ++i) {
      CHECK(inv.apply(inv.apply(AlgebraElement::basis(inv.algebra, i))) == AlgebraElement::basis(inv.algebra, i));
    }
  }
}

TEST_CASE("property: constructed standard involutions give scalar trace and norm") {
  Gen g(41);
  std::vector<Involution> all{m2_adjoint(Q), pair_swap(Q), quaternion_conjugation(el(Q, -1), el(Q, 5)),
                              standard_involution_E(CubicCoefficients::exceptional(el(Q, 2), el(Q, -3))),
                              standard_involution_E(CubicCoefficients::from_ints(Q, 0, 0, 0, 0, 0, 0))};
  for (const auto& inv : all) {
    REQUIRE(verify_standard(inv));
    for (int k = 0; k < 500; ++k) {
      auto x = g.algebra_element(inv.algebra);
      REQUIRE((x + inv.apply(x)).is_scalar());
      REQUIRE((x * inv.apply(x)).is_scalar());
      REQUIRE((inv.apply(x) * x) == (x * inv.apply(x)));
      quadratic_certificate(inv, x);
    }
  }
}

TEST_CASE("property: quaternion norm formula") {
  Gen g(42);
  for (auto [a, b] : std::vector<std::pair<std::int64_t, std::int64_t>>{{-1, -1}, {2, 3}, {-1, 5}, {7, -2}}) {
    RingElement ra = el(Q, a), rb = el(Q, b);
    Involution inv = quaternion_conjugation(ra, rb);
    for (int k = 0; k < 200; ++k) {
      auto x = g.algebra_element(inv.algebra);
      const auto& c = x.coeffs();
      RingElement expected = c[0] * c[0] - ra * c[1] * c[1] - rb * c[2] * c[2] + ra * rb * c[3] * c[3];
      REQUIRE(norm(inv, x) == expected);
      REQUIRE(trace(inv, x) == el(Q, 2) * c[0]);
    }
  }
}
