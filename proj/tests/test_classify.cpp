#include "doctest.h"

#include "lowrank/classify.hpp"
#include "support/generators.hpp"
#include "support/oracles.hpp"

using namespace lowrank;
using lowrank::testing::el;
using lowrank::testing::vec;

namespace {

const RingSpec F2 = RingSpec::prime_field(2);
const RingSpec F3 = RingSpec::prime_field(3);
const RingSpec F5 = RingSpec::prime_field(5);

// Frozen from the oracle count below (hand-written associativity over F_p^6).
constexpr std::size_t kValidCubicF2 = 19;
constexpr std::size_t kValidCubicF3 = 89;

std::size_t oracle_valid_count(const RingSpec& f) {
  auto values = field_elements(f);
  std::size_t count = 0;
  for (const auto& b : values)
    for (const auto& c : values)
      for (const auto& m : values)
        for (const auto& n : values)
          for (const auto& y : values)
            for (const auto& z : values) count += lowrank::testing::universal_table_associative(f, {b, c, m, n, y, z});
  return count;
}

// Oracle: exact-arithmetic search over maps fixing 1, without pruning.
bool oracle_isomorphic(const AlgebraPtr& a, const AlgebraPtr& b) {
  const std::size_t k = a->rank();
  auto values = field_elements(a->spec());
  std::vector<AlgebraElement> all;
  for_each_element(b, [&](const AlgebraElement& x) { all.push_back(x); });
  std::vector<std::size_t> pick(k - 1, 0);
  while (true) {
    LinearMap phi{a, b, {AlgebraElement::one(b)}};
    for (auto idx : pick) phi.images.push_back(all[idx]);
    if (is_invertible(phi) && verify_homomorphism(phi)) return true;
    std::size_t pos = 0;
    while (pos < pick.size() && ++pick[pos] == all.size()) pick[pos++] = 0;
    if (pos == pick.size()) return false;
  }
}

AlgebraPtr cubic(const CubicCoefficients& c) { return make_algebra(build_algebra(c)); }

AlgebraPtr rank_one(const RingSpec& s) { return make_algebra(StructureConstants(s, {{vec(s, {1})}})); }

}  // namespace

TEST_CASE("enumerate_cubic") {
  REQUIRE(oracle_valid_count(F2) == kValidCubicF2);
  REQUIRE(oracle_valid_count(F3) == kValidCubicF3);
  auto f2 = enumerate_cubic(F2);
  CHECK(f2.size() == kValidCubicF2);
  CHECK(enumerate_cubic(F3).size() == kValidCubicF3);
  CHECK(f2.front().is_zero());
  auto has = [&](const CubicCoefficients& k) { return std::find(f2.begin(), f2.end(), k) != f2.end(); };
  CHECK(has(CubicCoefficients::from_ints(F2, 1, 0, 0, 1, 0, 0)));
  CHECK_FALSE(has(CubicCoefficients::from_ints(F2, 0, 0, 1, 1, 0, 1)));
  CHECK(std::is_sorted(f2.begin(), f2.end(), [](const CubicCoefficients& x, const CubicCoefficients& y) {
    return x.as_vector() < y.as_vector();
  }));
  CHECK_THROWS_AS(enumerate_cubic(RingSpec::prime_field(17)), GuardError);
  CHECK_THROWS_AS(enumerate_cubic(RingSpec::rationals()), DomainError);
}

TEST_CASE("brute-force isomorphism") {
  auto upper = cubic(CubicCoefficients::from_ints(F2, 1, 0, 0, 1, 0, 0));
  auto self = is_isomorphic_bruteforce(upper, upper);
  CHECK(self.isomorphic);
  REQUIRE(self.map);
  CHECK(verify_homomorphism(*self.map));
  QuadraticAlgebra field(el(F2, 1), el(F2, 1)), split(el(F2, 1), el(F2, 0));
  CHECK_FALSE(is_isomorphic_bruteforce(field.algebra(), split.algebra()).isomorphic);
  for (const auto& n : field_elements(F2)) {
    for (const auto& m : field_elements(F2)) {
      if (n.is_zero() && m.is_zero()) continue;
      CHECK(is_isomorphic_bruteforce(cubic(CubicCoefficients::exceptional(n, m)), upper).isomorphic);
    }
  }
  CHECK_FALSE(is_isomorphic_bruteforce(upper, field.algebra()).isomorphic);
  CHECK_THROWS_AS(is_isomorphic_bruteforce(cubic(CubicCoefficients::from_ints(RingSpec::prime_field(7), 0, 0, 0, 0, 0, 0)),
                                           cubic(CubicCoefficients::from_ints(RingSpec::prime_field(7), 0, 0, 0, 0, 0, 0))),
                  GuardError);
}

TEST_CASE("property: brute-force isomorphism is an equivalence matching the oracle over the F2 census") {
  auto tuples = enumerate_cubic(F2);
  std::vector<AlgebraPtr> algebras;
  for (const auto& k : tuples) algebras.push_back(cubic(k));
  const std::size_t count = algebras.size();
  std::vector<std::vector<bool>> iso(count, std::vector<bool>(count));
  for (std::size_t i = 0; i < count; ++i) {
    for (std::size_t j = 0; j < count; ++j) {
      auto r = is_isomorphic_bruteforce(algebras[i], algebras[j]);
      iso[i][j] = r.isomorphic;
      REQUIRE(r.isomorphic == oracle_isomorphic(algebras[i], algebras[j]));
      if (r.isomorphic) {
        REQUIRE(verify_homomorphism(*r.map));
        REQUIRE(classify_case(tuples[i]) == classify_case(tuples[j]));
      }
    }
  }
  for (std::size_t i = 0; i < count; ++i) {
    REQUIRE(iso[i][i]);
    for (std::size_t j = 0; j < count; ++j) {
      REQUIRE(iso[i][j] == iso[j][i]);
      for (std::size_t k = 0; k < count; ++k) {
        if (iso[i][j] && iso[j][k]) REQUIRE(iso[i][k]);
      }
    }
  }
}

TEST_CASE("property: quadratic witness maps preserve discriminant classes") {
  std::vector<QuadraticAlgebra> all;
  for (const auto& t : field_elements(F5)) {
    for (const auto& n : field_elements(F5)) all.emplace_back(t, n);
  }
  for (const auto& a : all) {
    for (const auto& b : all) {
      auto r = is_isomorphic_bruteforce(a.algebra(), b.algebra());
      REQUIRE(r.isomorphic == (discriminant(a) == discriminant(b)));
    }
  }
}

TEST_CASE("main theorem census") {
  for (const auto& f : {F2, F3}) {
    CensusReport r = verify_main_theorem(f);
    CHECK(r.pass());
    CHECK(r.both == 1);
    CHECK(r.nilproduct == 1);
    CHECK(r.commutative + r.exceptional + r.nilproduct == r.valid);
    CHECK(r.total == f.modulus() * f.modulus() * f.modulus() * f.modulus() * f.modulus() * f.modulus());
    const CensusRow& nil = r.rows.front();
    CHECK(nil.coeffs.is_zero());
    CHECK(nil.commutative);
    CHECK(nil.standard_involution);
  }
  CensusReport with_classes = verify_main_theorem(F2, true);
  std::size_t members = 0;
  for (const auto& cls : with_classes.classes) members += cls.size();
  CHECK(members == kValidCubicF2);
}

TEST_CASE("exceptional classes") {
  for (const auto& f : {F2, F3, F5}) {
    auto classes = exceptional_classes(f);
    REQUIRE(classes.size() == 2);
    CHECK(classes[0].size() == 1);
    CHECK(classes[0][0].is_zero());
    CHECK(classes[1].size() == f.modulus() * f.modulus() - 1);
  }
}

TEST_CASE("quadratic census") {
  auto f5 = quadratic_census(F5);
  CHECK(f5.classes.size() == 3);
  CHECK(f5.expected_classes == 3);
  CHECK(f5.matches_discriminant);
  for (std::uint64_t p : {3, 7, 11, 13}) {
    auto c = quadratic_census(RingSpec::prime_field(p));
    CHECK(c.classes.size() == c.expected_classes);
    CHECK(c.matches_discriminant);
  }
  CHECK_THROWS_AS(quadratic_census(F2), DomainError);
}

TEST_CASE("degree of products") {
  auto f3 = rank_one(F3);
  auto r = degree_product_check(f3, f3);
  CHECK(r.deg_product == 2);
  CHECK(r.additive);
  REQUIRE(r.witness);
  CHECK(r.witness->first.coeffs() == vec(F3, {0}));
  CHECK(r.witness->second.coeffs() == vec(F3, {1}));
  CHECK(r.consistent);

  auto f2 = rank_one(F2);
  auto pair = degree_product_check(f2, f2);
  CHECK(pair.deg_product == 2);
  CHECK(pair.additive);
  CHECK(pair.consistent);

  auto boolean = make_algebra(direct_product(*f2, *f2));
  auto big = degree_product_check(boolean, boolean);
  CHECK(big.deg_a == 2);
  CHECK(big.deg_b == 2);
  CHECK(big.deg_product == 2);
  CHECK_FALSE(big.additive);
  CHECK_FALSE(big.witness);
  CHECK(big.consistent);
}

TEST_CASE("M_n probes") {
  auto m2 = mn_degree_probes(F3, 2);
  CHECK(m2.adjoint_standard);
  CHECK(m2.m2_standard_involutions == 1);
  CHECK_FALSE(m2.diagonal_min_poly);
  CHECK(m2.pair_swap_standard);
  CHECK(m2.pair_degree == 2);

  auto m3 = mn_degree_probes(F5, 3);
  REQUIRE(m3.diagonal_min_poly);
  CHECK(m3.diagonal_min_poly->degree() == 3);

  auto m3_f2 = mn_degree_probes(F2, 3);
  CHECK(m3_f2.m2_standard_involutions == 1);
  REQUIRE(m3_f2.diagonal_min_poly);
  // -1 = 1 in characteristic 2, so the diagonal witness collapses to degree 2.
  CHECK(m3_f2.diagonal_min_poly->degree() == 2);
}
