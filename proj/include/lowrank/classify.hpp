#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "lowrank/algebra.hpp"
#include "lowrank/cubic.hpp"
#include "lowrank/quadratic.hpp"

namespace lowrank {

/// Every valid coefficient tuple over F_p, lexicographic in (b, c, m, n, y, z).
std::vector<CubicCoefficients> enumerate_cubic(const RingSpec& field);

struct IsomorphismSearch {
  bool isomorphic = false;
  std::optional<LinearMap> map;  // A -> B, verified
  std::uint64_t candidates = 0;  // partial assignments visited
};

/// Searches linear maps with phi(1) = 1 over F_p, rank <= 4, guarded by
/// p^(k(k-1)).
IsomorphismSearch is_isomorphic_bruteforce(const AlgebraPtr& a, const AlgebraPtr& b);

/// Groups algebras into isomorphism classes by brute force; each class lists
/// indices into the input, and classes are ordered by first member.
std::vector<std::vector<std::size_t>> partition_by_isomorphism(const std::vector<AlgebraPtr>& algebras);

struct CensusRow {
  CubicCoefficients coeffs;
  CubicCase tag;
  bool commutative;
  bool standard_involution;
  bool exceptional_witness;
  bool ok;
};

struct CensusReport {
  RingSpec field;
  std::uint64_t total = 0;
  std::uint64_t valid = 0;
  std::uint64_t commutative = 0;  // excluding the nilproduct tuple
  std::uint64_t exceptional = 0;
  std::uint64_t nilproduct = 0;
  std::uint64_t both = 0;  // commutative and carrying a standard involution
  std::vector<CensusRow> rows = {};
  /// Isomorphism classes as lists of row indices; empty when not requested.
  std::vector<std::vector<std::size_t>> classes = {};
  std::vector<std::string> counterexamples = {};
  bool pass() const { return counterexamples.empty(); }
};

/// For each valid tuple: commutative or a standard involution exists, both
/// only for the nilproduct tuple, and an involution exists iff an exceptional
/// witness does.
CensusReport verify_main_theorem(const RingSpec& field, bool with_classes = false);

/// Isomorphism classes among exceptional and nilproduct tuples.
std::vector<std::vector<CubicCoefficients>> exceptional_classes(const RingSpec& field);

struct QuadraticCensus {
  RingSpec field;
  std::vector<std::vector<std::pair<RingElement, RingElement>>> classes = {};  // (t, n), brute-force partition
  std::size_t expected_classes = 0;  // (p - 1) / |F^x2| + 1
  bool matches_discriminant = false;
};

QuadraticCensus quadratic_census(const RingSpec& field);

struct DegreeProductReport {
  unsigned deg_a = 0;
  unsigned deg_b = 0;
  unsigned deg_product = 0;
  bool additive = false;  // deg(A x B) = deg(A) + deg(B)
  /// First (x, y) in lexicographic order with deg(x) = deg(A), deg(y) = deg(B)
  /// and coprime minimal polynomials.
  std::optional<std::pair<AlgebraElement, AlgebraElement>> witness;
  bool consistent = false;  // additive iff a witness exists
};

DegreeProductReport degree_product_check(const AlgebraPtr& a, const AlgebraPtr& b);

struct MnProbeReport {
  RingSpec field;
  std::size_t n;
  bool adjoint_standard = false;
  std::size_t m2_standard_involutions = 0;  // brute force on M_2
  std::optional<Polynomial> diagonal_min_poly = {};  // diag(0, -1, 1, ..., 1) in M_n, n >= 3
  bool pair_swap_standard = false;
  unsigned pair_degree = 0;
};

MnProbeReport mn_degree_probes(const RingSpec& field, std::size_t n);

}  // namespace lowrank
