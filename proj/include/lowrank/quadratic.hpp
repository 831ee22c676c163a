#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "lowrank/algebra.hpp"
#include "lowrank/involutions.hpp"

namespace lowrank {

/// R[x]/(x^2 - t x + n) in the basis 1, x.
struct QuadraticAlgebra {
  RingElement t;
  RingElement n;

  QuadraticAlgebra(RingElement t_, RingElement n_);
  const RingSpec& spec() const { return t.spec(); }
  AlgebraPtr algebra() const;
};

/// The class of a discriminant in R / R^(x2).
struct DiscriminantClass {
  RingElement representative;

  friend bool operator==(const DiscriminantClass& a, const DiscriminantClass& b) {
    return square_class_equal(a.representative, b.representative);
  }
};

DiscriminantClass discriminant(const QuadraticAlgebra& a);

struct CompletedSquare {
  RingElement d;
  QuadraticAlgebra target;  // R[y]/(y^2 - d)
  LinearMap map;            // x -> y/2 + t/2
};

/// Requires 2 to be a unit.
CompletedSquare complete_square(const QuadraticAlgebra& a);

struct IsomorphismResult {
  bool isomorphic = false;
  std::optional<LinearMap> map;  // A -> B, verified
};

/// Decides A ~ B by square classes of the discriminants over a field where 2 is a unit.
/// On success the map is x -> a y + (t - a T)/2 with d = a^2 D.
IsomorphismResult is_isomorphic_2unit(const QuadraticAlgebra& a, const QuadraticAlgebra& b);

/// Over Z: equal discriminants and t = T mod 2, witnessed by x -> y + (t - T)/2.
IsomorphismResult is_isomorphic_Z(const QuadraticAlgebra& a, const QuadraticAlgebra& b);

/// Characteristic 2 only: separable iff t != 0.
bool is_separable(const QuadraticAlgebra& a);

/// Coset of a representative modulo {r + r^2 : r in F}, F = F_2 here.
struct ArtinSchreierClass {
  RingSpec field;
  RingElement representative;

  friend bool operator==(const ArtinSchreierClass& a, const ArtinSchreierClass& b);
};

/// The class of n t^-2, for separable A over a field of characteristic 2.
ArtinSchreierClass artin_schreier_class(const QuadraticAlgebra& a);

/// {r + r^2 : r in F} for a prime field of characteristic 2, sorted.
std::vector<RingElement> artin_schreier_image(const RingSpec& spec);

/// GF(2^k) with elements packed as bit vectors over F_2 and reduction by a
/// fixed irreducible polynomial (bit i is the coefficient of X^i).
class BinaryField {
 public:
  /// Uses a built-in irreducible polynomial for 1 <= k <= 8.
  explicit BinaryField(unsigned k);

  unsigned degree() const { return k_; }
  std::uint32_t size() const { return 1u << k_; }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return a ^ b; }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;

  /// {r + r^2}, sorted.
  std::vector<std::uint32_t> artin_schreier_image() const;
  /// Number of cosets of the image, counted by partitioning every element.
  std::size_t artin_schreier_class_count() const;

 private:
  unsigned k_;
  std::uint32_t modulus_;
};

/// The same coset count for F_2 through RingElement arithmetic.
std::size_t artin_schreier_class_count(const RingSpec& spec);

/// x -> t - x.
Involution standard_involution_quadratic(const QuadraticAlgebra& a);

struct SplitMaps {
  AlgebraPtr product;  // R x R
  LinearMap forward;   // a x + b -> (a + b, b)
  LinearMap backward;  // (r, s) -> (r - s) x + s
};

/// Requires (t, n) = (1, 0).
SplitMaps split_idempotent(const QuadraticAlgebra& a);

/// [[a, b], [s, t]] with a t - s b = 1.
SquareMatrix complete_basis_to_unity(const RingElement& a, const RingElement& b);

}  // namespace lowrank
