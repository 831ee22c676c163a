#pragma once

#include <array>
#include <functional>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "lowrank/matrix.hpp"
#include "lowrank/polynomial.hpp"
#include "lowrank/rings.hpp"

namespace lowrank {

using Coeffs = std::vector<RingElement>;

/// A free rank-k algebra given by structure constants: table[i][j] is the
/// coefficient vector of e_i * e_j. Basis element 0 is the identity.
class StructureConstants {
 public:
  /// Throws DomainError if the shape is wrong, rings differ, or e_0 is not a
  /// two-sided identity.
  StructureConstants(RingSpec spec, std::vector<std::vector<Coeffs>> table);

  const RingSpec& spec() const { return spec_; }
  std::size_t rank() const { return rank_; }

  const RingElement& coeff(std::size_t i, std::size_t j, std::size_t l) const {
    return table_[(i * rank_ + j) * rank_ + l];
  }
  Coeffs product(std::size_t i, std::size_t j) const;

  /// Bilinear expansion of x*y through the table.
  Coeffs multiply(std::span<const RingElement> x, std::span<const RingElement> y) const;

  std::vector<std::vector<Coeffs>> table() const;

  friend bool operator==(const StructureConstants& a, const StructureConstants& b) {
    return a.spec_ == b.spec_ && a.rank_ == b.rank_ && a.table_ == b.table_;
  }

 private:
  RingSpec spec_;
  std::size_t rank_;
  std::vector<RingElement> table_;
};

using AlgebraPtr = std::shared_ptr<const StructureConstants>;

inline AlgebraPtr make_algebra(StructureConstants sc) {
  return std::make_shared<const StructureConstants>(std::move(sc));
}

class AlgebraElement {
 public:
  AlgebraElement(AlgebraPtr algebra, Coeffs coeffs);

  static AlgebraElement zero(const AlgebraPtr& a);
  static AlgebraElement one(const AlgebraPtr& a);
  static AlgebraElement basis(const AlgebraPtr& a, std::size_t i);
  static AlgebraElement scalar(const AlgebraPtr& a, const RingElement& r);

  const AlgebraPtr& algebra() const { return algebra_; }
  const Coeffs& coeffs() const { return coeffs_; }
  const RingElement& coeff(std::size_t i) const { return coeffs_[i]; }
  const RingSpec& spec() const { return algebra_->spec(); }

  /// True when the element lies in R*1.
  bool is_scalar() const;

  AlgebraElement& operator+=(const AlgebraElement& other);
  AlgebraElement& operator-=(const AlgebraElement& other);
  friend AlgebraElement operator+(AlgebraElement a, const AlgebraElement& b) { return a += b; }
  friend AlgebraElement operator-(AlgebraElement a, const AlgebraElement& b) { return a -= b; }
  AlgebraElement operator-() const;
  friend AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y);
  friend AlgebraElement operator*(const RingElement& c, AlgebraElement x);
  friend AlgebraElement operator+(const RingElement& c, AlgebraElement x);
  friend AlgebraElement operator+(AlgebraElement x, const RingElement& c) { return c + std::move(x); }

  friend bool operator==(const AlgebraElement& a, const AlgebraElement& b) {
    return a.coeffs_ == b.coeffs_ && same_algebra(a.algebra_, b.algebra_);
  }

  /// Default names are 1, e2, e3, ...; pass names to override.
  std::string to_string(const std::vector<std::string>& names = {}) const;

  static bool same_algebra(const AlgebraPtr& a, const AlgebraPtr& b);

 private:
  void require_same_algebra(const AlgebraElement& other) const;

  AlgebraPtr algebra_;
  Coeffs coeffs_;
};

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y);

struct AssociativityResult {
  bool associative = true;
  /// First basis triple (a, b, c), in lexicographic order, with (e_a e_b) e_c != e_a (e_b e_c).
  std::optional<std::array<std::size_t, 3>> witness;
};

AssociativityResult verify_associativity(const StructureConstants& a);
bool is_commutative(const StructureConstants& a);

/// Matrix of left multiplication by x: column j is x * e_j.
SquareMatrix left_regular_rep(const AlgebraElement& x);

/// f(x) with the constant term read as f_0 * 1.
AlgebraElement evaluate(const Polynomial& f, const AlgebraElement& x);

/// Least-degree monic f with f(x) = 0; requires a field.
Polynomial min_poly(const AlgebraElement& x);

/// Calls visit on every element of a finite algebra in lexicographic order
/// of coefficient vectors.
void for_each_element(const AlgebraPtr& a, const std::function<void(const AlgebraElement&)>& visit);
std::uint64_t element_count(const StructureConstants& a);

/// Maximum min_poly degree over every element; prime fields only, guarded.
unsigned algebra_degree(const AlgebraPtr& a);

/// A x B with basis (1,1), (e_i,0) for i >= 1, (0,f_j) for j >= 0.
StructureConstants direct_product(const StructureConstants& a, const StructureConstants& b);
/// The element (x, y) of A x B.
AlgebraElement product_element(const AlgebraPtr& product, const AlgebraElement& x, const AlgebraElement& y);
/// Splits an element of A x B back into its components.
std::pair<Coeffs, Coeffs> split_product_element(const AlgebraElement& z, std::size_t rank_a);

/// M_n(R) with basis Id, then E_ab for (a,b) != (0,0) in row-major order.
StructureConstants matrix_algebra(RingSpec spec, std::size_t n);
/// E_ab (zero-based indices) as an element of matrix_algebra(spec, n).
AlgebraElement matrix_unit(const AlgebraPtr& mn, std::size_t n, std::size_t row, std::size_t col);
/// The element of matrix_algebra(spec, n) representing the given n x n matrix.
AlgebraElement matrix_element(const AlgebraPtr& mn, const SquareMatrix& m);

/// Structure constants in the basis new_basis[0..k), each given by its
/// coordinates in the old basis. new_basis[0] must be 1 and the change of
/// basis must be invertible over R.
StructureConstants change_basis(const StructureConstants& a, const std::vector<Coeffs>& new_basis);

/// R-linear map between algebras, stored by the images of source basis elements.
struct LinearMap {
  AlgebraPtr source;
  AlgebraPtr target;
  std::vector<AlgebraElement> images;

  AlgebraElement apply(const AlgebraElement& x) const;
  /// Column j is the coordinate vector of images[j].
  SquareMatrix matrix() const;
};

/// phi(1) = 1 and phi(e_i e_j) = phi(e_i) phi(e_j) for every basis pair.
bool verify_homomorphism(const LinearMap& map);
/// Same rank and unit determinant.
bool is_invertible(const LinearMap& map);

}  // namespace lowrank
