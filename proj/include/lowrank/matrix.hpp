#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lowrank/polynomial.hpp"
#include "lowrank/rings.hpp"

namespace lowrank {

/// Dense n x n matrix over a single RingSpec, row-major.
class SquareMatrix {
 public:
  SquareMatrix(RingSpec spec, std::size_t n);
  /// Throws DomainError for ragged or non-square input.
  SquareMatrix(RingSpec spec, const std::vector<std::vector<RingElement>>& rows);

  static SquareMatrix identity(RingSpec spec, std::size_t n);
  static SquareMatrix diagonal(RingSpec spec, const std::vector<RingElement>& diag);

  const RingSpec& spec() const { return spec_; }
  std::size_t size() const { return n_; }

  RingElement& at(std::size_t row, std::size_t col) { return entries_[row * n_ + col]; }
  const RingElement& at(std::size_t row, std::size_t col) const { return entries_[row * n_ + col]; }

  std::vector<RingElement> column(std::size_t col) const;
  void set_column(std::size_t col, const std::vector<RingElement>& values);
  std::vector<std::vector<RingElement>> rows() const;

  bool is_lower_triangular() const;

  SquareMatrix& operator+=(const SquareMatrix& other);
  SquareMatrix& operator-=(const SquareMatrix& other);
  friend SquareMatrix operator+(SquareMatrix a, const SquareMatrix& b) { return a += b; }
  friend SquareMatrix operator-(SquareMatrix a, const SquareMatrix& b) { return a -= b; }
  friend SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b);
  friend SquareMatrix operator*(const RingElement& c, SquareMatrix m);
  friend std::vector<RingElement> operator*(const SquareMatrix& m, const std::vector<RingElement>& v);

  friend bool operator==(const SquareMatrix& a, const SquareMatrix& b) {
    return a.spec_ == b.spec_ && a.n_ == b.n_ && a.entries_ == b.entries_;
  }

  std::string to_string() const;

 private:
  RingSpec spec_;
  std::size_t n_;
  std::vector<RingElement> entries_;
};

/// Fraction-free Bareiss elimination; exact over Z and over fields.
RingElement determinant(const SquareMatrix& m);

/// Inverse when the determinant is a unit of the ring, otherwise nullopt.
std::optional<SquareMatrix> inverse(const SquareMatrix& m);

/// det(T*Id - M), cofactor expansion with polynomial entries for n <= 4 and the
/// division-free Berkowitz recursion above that.
Polynomial char_poly(const SquareMatrix& m);
Polynomial char_poly_cofactor(const SquareMatrix& m);
Polynomial char_poly_berkowitz(const SquareMatrix& m);

/// Solves sum_k x_k * columns[k] = rhs over a field; nullopt if inconsistent.
/// When the columns are dependent, free variables are set to zero.
std::optional<std::vector<RingElement>> solve_linear(const std::vector<std::vector<RingElement>>& columns,
                                                     const std::vector<RingElement>& rhs);

/// Rank of the given vectors over a field.
std::size_t vector_rank(const std::vector<std::vector<RingElement>>& vectors);

}  // namespace lowrank
