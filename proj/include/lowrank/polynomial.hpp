#pragma once

#include <string>
#include <utility>
#include <vector>

#include "lowrank/rings.hpp"

namespace lowrank {

/// Univariate polynomial over a RingSpec, coefficients stored low degree first
/// with no trailing zeros.
class Polynomial {
 public:
  explicit Polynomial(RingSpec spec) : spec_(spec) {}
  Polynomial(RingSpec spec, std::vector<RingElement> coeffs);

  static Polynomial constant(const RingElement& c);
  /// T^k
  static Polynomial monomial(RingSpec spec, unsigned k);
  /// T - root
  static Polynomial linear_factor(const RingElement& root);

  const RingSpec& spec() const { return spec_; }
  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back().is_one(); }
  /// Coefficient of T^k (zero past the degree).
  RingElement coeff(std::size_t k) const;
  const RingElement& leading() const { return coeffs_.back(); }
  const std::vector<RingElement>& coefficients() const { return coeffs_; }

  RingElement evaluate(const RingElement& x) const;

  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const RingElement& c, const Polynomial& p);
  Polynomial operator-() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.spec_ == b.spec_ && a.coeffs_ == b.coeffs_;
  }

  /// e.g. "T^3 - T"
  std::string to_string(const std::string& var = "T") const;

 private:
  void trim();

  RingSpec spec_;
  std::vector<RingElement> coeffs_;
};

/// Quotient and remainder; the divisor must have a unit leading coefficient.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
/// Monic gcd over a field.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

}  // namespace lowrank
