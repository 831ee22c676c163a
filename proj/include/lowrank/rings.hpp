#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "lowrank/errors.hpp"

namespace lowrank {

using BigInt = boost::multiprecision::cpp_int;

enum class RingKind { Integers, Rationals, PrimeField };

/// The coefficient domain: the integers, the rationals, or F_p for a prime p.
class RingSpec {
 public:
  static RingSpec integers() { return RingSpec(RingKind::Integers, 0); }
  static RingSpec rationals() { return RingSpec(RingKind::Rationals, 0); }
  /// Throws DomainError unless p is prime.
  static RingSpec prime_field(std::uint64_t p);

  RingKind kind() const { return kind_; }
  /// The prime p for F_p, 0 otherwise.
  std::uint64_t modulus() const { return modulus_; }
  std::uint64_t characteristic() const { return modulus_; }
  bool is_field() const { return kind_ != RingKind::Integers; }
  bool is_finite() const { return kind_ == RingKind::PrimeField; }

  /// "Z", "Q" or "F_p".
  std::string name() const;

  friend bool operator==(const RingSpec&, const RingSpec&) = default;

 private:
  RingSpec(RingKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  RingKind kind_;
  std::uint64_t modulus_;
};

bool is_prime(std::uint64_t n);

/// An exact scalar. The value is always canonical: integers as-is, rationals
/// reduced with a positive denominator, prime-field residues in [0, p).
class RingElement {
 public:
  RingElement(RingSpec spec, const BigInt& value);
  RingElement(RingSpec spec, std::int64_t value) : RingElement(spec, BigInt(value)) {}
  /// num/den; only meaningful for rationals and prime fields (den must be a unit).
  RingElement(RingSpec spec, const BigInt& num, const BigInt& den);

  static RingElement zero(RingSpec spec) { return RingElement(spec, BigInt(0)); }
  static RingElement one(RingSpec spec) { return RingElement(spec, BigInt(1)); }
  /// Parses "-3", "2/7", "4". Throws InputError on malformed text.
  static RingElement parse(RingSpec spec, std::string_view text);

  const RingSpec& spec() const { return spec_; }
  const BigInt& numerator() const { return num_; }
  const BigInt& denominator() const { return den_; }

  bool is_zero() const { return num_ == 0; }
  bool is_one() const { return num_ == 1 && den_ == 1; }
  bool is_unit() const;

  /// Throws DomainError when this is not a unit.
  RingElement inverse() const;
  RingElement pow(unsigned exponent) const;

  RingElement operator-() const;
  RingElement& operator+=(const RingElement& other);
  RingElement& operator-=(const RingElement& other);
  RingElement& operator*=(const RingElement& other);
  /// Division by a unit only.
  RingElement& operator/=(const RingElement& other);

  friend RingElement operator+(RingElement a, const RingElement& b) { return a += b; }
  friend RingElement operator-(RingElement a, const RingElement& b) { return a -= b; }
  friend RingElement operator*(RingElement a, const RingElement& b) { return a *= b; }
  friend RingElement operator/(RingElement a, const RingElement& b) { return a /= b; }

  friend bool operator==(const RingElement& a, const RingElement& b) {
    return a.spec_ == b.spec_ && a.num_ == b.num_ && a.den_ == b.den_;
  }

  /// Total order on canonical encodings, used for reproducible output ordering.
  friend bool operator<(const RingElement& a, const RingElement& b);

  std::string to_string() const;

  /// Re-canonicalizes in place; a no-op on any constructed value.
  void canonicalize();

 private:
  void require_same_ring(const RingElement& other) const;

  RingSpec spec_;
  BigInt num_;
  BigInt den_;
};

std::uint64_t characteristic(const RingSpec& spec);
bool is_unit(const RingElement& a);

/// Exact quotient a/b where b divides a in R. Over Z this is integer division
/// that must leave no remainder; over fields it is ordinary division.
RingElement exact_divide(const RingElement& a, const RingElement& b);

/// Returns a unit u with d = u^2 * D when one exists.
std::optional<RingElement> square_class_witness(const RingElement& d, const RingElement& D);
bool square_class_equal(const RingElement& d, const RingElement& D);

struct BezoutPair {
  RingElement s;
  RingElement t;
};

/// Solves a*t - s*b = 1. Returns nullopt when gcd(a, b) is not a unit.
std::optional<BezoutPair> bezout(const RingElement& a, const RingElement& b);

/// Every element of F_p in order 0, 1, ..., p-1.
std::vector<RingElement> field_elements(const RingSpec& spec);

}  // namespace lowrank
