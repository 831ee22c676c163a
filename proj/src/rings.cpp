#include "lowrank/rings.hpp"

#include <cctype>

namespace lowrank {

namespace {

BigInt floor_mod(const BigInt& a, std::uint64_t p) {
  BigInt r = a % p;
  if (r < 0) r += p;
  return r;
}

// Extended Euclid on integers: returns (g, x, y) with a*x + b*y = g >= 0.
struct ExtGcd {
  BigInt g, x, y;
};

ExtGcd extended_gcd(const BigInt& a, const BigInt& b) {
  BigInt old_r = a, r = b;
  BigInt old_x = 1, x = 0;
  BigInt old_y = 0, y = 1;
  while (r != 0) {
    BigInt q = old_r / r;
    BigInt tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_x - q * x;
    old_x = x;
    x = tmp;
    tmp = old_y - q * y;
    old_y = y;
    y = tmp;
  }
  if (old_r < 0) {
    old_r = -old_r;
    old_x = -old_x;
    old_y = -old_y;
  }
  return {old_r, old_x, old_y};
}

BigInt mod_inverse(const BigInt& a, std::uint64_t p) {
  ExtGcd e = extended_gcd(floor_mod(a, p), BigInt(p));
  if (e.g != 1) throw DomainError("element is not invertible modulo " + std::to_string(p));
  return floor_mod(e.x, p);
}

bool is_perfect_square(const BigInt& n) {
  if (n < 0) return false;
  BigInt r = boost::multiprecision::sqrt(n);
  return r * r == n;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d) {
    if (n % d == 0) return false;
  }
  return true;
}

RingSpec RingSpec::prime_field(std::uint64_t p) {
  if (!is_prime(p)) throw DomainError("prime-field modulus " + std::to_string(p) + " is not prime");
  return RingSpec(RingKind::PrimeField, p);
}

std::string RingSpec::name() const {
  switch (kind_) {
    case RingKind::Integers:
      return "Z";
    case RingKind::Rationals:
      return "Q";
    case RingKind::PrimeField:
      return "F_" + std::to_string(modulus_);
  }
  return "?";
}

RingElement::RingElement(RingSpec spec, const BigInt& value) : spec_(spec), num_(value), den_(1) {
  canonicalize();
}

RingElement::RingElement(RingSpec spec, const BigInt& num, const BigInt& den)
    : spec_(spec), num_(num), den_(den) {
  if (den_ == 0) throw DomainError("zero denominator");
  if (spec_.kind() == RingKind::Integers) {
    if (num_ % den_ != 0) throw DomainError("fraction is not an integer");
    num_ /= den_;
    den_ = 1;
  }
  canonicalize();
}

void RingElement::canonicalize() {
  switch (spec_.kind()) {
    case RingKind::Integers:
      den_ = 1;
      break;
    case RingKind::Rationals: {
      if (den_ < 0) {
        den_ = -den_;
        num_ = -num_;
      }
      BigInt g = boost::multiprecision::gcd(num_, den_);
      if (g < 0) g = -g;
      if (g > 1) {
        num_ /= g;
        den_ /= g;
      }
      if (num_ == 0) den_ = 1;
      break;
    }
    case RingKind::PrimeField: {
      const std::uint64_t p = spec_.modulus();
      if (den_ != 1) {
        num_ = floor_mod(num_ * mod_inverse(den_, p), p);
        den_ = 1;
      } else {
        num_ = floor_mod(num_, p);
      }
      break;
    }
  }
}

RingElement RingElement::parse(RingSpec spec, std::string_view text) {
  auto parse_int = [&](std::string_view s) -> BigInt {
    std::size_t start = 0;
    if (!s.empty() && (s[0] == '-' || s[0] == '+')) start = 1;
    if (start >= s.size()) throw InputError("malformed ring element: '" + std::string(text) + "'");
    for (std::size_t i = start; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) {
        throw InputError("malformed ring element: '" + std::string(text) + "'");
      }
    }
    return BigInt(std::string(s[0] == '+' ? s.substr(1) : s));
  };
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return RingElement(spec, parse_int(text));
  BigInt num = parse_int(text.substr(0, slash));
  BigInt den = parse_int(text.substr(slash + 1));
  if (den == 0) throw InputError("zero denominator in '" + std::string(text) + "'");
  if (spec.kind() == RingKind::Integers && num % den != 0) {
    throw InputError("'" + std::string(text) + "' is not an integer");
  }
  try {
    return RingElement(spec, num, den);
  } catch (const DomainError& e) {
    throw InputError(std::string("'") + std::string(text) + "': " + e.what());
  }
}

bool RingElement::is_unit() const {
  switch (spec_.kind()) {
    case RingKind::Integers:
      return num_ == 1 || num_ == -1;
    case RingKind::Rationals:
    case RingKind::PrimeField:
      return num_ != 0;
  }
  return false;
}

RingElement RingElement::inverse() const {
  if (!is_unit()) throw DomainError(to_string() + " is not a unit in " + spec_.name());
  switch (spec_.kind()) {
    case RingKind::Integers:
      return *this;
    case RingKind::Rationals:
      return RingElement(spec_, den_, num_);
    case RingKind::PrimeField:
      return RingElement(spec_, mod_inverse(num_, spec_.modulus()));
  }
  return *this;
}

RingElement RingElement::pow(unsigned exponent) const {
  RingElement result = one(spec_);
  RingElement base = *this;
  while (exponent > 0) {
    if (exponent & 1U) result *= base;
    base *= base;
    exponent >>= 1U;
  }
  return result;
}

void RingElement::require_same_ring(const RingElement& other) const {
  if (!(spec_ == other.spec_)) {
    throw DomainError("ring mismatch: " + spec_.name() + " vs " + other.spec_.name());
  }
}

RingElement RingElement::operator-() const {
  RingElement r = *this;
  r.num_ = -r.num_;
  if (spec_.kind() == RingKind::PrimeField && r.num_ != 0) r.num_ += spec_.modulus();
  return r;
}

RingElement& RingElement::operator+=(const RingElement& other) {
  require_same_ring(other);
  if (spec_.kind() == RingKind::Rationals) {
    if (den_ == other.den_) {
      num_ += other.num_;
    } else {
      num_ = num_ * other.den_ + other.num_ * den_;
      den_ *= other.den_;
    }
    canonicalize();
  } else {
    num_ += other.num_;
    if (spec_.kind() == RingKind::PrimeField && num_ >= spec_.modulus()) num_ -= spec_.modulus();
  }
  return *this;
}

RingElement& RingElement::operator-=(const RingElement& other) {
  require_same_ring(other);
  if (spec_.kind() == RingKind::Rationals) {
    if (den_ == other.den_) {
      num_ -= other.num_;
    } else {
      num_ = num_ * other.den_ - other.num_ * den_;
      den_ *= other.den_;
    }
    canonicalize();
  } else {
    num_ -= other.num_;
    if (spec_.kind() == RingKind::PrimeField && num_ < 0) num_ += spec_.modulus();
  }
  return *this;
}

RingElement& RingElement::operator*=(const RingElement& other) {
  require_same_ring(other);
  num_ *= other.num_;
  switch (spec_.kind()) {
    case RingKind::Integers:
      break;
    case RingKind::Rationals:
      den_ *= other.den_;
      canonicalize();
      break;
    case RingKind::PrimeField:
      num_ %= spec_.modulus();
      break;
  }
  return *this;
}

RingElement& RingElement::operator/=(const RingElement& other) {
  require_same_ring(other);
  return *this *= other.inverse();
}

bool operator<(const RingElement& a, const RingElement& b) {
  if (a.num_ * b.den_ != b.num_ * a.den_) return a.num_ * b.den_ < b.num_ * a.den_;
  return a.den_ < b.den_;
}

std::string RingElement::to_string() const {
  std::string s = num_.str();
  if (den_ != 1) s += "/" + den_.str();
  return s;
}

std::uint64_t characteristic(const RingSpec& spec) { return spec.characteristic(); }

bool is_unit(const RingElement& a) { return a.is_unit(); }

RingElement exact_divide(const RingElement& a, const RingElement& b) {
  if (a.spec().kind() != RingKind::Integers) return a / b;
  if (!(a.spec() == b.spec())) throw DomainError("ring mismatch in exact division");
  if (b.is_zero()) throw DomainError("division by zero");
  if (a.numerator() % b.numerator() != 0) {
    throw DomainError(b.to_string() + " does not divide " + a.to_string());
  }
  return RingElement(a.spec(), BigInt(a.numerator() / b.numerator()));
}

std::optional<RingElement> square_class_witness(const RingElement& d, const RingElement& D) {
  if (!(d.spec() == D.spec())) throw DomainError("ring mismatch in square-class comparison");
  const RingSpec& spec = d.spec();
  if (d.is_zero() || D.is_zero()) {
    if (d.is_zero() && D.is_zero()) return RingElement::one(spec);
    return std::nullopt;
  }
  switch (spec.kind()) {
    case RingKind::Integers:
      // Units are {+1, -1}, both squaring to 1.
      if (d == D) return RingElement::one(spec);
      return std::nullopt;
    case RingKind::Rationals: {
      RingElement ratio = d / D;
      if (ratio.numerator() < 0) return std::nullopt;
      if (!is_perfect_square(ratio.numerator()) || !is_perfect_square(ratio.denominator())) {
        return std::nullopt;
      }
      return RingElement(spec, boost::multiprecision::sqrt(ratio.numerator()),
                         boost::multiprecision::sqrt(ratio.denominator()));
    }
    case RingKind::PrimeField: {
      for (std::uint64_t a = 1; a < spec.modulus(); ++a) {
        RingElement u(spec, BigInt(a));
        if (u * u * D == d) return u;
      }
      return std::nullopt;
    }
  }
  return std::nullopt;
}

bool square_class_equal(const RingElement& d, const RingElement& D) {
  return square_class_witness(d, D).has_value();
}

std::optional<BezoutPair> bezout(const RingElement& a, const RingElement& b) {
  if (!(a.spec() == b.spec())) throw DomainError("ring mismatch in bezout");
  const RingSpec& spec = a.spec();
  if (spec.is_field()) {
    if (!a.is_zero()) return BezoutPair{RingElement::zero(spec), a.inverse()};
    if (!b.is_zero()) return BezoutPair{-b.inverse(), RingElement::zero(spec)};
    return std::nullopt;
  }
  // a*x + b*y = g  =>  t = x, s = -y when g = 1.
  ExtGcd e = extended_gcd(a.numerator(), b.numerator());
  if (e.g != 1) return std::nullopt;
  return BezoutPair{RingElement(spec, BigInt(-e.y)), RingElement(spec, e.x)};
}

std::vector<RingElement> field_elements(const RingSpec& spec) {
  if (!spec.is_finite()) throw DomainError(spec.name() + " is not a finite field");
  std::vector<RingElement> out;
  out.reserve(spec.modulus());
  for (std::uint64_t v = 0; v < spec.modulus(); ++v) out.emplace_back(spec, BigInt(v));
  return out;
}

}  // namespace lowrank
