#include "lowrank/polynomial.hpp"

namespace lowrank {

Polynomial::Polynomial(RingSpec spec, std::vector<RingElement> coeffs)
    : spec_(spec), coeffs_(std::move(coeffs)) {
  for (const auto& c : coeffs_) {
    if (!(c.spec() == spec_)) throw DomainError("polynomial coefficient from a different ring");
  }
  trim();
}

Polynomial Polynomial::constant(const RingElement& c) { return Polynomial(c.spec(), {c}); }

Polynomial Polynomial::monomial(RingSpec spec, unsigned k) {
  std::vector<RingElement> c(k + 1, RingElement::zero(spec));
  c[k] = RingElement::one(spec);
  return Polynomial(spec, std::move(c));
}

Polynomial Polynomial::linear_factor(const RingElement& root) {
  return Polynomial(root.spec(), {-root, RingElement::one(root.spec())});
}

void Polynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

RingElement Polynomial::coeff(std::size_t k) const {
  return k < coeffs_.size() ? coeffs_[k] : RingElement::zero(spec_);
}

RingElement Polynomial::evaluate(const RingElement& x) const {
  RingElement acc = RingElement::zero(spec_);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!(spec_ == other.spec_)) throw DomainError("ring mismatch in polynomial addition");
  if (coeffs_.size() < other.coeffs_.size()) coeffs_.resize(other.coeffs_.size(), RingElement::zero(spec_));
  for (std::size_t k = 0; k < other.coeffs_.size(); ++k) coeffs_[k] += other.coeffs_[k];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) { return *this += -other; }

Polynomial Polynomial::operator-() const {
  Polynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (!(a.spec_ == b.spec_)) throw DomainError("ring mismatch in polynomial product");
  if (a.is_zero() || b.is_zero()) return Polynomial(a.spec_);
  std::vector<RingElement> c(a.coeffs_.size() + b.coeffs_.size() - 1, RingElement::zero(a.spec_));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
    if (a.coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) c[i + j] += a.coeffs_[i] * b.coeffs_[j];
  }
  return Polynomial(a.spec_, std::move(c));
}

Polynomial operator*(const RingElement& c, const Polynomial& p) { return Polynomial::constant(c) * p; }

std::string Polynomial::to_string(const std::string& var) const {
  if (coeffs_.empty()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    const RingElement& c = coeffs_[static_cast<std::size_t>(k)];
    if (c.is_zero()) continue;
    std::string body = c.to_string();
    bool negative = spec_.kind() != RingKind::PrimeField && body[0] == '-';
    if (negative) body = body.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (k == 0) {
      out += body;
      continue;
    }
    if (body != "1") out += (body.find('/') != std::string::npos ? "(" + body + ")" : body) + "*";
    out += var;
    if (k > 1) out += "^" + std::to_string(k);
  }
  return out;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw DomainError("polynomial division by zero");
  if (!b.leading().is_unit()) throw DomainError("divisor leading coefficient is not a unit");
  const RingSpec spec = a.spec();
  RingElement lead_inv = b.leading().inverse();
  std::vector<RingElement> rem = a.coefficients();
  int db = b.degree();
  int da = a.degree();
  if (da < db) return {Polynomial(spec), a};
  std::vector<RingElement> quot(static_cast<std::size_t>(da - db + 1), RingElement::zero(spec));
  for (int k = da; k >= db; --k) {
    RingElement c = rem[static_cast<std::size_t>(k)] * lead_inv;
    quot[static_cast<std::size_t>(k - db)] = c;
    if (c.is_zero()) continue;
    for (int j = 0; j <= db; ++j) {
      rem[static_cast<std::size_t>(k - db + j)] -= c * b.coefficients()[static_cast<std::size_t>(j)];
    }
  }
  return {Polynomial(spec, std::move(quot)), Polynomial(spec, std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  if (!a.spec().is_field()) throw DomainError("polynomial gcd requires a field");
  Polynomial x = a, y = b;
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second;
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.leading().inverse() * x;
}

}  // namespace lowrank
