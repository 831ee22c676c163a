#include "lowrank/involutions.hpp"

#include "lowrank/guards.hpp"

namespace lowrank {

AlgebraElement Involution::apply(const AlgebraElement& x) const {
  if (!AlgebraElement::same_algebra(x.algebra(), algebra)) throw DomainError("element is not in the involution's algebra");
  AlgebraElement out = AlgebraElement::zero(algebra);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (!x.coeff(i).is_zero()) out += x.coeff(i) * images[i];
  }
  return out;
}

InvolutionCheck verify_involution(const Involution& inv) {
  const AlgebraPtr& a = inv.algebra;
  const std::size_t k = a->rank();
  if (inv.images.size() != k) return {false, "identity", std::nullopt};
  if (inv.images[0] != AlgebraElement::one(a)) return {false, "identity", std::pair<std::size_t, std::size_t>{0, 0}};
  for (std::size_t i = 0; i < k; ++i) {
    if (inv.apply(inv.images[i]) != AlgebraElement::basis(a, i)) {
      return {false, "order", std::pair<std::size_t, std::size_t>{i, i}};
    }
  }
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      AlgebraElement lhs = inv.apply(AlgebraElement::basis(a, i) * AlgebraElement::basis(a, j));
      if (lhs != inv.images[j] * inv.images[i]) {
        return {false, "anti-multiplicative", std::pair<std::size_t, std::size_t>{i, j}};
      }
    }
  }
  return {};
}

bool verify_standard(const Involution& inv) {
  if (!verify_involution(inv).ok) return false;
  const AlgebraPtr& a = inv.algebra;
  const std::size_t k = a->rank();
  for (std::size_t i = 0; i < k; ++i) {
    if (!(AlgebraElement::basis(a, i) * inv.images[i]).is_scalar()) return false;
    for (std::size_t j = i + 1; j < k; ++j) {
      AlgebraElement s = AlgebraElement::basis(a, i) + AlgebraElement::basis(a, j);
      if (!(s * (inv.images[i] + inv.images[j])).is_scalar()) return false;
    }
  }
  return true;
}

RingElement trace(const Involution& inv, const AlgebraElement& x) {
  AlgebraElement s = x + inv.apply(x);
  if (!s.is_scalar()) throw DomainError("x + xbar is not a scalar; the involution is not standard");
  return s.coeff(0);
}

RingElement norm(const Involution& inv, const AlgebraElement& x) {
  AlgebraElement p = x * inv.apply(x);
  if (!p.is_scalar()) throw DomainError("x xbar is not a scalar; the involution is not standard");
  return p.coeff(0);
}

QuadraticCertificate quadratic_certificate(const Involution& inv, const AlgebraElement& x) {
  QuadraticCertificate c{trace(inv, x), norm(inv, x)};
  if (x * x - c.t * x + c.n != AlgebraElement::zero(x.algebra())) {
    throw DomainError("x^2 - t(x) x + n(x) does not vanish");
  }
  return c;
}

Involution involution_from_trace(const AlgebraPtr& a, const std::vector<RingElement>& t_values) {
  const std::size_t k = a->rank();
  if (t_values.size() + 1 != k) throw DomainError("trace needs one value per non-identity basis element");
  Involution inv{a, {AlgebraElement::one(a)}};
  for (std::size_t i = 1; i < k; ++i) {
    inv.images.push_back(t_values[i - 1] + (-AlgebraElement::basis(a, i)));
  }
  return inv;
}

std::optional<Involution> find_standard_involution(const AlgebraPtr& a) {
  const std::size_t k = a->rank();
  std::vector<RingElement> t_values;
  for (std::size_t i = 1; i < k; ++i) {
    Coeffs sq = a->product(i, i);
    for (std::size_t l = 1; l < k; ++l) {
      if (l != i && !sq[l].is_zero()) return std::nullopt;
    }
    t_values.push_back(sq[i]);
  }
  Involution inv = involution_from_trace(a, t_values);
  if (!verify_standard(inv)) return std::nullopt;
  return inv;
}

std::vector<Involution> standard_involutions_bruteforce(const AlgebraPtr& a) {
  const RingSpec& spec = a->spec();
  if (!spec.is_finite()) throw DomainError("brute-force involution search needs a prime field");
  const std::size_t k = a->rank();
  if (k > 4) throw DomainError("brute-force involution search is limited to rank 4");
  enforce_guard(saturating_pow(spec.modulus(), k - 1), kAlgebraDegreeGuard, "standard involution search");
  const std::vector<RingElement> values = field_elements(spec);
  std::vector<Involution> found;
  std::vector<std::size_t> digits(k - 1, 0);
  while (true) {
    std::vector<RingElement> t;
    for (auto d : digits) t.push_back(values[d]);
    Involution inv = involution_from_trace(a, t);
    if (verify_standard(inv)) found.push_back(std::move(inv));
    std::size_t pos = digits.size();
    bool done = true;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < values.size()) {
        done = false;
        break;
      }
      digits[pos] = 0;
    }
    if (done) break;
  }
  return found;
}

AlgebraPtr quaternion_algebra(const RingElement& a, const RingElement& b) {
  const RingSpec spec = a.spec();
  if (!(b.spec() == spec)) throw DomainError("quaternion parameters from different rings");
  if (spec.characteristic() == 2) throw DomainError("quaternion algebras need 2 to be nonzero");
  if (!a.is_unit() || !b.is_unit()) throw DomainError("quaternion parameters must be units");
  // Basis index alpha + 2*beta stands for i^alpha j^beta.
  std::vector<std::vector<Coeffs>> table(4, std::vector<Coeffs>(4));
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = 0; y < 4; ++y) {
      std::size_t a1 = x & 1, b1 = x >> 1, a2 = y & 1, b2 = y >> 1;
      RingElement c = RingElement::one(spec);
      if (b1 && a2) c = -c;
      if (a1 && a2) c *= a;
      if (b1 && b2) c *= b;
      Coeffs entry(4, RingElement::zero(spec));
      entry[(a1 ^ a2) | ((b1 ^ b2) << 1)] = c;
      table[x][y] = std::move(entry);
    }
  }
  return make_algebra(StructureConstants(spec, std::move(table)));
}

Involution quaternion_conjugation(const RingElement& a, const RingElement& b) {
  AlgebraPtr q = quaternion_algebra(a, b);
  Involution inv{q, {AlgebraElement::one(q)}};
  for (std::size_t i = 1; i < 4; ++i) inv.images.push_back(-AlgebraElement::basis(q, i));
  return inv;
}

Involution m2_adjoint(const RingSpec& spec) {
  AlgebraPtr m2 = make_algebra(matrix_algebra(spec, 2));
  Involution inv{m2, {}};
  for (std::size_t i = 0; i < 4; ++i) {
    SquareMatrix e(spec, 2);
    if (i == 0) {
      e = SquareMatrix::identity(spec, 2);
    } else {
      e.at(i / 2, i % 2) = RingElement::one(spec);
    }
    SquareMatrix adj(spec, {{e.at(1, 1), -e.at(0, 1)}, {-e.at(1, 0), e.at(0, 0)}});
    inv.images.push_back(matrix_element(m2, adj));
  }
  return inv;
}

Involution pair_swap(const RingSpec& spec) {
  AlgebraPtr f = make_algebra(StructureConstants(spec, {{Coeffs{RingElement::one(spec)}}}));
  AlgebraPtr ff = make_algebra(direct_product(*f, *f));
  AlgebraElement left = product_element(ff, AlgebraElement::one(f), AlgebraElement::zero(f));
  return Involution{ff, {AlgebraElement::one(ff), left}};
}

}  // namespace lowrank
