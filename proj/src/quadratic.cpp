#include "lowrank/quadratic.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace lowrank {

namespace {

RingElement two(const RingSpec& spec) { return RingElement(spec, 2); }

void require_two_unit(const RingSpec& spec, const char* what) {
  if (!two(spec).is_unit()) throw DomainError(std::string(what) + " requires 2 to be a unit in " + spec.name());
}

void require_char_two(const RingSpec& spec) {
  if (spec.characteristic() != 2) throw DomainError("expected a field of characteristic 2, got " + spec.name());
}

// Image of x under a map x -> c1 * y + c0 into b.
LinearMap affine_map(const QuadraticAlgebra& a, const QuadraticAlgebra& b, const RingElement& c1,
                     const RingElement& c0) {
  AlgebraPtr src = a.algebra(), dst = b.algebra();
  return LinearMap{src, dst, {AlgebraElement::one(dst), AlgebraElement(dst, {c0, c1})}};
}

IsomorphismResult verified(LinearMap map) {
  if (!verify_homomorphism(map) || !is_invertible(map)) {
    throw DomainError("internal error: constructed isomorphism failed verification");
  }
  return {true, std::move(map)};
}

}  // namespace

QuadraticAlgebra::QuadraticAlgebra(RingElement t_, RingElement n_) : t(std::move(t_)), n(std::move(n_)) {
  if (!(t.spec() == n.spec())) throw DomainError("t and n from different rings");
}

AlgebraPtr QuadraticAlgebra::algebra() const {
  const RingSpec& s = spec();
  RingElement zero = RingElement::zero(s), one = RingElement::one(s);
  return make_algebra(StructureConstants(s, {{{one, zero}, {zero, one}}, {{zero, one}, {-n, t}}}));
}

DiscriminantClass discriminant(const QuadraticAlgebra& a) {
  return {a.t * a.t - RingElement(a.spec(), 4) * a.n};
}

CompletedSquare complete_square(const QuadraticAlgebra& a) {
  require_two_unit(a.spec(), "completing the square");
  RingElement d = discriminant(a).representative;
  QuadraticAlgebra target(RingElement::zero(a.spec()), -d);
  RingElement half = two(a.spec()).inverse();
  LinearMap map = affine_map(a, target, half, a.t * half);
  if (!verify_homomorphism(map) || !is_invertible(map)) {
    throw DomainError("internal error: completed square failed verification");
  }
  return {d, target, map};
}

IsomorphismResult is_isomorphic_2unit(const QuadraticAlgebra& a, const QuadraticAlgebra& b) {
  const RingSpec& spec = a.spec();
  if (!(b.spec() == spec)) throw DomainError("quadratic algebras over different rings");
  require_two_unit(spec, "the discriminant isomorphism test");
  if (!spec.is_field()) throw DomainError("the discriminant isomorphism test needs a field");
  RingElement d = discriminant(a).representative, big_d = discriminant(b).representative;
  auto u = square_class_witness(d, big_d);
  if (!u) return {};
  RingElement half = two(spec).inverse();
  return verified(affine_map(a, b, *u, (a.t - *u * b.t) * half));
}

IsomorphismResult is_isomorphic_Z(const QuadraticAlgebra& a, const QuadraticAlgebra& b) {
  if (a.spec().kind() != RingKind::Integers || b.spec().kind() != RingKind::Integers) {
    throw DomainError("is_isomorphic_Z needs algebras over Z");
  }
  if (discriminant(a).representative != discriminant(b).representative) return {};
  BigInt diff = a.t.numerator() - b.t.numerator();
  if (diff % 2 != 0) return {};
  return verified(affine_map(a, b, RingElement::one(a.spec()), RingElement(a.spec(), BigInt(diff / 2))));
}

bool is_separable(const QuadraticAlgebra& a) {
  require_char_two(a.spec());
  return !a.t.is_zero();
}

std::vector<RingElement> artin_schreier_image(const RingSpec& spec) {
  require_char_two(spec);
  std::set<RingElement> image;
  for (const auto& r : field_elements(spec)) image.insert(r + r * r);
  return {image.begin(), image.end()};
}

bool operator==(const ArtinSchreierClass& a, const ArtinSchreierClass& b) {
  if (!(a.field == b.field)) return false;
  auto image = artin_schreier_image(a.field);
  RingElement diff = a.representative - b.representative;
  return std::find(image.begin(), image.end(), diff) != image.end();
}

ArtinSchreierClass artin_schreier_class(const QuadraticAlgebra& a) {
  if (!is_separable(a)) throw DomainError("Artin-Schreier class needs a separable algebra (t != 0)");
  RingElement inv_t = a.t.inverse();
  return {a.spec(), a.n * inv_t * inv_t};
}

std::size_t artin_schreier_class_count(const RingSpec& spec) {
  auto image = artin_schreier_image(spec);
  std::vector<RingElement> reps;
  for (const auto& x : field_elements(spec)) {
    bool seen = false;
    for (const auto& r : reps) {
      if (std::find(image.begin(), image.end(), x - r) != image.end()) seen = true;
    }
    if (!seen) reps.push_back(x);
  }
  return reps.size();
}

BinaryField::BinaryField(unsigned k) : k_(k) {
  static constexpr std::array<std::uint32_t, 9> kModuli{0, 0x3, 0x7, 0xB, 0x13, 0x25, 0x43, 0x83, 0x11B};
  if (k == 0 || k >= kModuli.size()) throw DomainError("BinaryField supports degrees 1 through 8");
  modulus_ = kModuli[k];
}

std::uint32_t BinaryField::mul(std::uint32_t a, std::uint32_t b) const {
  std::uint32_t product = 0;
  for (unsigned bit = 0; bit < k_; ++bit) {
    if (b & (1u << bit)) product ^= a << bit;
  }
  for (int bit = 2 * static_cast<int>(k_) - 2; bit >= static_cast<int>(k_); --bit) {
    if (product & (1u << bit)) product ^= modulus_ << (bit - static_cast<int>(k_));
  }
  return product;
}

std::vector<std::uint32_t> BinaryField::artin_schreier_image() const {
  std::set<std::uint32_t> image;
  for (std::uint32_t r = 0; r < size(); ++r) image.insert(add(r, mul(r, r)));
  return {image.begin(), image.end()};
}

std::size_t BinaryField::artin_schreier_class_count() const {
  auto image = artin_schreier_image();
  std::vector<std::uint32_t> reps;
  for (std::uint32_t x = 0; x < size(); ++x) {
    bool seen = std::any_of(reps.begin(), reps.end(), [&](std::uint32_t r) {
      return std::binary_search(image.begin(), image.end(), add(x, r));
    });
    if (!seen) reps.push_back(x);
  }
  return reps.size();
}

Involution standard_involution_quadratic(const QuadraticAlgebra& a) {
  return involution_from_trace(a.algebra(), {a.t});
}

SplitMaps split_idempotent(const QuadraticAlgebra& a) {
  const RingSpec& spec = a.spec();
  if (!a.t.is_one() || !a.n.is_zero()) throw DomainError("split_idempotent needs (t, n) = (1, 0)");
  AlgebraPtr src = a.algebra();
  AlgebraPtr f = make_algebra(StructureConstants(spec, {{Coeffs{RingElement::one(spec)}}}));
  AlgebraPtr ff = make_algebra(direct_product(*f, *f));
  auto pair = [&](const RingElement& r, const RingElement& s) {
    return product_element(ff, AlgebraElement::scalar(f, r), AlgebraElement::scalar(f, s));
  };
  RingElement zero = RingElement::zero(spec), one = RingElement::one(spec);
  LinearMap forward{src, ff, {pair(one, one), pair(one, zero)}};
  // Basis of R x R is (1,1), (0,1); (0,1) -> 1 - x.
  LinearMap backward{ff, src, {AlgebraElement::one(src), AlgebraElement(src, {one, -one})}};
  if (!verify_homomorphism(forward) || !verify_homomorphism(backward)) {
    throw DomainError("internal error: split maps failed verification");
  }
  return {ff, forward, backward};
}

SquareMatrix complete_basis_to_unity(const RingElement& a, const RingElement& b) {
  auto st = bezout(a, b);
  if (!st) throw DomainError("1 is not a combination of the given elements: gcd(" + a.to_string() + ", " +
                             b.to_string() + ") is not a unit");
  return SquareMatrix(a.spec(), {{a, b}, {st->s, st->t}});
}

}  // namespace lowrank
