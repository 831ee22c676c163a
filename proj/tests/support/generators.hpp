#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "lowrank/algebra.hpp"
#include "lowrank/rings.hpp"

namespace lowrank::testing {

// Seeded so every run exercises the same samples.
class Gen {
 public:
  explicit Gen(std::uint64_t seed = 0x5eed) : rng_(seed) {}

  std::int64_t integer(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(rng_);
  }

  bool coin() { return integer(0, 1) == 1; }

  RingElement element(const RingSpec& spec, std::int64_t bound = 10) {
    switch (spec.kind()) {
      case RingKind::Integers:
        return RingElement(spec, integer(-bound, bound));
      case RingKind::Rationals: {
        std::int64_t den = integer(1, bound);
        return RingElement(spec, BigInt(integer(-bound, bound)), BigInt(den));
      }
      case RingKind::PrimeField:
        return RingElement(spec, integer(0, static_cast<std::int64_t>(spec.modulus()) - 1));
    }
    return RingElement::zero(spec);
  }

  RingElement nonzero(const RingSpec& spec, std::int64_t bound = 10) {
    while (true) {
      RingElement e = element(spec, bound);
      if (!e.is_zero()) return e;
    }
  }

  Coeffs vector(const RingSpec& spec, std::size_t k, std::int64_t bound = 10) {
    Coeffs out;
    out.reserve(k);
    for (std::size_t i = 0; i < k; ++i) out.push_back(element(spec, bound));
    return out;
  }

  AlgebraElement algebra_element(const AlgebraPtr& a, std::int64_t bound = 10) {
    return AlgebraElement(a, vector(a->spec(), a->rank(), bound));
  }

  SquareMatrix matrix(const RingSpec& spec, std::size_t n, std::int64_t bound = 10) {
    SquareMatrix m(spec, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) m.at(r, c) = element(spec, bound);
    }
    return m;
  }

 private:
  std::mt19937_64 rng_;
};

inline RingElement el(const RingSpec& spec, std::int64_t v) { return RingElement(spec, v); }

inline Coeffs vec(const RingSpec& spec, std::initializer_list<std::int64_t> values) {
  Coeffs out;
  for (auto v : values) out.emplace_back(spec, v);
  return out;
}

}  // namespace lowrank::testing
