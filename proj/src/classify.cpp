#include "lowrank/classify.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "lowrank/guards.hpp"
#include "lowrank/involutions.hpp"

namespace lowrank {

namespace {

std::string tuple_string(const CubicCoefficients& k) {
  std::string out = "(";
  auto v = k.as_vector();
  for (std::size_t i = 0; i < v.size(); ++i) out += (i ? "," : "") + v[i].to_string();
  return out + ")";
}

// Structure constants reduced to machine words for the isomorphism search.
class SmallAlgebra {
 public:
  explicit SmallAlgebra(const StructureConstants& a) : p_(a.spec().modulus()), k_(a.rank()), c_(k_ * k_ * k_) {
    for (std::size_t i = 0; i < k_; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        for (std::size_t l = 0; l < k_; ++l) c_[(i * k_ + j) * k_ + l] = to_word(a.coeff(i, j, l));
      }
    }
  }

  static std::uint32_t to_word(const RingElement& e) { return static_cast<std::uint32_t>(e.numerator()); }

  std::uint32_t p() const { return p_; }
  std::size_t k() const { return k_; }
  std::uint32_t c(std::size_t i, std::size_t j, std::size_t l) const { return c_[(i * k_ + j) * k_ + l]; }

  using Vec = std::array<std::uint32_t, 4>;

  Vec mul(const Vec& x, const Vec& y) const {
    std::array<std::uint64_t, 4> acc{};
    for (std::size_t i = 0; i < k_; ++i) {
      if (!x[i]) continue;
      for (std::size_t j = 0; j < k_; ++j) {
        if (!y[j]) continue;
        std::uint64_t xy = std::uint64_t{x[i]} * y[j] % p_;
        for (std::size_t l = 0; l < k_; ++l) acc[l] += xy * c(i, j, l);
      }
    }
    Vec out{};
    for (std::size_t l = 0; l < k_; ++l) out[l] = static_cast<std::uint32_t>(acc[l] % p_);
    return out;
  }

  // Invariants that any isomorphism preserves.
  std::array<std::uint64_t, 3> fingerprint() const {
    std::uint64_t square_zero = 0, idempotent = 0, central = 1;
    for (std::size_t i = 0; i < k_ && central; ++i) {
      for (std::size_t j = 0; j < k_; ++j) {
        for (std::size_t l = 0; l < k_; ++l) {
          if (c(i, j, l) != c(j, i, l)) central = 0;
        }
      }
    }
    Vec x{};
    while (true) {
      Vec sq = mul(x, x);
      if (sq == Vec{}) ++square_zero;
      if (sq == x) ++idempotent;
      std::size_t pos = 0;
      while (pos < k_ && ++x[pos] == p_) x[pos++] = 0;
      if (pos == k_) break;
    }
    return {central, square_zero, idempotent};
  }

 private:
  std::uint32_t p_;
  std::size_t k_;
  std::vector<std::uint32_t> c_;
};

std::uint32_t inverse_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t result = 1, base = a, e = p - 2;
  while (e) {
    if (e & 1) result = result * base % p;
    base = base * base % p;
    e >>= 1;
  }
  return static_cast<std::uint32_t>(result);
}

bool invertible_mod(std::vector<SmallAlgebra::Vec> cols, std::size_t k, std::uint32_t p) {
  for (std::size_t col = 0; col < k; ++col) {
    std::size_t pivot = col;
    while (pivot < k && cols[pivot][col] == 0) ++pivot;
    if (pivot == k) return false;
    std::swap(cols[pivot], cols[col]);
    std::uint64_t inv = inverse_mod(cols[col][col], p);
    for (std::size_t r = col + 1; r < k; ++r) {
      std::uint64_t f = cols[r][col] * inv % p;
      if (!f) continue;
      for (std::size_t c = col; c < k; ++c) cols[r][c] = static_cast<std::uint32_t>((cols[r][c] + (p - f) * cols[col][c]) % p);
    }
  }
  return true;
}

struct Searcher {
  const SmallAlgebra& a;
  const SmallAlgebra& b;
  std::vector<std::vector<std::pair<std::size_t, std::size_t>>> checks_at;  // pairs that become checkable
  std::vector<SmallAlgebra::Vec> phi;
  std::uint64_t visited = 0;

  Searcher(const SmallAlgebra& a_, const SmallAlgebra& b_) : a(a_), b(b_), checks_at(a_.k()), phi(a_.k()) {
    const std::size_t k = a.k();
    for (std::size_t i = 1; i < k; ++i) {
      for (std::size_t j = 1; j < k; ++j) {
        std::size_t ready = std::max(i, j);
        for (std::size_t l = 0; l < k; ++l) {
          if (a.c(i, j, l)) ready = std::max(ready, l);
        }
        checks_at[ready].emplace_back(i, j);
      }
    }
    phi[0] = SmallAlgebra::Vec{1, 0, 0, 0};
  }

  bool consistent(std::size_t level) const {
    const std::uint32_t p = a.p();
    for (auto [i, j] : checks_at[level]) {
      SmallAlgebra::Vec lhs{};
      for (std::size_t l = 0; l < a.k(); ++l) {
        if (!a.c(i, j, l)) continue;
        for (std::size_t r = 0; r < a.k(); ++r) lhs[r] = static_cast<std::uint32_t>((lhs[r] + std::uint64_t{a.c(i, j, l)} * phi[l][r]) % p);
      }
      if (lhs != b.mul(phi[i], phi[j])) return false;
    }
    return true;
  }

  bool search(std::size_t level) {
    const std::size_t k = a.k();
    if (level == k) return invertible_mod(phi, k, a.p());
    SmallAlgebra::Vec v{};
    while (true) {
      phi[level] = v;
      ++visited;
      if (consistent(level) && search(level + 1)) return true;
      std::size_t pos = 0;
      while (pos < k && ++v[pos] == a.p()) v[pos++] = 0;
      if (pos == k) return false;
    }
  }
};

bool is_cubic_exceptional_or_nil(const CubicCoefficients& k) { return classify_case(k) != CubicCase::Commutative; }

}  // namespace

std::vector<CubicCoefficients> enumerate_cubic(const RingSpec& field) {
  if (!field.is_finite()) throw DomainError("enumeration needs a prime field, got " + field.name());
  enforce_guard(saturating_pow(field.modulus(), 6), kCubicEnumerationGuard, "enumerate_cubic");
  const std::vector<RingElement> values = field_elements(field);
  const std::size_t p = values.size();
  std::vector<CubicCoefficients> out;
  std::array<std::size_t, 6> d{};
  while (true) {
    CubicCoefficients k{values[d[0]], values[d[1]], values[d[2]], values[d[3]], values[d[4]], values[d[5]]};
    if (validate_relations(k).valid) out.push_back(k);
    std::size_t pos = 6;
    while (pos > 0) {
      --pos;
      if (++d[pos] < p) break;
      d[pos] = 0;
      if (pos == 0) return out;
    }
  }
}

IsomorphismSearch is_isomorphic_bruteforce(const AlgebraPtr& a, const AlgebraPtr& b) {
  if (!(a->spec() == b->spec())) throw DomainError("isomorphism test across different rings");
  if (!a->spec().is_finite()) throw DomainError("brute-force isomorphism needs a prime field");
  if (a->rank() != b->rank()) return {};
  const std::size_t k = a->rank();
  if (k > 4) throw DomainError("brute-force isomorphism is limited to rank 4");
  enforce_guard(saturating_pow(a->spec().modulus(), k * (k - 1)), kIsomorphismSearchGuard, "isomorphism search");
  SmallAlgebra sa(*a), sb(*b);
  if (sa.fingerprint() != sb.fingerprint()) return {};
  Searcher s(sa, sb);
  IsomorphismSearch result;
  bool found = s.search(1);
  result.candidates = s.visited;
  if (!found) return result;
  LinearMap map{a, b, {}};
  for (std::size_t i = 0; i < k; ++i) {
    Coeffs c;
    for (std::size_t r = 0; r < k; ++r) c.emplace_back(a->spec(), std::int64_t{s.phi[i][r]});
    map.images.emplace_back(b, std::move(c));
  }
  if (!verify_homomorphism(map) || !is_invertible(map)) {
    throw DomainError("internal error: isomorphism witness failed exact verification");
  }
  result.isomorphic = true;
  result.map = std::move(map);
  return result;
}

std::vector<std::vector<std::size_t>> partition_by_isomorphism(const std::vector<AlgebraPtr>& algebras) {
  std::vector<std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < algebras.size(); ++i) {
    bool placed = false;
    for (auto& cls : classes) {
      if (is_isomorphic_bruteforce(algebras[cls.front()], algebras[i]).isomorphic) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) classes.push_back({i});
  }
  return classes;
}

CensusReport verify_main_theorem(const RingSpec& field, bool with_classes) {
  CensusReport report{field};
  std::vector<CubicCoefficients> tuples = enumerate_cubic(field);
  report.total = saturating_pow(field.modulus(), 6);
  report.valid = tuples.size();
  std::vector<AlgebraPtr> algebras;
  for (const auto& k : tuples) {
    AlgebraPtr a = make_algebra(build_algebra(k));
    CensusRow row{k, classify_case(k), is_commutative(*a), find_standard_involution(a).has_value(), false, false};
    try {
      exceptional_witness(k);
      row.exceptional_witness = true;
    } catch (const DomainError&) {
      row.exceptional_witness = false;
    }
    switch (row.tag) {
      case CubicCase::Commutative: ++report.commutative; break;
      case CubicCase::Exceptional: ++report.exceptional; break;
      case CubicCase::Nilproduct: ++report.nilproduct; break;
    }
    if (row.commutative && row.standard_involution) ++report.both;
    std::vector<std::string> problems;
    if (!row.commutative && !row.standard_involution) problems.emplace_back("neither commutative nor involution-bearing");
    if ((row.commutative && row.standard_involution) != k.is_zero()) problems.emplace_back("intersection is not exactly the nilproduct ring");
    if (row.standard_involution != row.exceptional_witness) problems.emplace_back("involution and exceptional witness disagree");
    if ((row.tag != CubicCase::Exceptional) != row.commutative) problems.emplace_back("case tag disagrees with commutativity");
    row.ok = problems.empty();
    for (const auto& problem : problems) report.counterexamples.push_back(tuple_string(k) + ": " + problem);
    report.rows.push_back(std::move(row));
    algebras.push_back(std::move(a));
  }
  if (report.nilproduct != 1) report.counterexamples.emplace_back("nilproduct count is not 1");
  if (with_classes) report.classes = partition_by_isomorphism(algebras);
  return report;
}

std::vector<std::vector<CubicCoefficients>> exceptional_classes(const RingSpec& field) {
  std::vector<CubicCoefficients> members;
  std::vector<AlgebraPtr> algebras;
  for (const auto& k : enumerate_cubic(field)) {
    if (!is_cubic_exceptional_or_nil(k)) continue;
    members.push_back(k);
    algebras.push_back(make_algebra(build_algebra(k)));
  }
  std::vector<std::vector<CubicCoefficients>> out;
  for (const auto& cls : partition_by_isomorphism(algebras)) {
    std::vector<CubicCoefficients> group;
    for (auto idx : cls) group.push_back(members[idx]);
    out.push_back(std::move(group));
  }
  return out;
}

QuadraticCensus quadratic_census(const RingSpec& field) {
  if (!field.is_finite() || field.modulus() == 2) throw DomainError("quadratic census needs an odd prime field");
  if (field.modulus() > 13) throw DomainError("quadratic census is limited to p <= 13");
  QuadraticCensus out{field};
  const std::vector<RingElement> values = field_elements(field);
  std::vector<QuadraticAlgebra> quads;
  std::vector<AlgebraPtr> algebras;
  for (const auto& t : values) {
    for (const auto& n : values) {
      quads.emplace_back(t, n);
      algebras.push_back(quads.back().algebra());
    }
  }
  auto iso_classes = partition_by_isomorphism(algebras);
  for (const auto& cls : iso_classes) {
    std::vector<std::pair<RingElement, RingElement>> group;
    for (auto idx : cls) group.emplace_back(quads[idx].t, quads[idx].n);
    out.classes.push_back(std::move(group));
  }
  std::set<RingElement> unit_squares;
  for (const auto& u : values) {
    if (!u.is_zero()) unit_squares.insert(u * u);
  }
  out.expected_classes = (field.modulus() - 1) / unit_squares.size() + 1;
  // The discriminant partition, built the same way, must coincide exactly.
  std::vector<std::vector<std::size_t>> disc_classes;
  for (std::size_t i = 0; i < quads.size(); ++i) {
    bool placed = false;
    for (auto& cls : disc_classes) {
      if (discriminant(quads[cls.front()]) == discriminant(quads[i])) {
        cls.push_back(i);
        placed = true;
        break;
      }
    }
    if (!placed) disc_classes.push_back({i});
  }
  out.matches_discriminant = disc_classes == iso_classes;
  return out;
}

DegreeProductReport degree_product_check(const AlgebraPtr& a, const AlgebraPtr& b) {
  DegreeProductReport r;
  r.deg_a = algebra_degree(a);
  r.deg_b = algebra_degree(b);
  r.deg_product = algebra_degree(make_algebra(direct_product(*a, *b)));
  r.additive = r.deg_product == r.deg_a + r.deg_b;
  std::vector<std::pair<AlgebraElement, Polynomial>> xs, ys;
  for_each_element(a, [&](const AlgebraElement& x) {
    Polynomial mp = min_poly(x);
    if (static_cast<unsigned>(mp.degree()) == r.deg_a) xs.emplace_back(x, mp);
  });
  for_each_element(b, [&](const AlgebraElement& y) {
    Polynomial mp = min_poly(y);
    if (static_cast<unsigned>(mp.degree()) == r.deg_b) ys.emplace_back(y, mp);
  });
  for (const auto& [x, mx] : xs) {
    for (const auto& [y, my] : ys) {
      if (gcd(mx, my).degree() == 0) {
        r.witness = std::make_pair(x, y);
        r.consistent = r.additive;
        return r;
      }
    }
  }
  r.consistent = !r.additive;
  return r;
}

MnProbeReport mn_degree_probes(const RingSpec& field, std::size_t n) {
  if (!field.is_finite()) throw DomainError("M_n probes need a prime field");
  if (n == 0 || n > 3) throw DomainError("M_n probes support 1 <= n <= 3");
  MnProbeReport r{field, n};
  Involution adj = m2_adjoint(field);
  r.adjoint_standard = verify_standard(adj);
  r.m2_standard_involutions = standard_involutions_bruteforce(adj.algebra).size();
  if (n >= 3) {
    AlgebraPtr mn = make_algebra(matrix_algebra(field, n));
    std::vector<RingElement> diag(n, RingElement::one(field));
    diag[0] = RingElement::zero(field);
    diag[1] = -RingElement::one(field);
    r.diagonal_min_poly = min_poly(matrix_element(mn, SquareMatrix::diagonal(field, diag)));
  }
  Involution swap = pair_swap(field);
  r.pair_swap_standard = verify_standard(swap);
  r.pair_degree = algebra_degree(swap.algebra);
  return r;
}

}  // namespace lowrank
