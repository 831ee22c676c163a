#include "lowrank/algebra.hpp"

#include "lowrank/guards.hpp"

namespace lowrank {

StructureConstants::StructureConstants(RingSpec spec, std::vector<std::vector<Coeffs>> table)
    : spec_(spec), rank_(table.size()) {
  if (rank_ == 0) throw DomainError("algebra rank must be at least 1");
  table_.reserve(rank_ * rank_ * rank_);
  for (std::size_t i = 0; i < rank_; ++i) {
    if (table[i].size() != rank_) throw DomainError("structure table must be k x k");
    for (std::size_t j = 0; j < rank_; ++j) {
      if (table[i][j].size() != rank_) throw DomainError("structure table entries must have length k");
      for (const auto& c : table[i][j]) {
        if (!(c.spec() == spec_)) throw DomainError("structure constant from a different ring");
        table_.push_back(c);
      }
    }
  }
  for (std::size_t j = 0; j < rank_; ++j) {
    for (std::size_t l = 0; l < rank_; ++l) {
      const bool want_one = j == l;
      if (coeff(0, j, l).is_one() != want_one || (!want_one && !coeff(0, j, l).is_zero()) ||
          coeff(j, 0, l).is_one() != want_one || (!want_one && !coeff(j, 0, l).is_zero())) {
        throw DomainError("basis element 1 is not a two-sided identity");
      }
    }
  }
}

Coeffs StructureConstants::product(std::size_t i, std::size_t j) const {
  auto begin = table_.begin() + static_cast<std::ptrdiff_t>((i * rank_ + j) * rank_);
  return Coeffs(begin, begin + static_cast<std::ptrdiff_t>(rank_));
}

Coeffs StructureConstants::multiply(std::span<const RingElement> x, std::span<const RingElement> y) const {
  if (x.size() != rank_ || y.size() != rank_) throw DomainError("element length does not match rank");
  Coeffs out(rank_, RingElement::zero(spec_));
  for (std::size_t i = 0; i < rank_; ++i) {
    if (x[i].is_zero()) continue;
    for (std::size_t j = 0; j < rank_; ++j) {
      if (y[j].is_zero()) continue;
      RingElement xy = x[i] * y[j];
      for (std::size_t l = 0; l < rank_; ++l) {
        const RingElement& c = coeff(i, j, l);
        if (!c.is_zero()) out[l] += xy * c;
      }
    }
  }
  return out;
}

std::vector<std::vector<Coeffs>> StructureConstants::table() const {
  std::vector<std::vector<Coeffs>> out(rank_, std::vector<Coeffs>(rank_));
  for (std::size_t i = 0; i < rank_; ++i) {
    for (std::size_t j = 0; j < rank_; ++j) out[i][j] = product(i, j);
  }
  return out;
}

AlgebraElement::AlgebraElement(AlgebraPtr algebra, Coeffs coeffs)
    : algebra_(std::move(algebra)), coeffs_(std::move(coeffs)) {
  if (!algebra_) throw DomainError("element without an algebra");
  if (coeffs_.size() != algebra_->rank()) throw DomainError("element length does not match rank");
  for (const auto& c : coeffs_) {
    if (!(c.spec() == algebra_->spec())) throw DomainError("element coefficient from a different ring");
  }
}

AlgebraElement AlgebraElement::zero(const AlgebraPtr& a) {
  return AlgebraElement(a, Coeffs(a->rank(), RingElement::zero(a->spec())));
}

AlgebraElement AlgebraElement::one(const AlgebraPtr& a) { return basis(a, 0); }

AlgebraElement AlgebraElement::basis(const AlgebraPtr& a, std::size_t i) {
  Coeffs c(a->rank(), RingElement::zero(a->spec()));
  c.at(i) = RingElement::one(a->spec());
  return AlgebraElement(a, std::move(c));
}

AlgebraElement AlgebraElement::scalar(const AlgebraPtr& a, const RingElement& r) {
  Coeffs c(a->rank(), RingElement::zero(a->spec()));
  c[0] = r;
  return AlgebraElement(a, std::move(c));
}

bool AlgebraElement::is_scalar() const {
  for (std::size_t i = 1; i < coeffs_.size(); ++i) {
    if (!coeffs_[i].is_zero()) return false;
  }
  return true;
}

bool AlgebraElement::same_algebra(const AlgebraPtr& a, const AlgebraPtr& b) {
  return a == b || *a == *b;
}

void AlgebraElement::require_same_algebra(const AlgebraElement& other) const {
  if (!same_algebra(algebra_, other.algebra_)) throw DomainError("elements belong to different algebras");
}

AlgebraElement& AlgebraElement::operator+=(const AlgebraElement& other) {
  require_same_algebra(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

AlgebraElement& AlgebraElement::operator-=(const AlgebraElement& other) {
  require_same_algebra(other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

AlgebraElement AlgebraElement::operator-() const {
  AlgebraElement r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

AlgebraElement operator*(const AlgebraElement& x, const AlgebraElement& y) {
  x.require_same_algebra(y);
  return AlgebraElement(x.algebra_, x.algebra_->multiply(x.coeffs_, y.coeffs_));
}

AlgebraElement operator*(const RingElement& c, AlgebraElement x) {
  for (auto& e : x.coeffs_) e *= c;
  return x;
}

AlgebraElement operator+(const RingElement& c, AlgebraElement x) {
  x.coeffs_[0] += c;
  return x;
}

std::string AlgebraElement::to_string(const std::vector<std::string>& names) const {
  std::string out;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    std::string name = i < names.size() ? names[i] : (i == 0 ? "1" : "e" + std::to_string(i + 1));
    std::string c = coeffs_[i].to_string();
    bool negative = c[0] == '-';
    if (negative) c = c.substr(1);
    if (out.empty()) {
      if (negative) out += "-";
    } else {
      out += negative ? " - " : " + ";
    }
    if (i == 0) {
      out += c;
    } else {
      out += (c == "1" ? "" : c + "*") + name;
    }
  }
  return out.empty() ? "0" : out;
}

AlgebraElement multiply(const AlgebraElement& x, const AlgebraElement& y) { return x * y; }

AssociativityResult verify_associativity(const StructureConstants& a) {
  const std::size_t k = a.rank();
  // Products of basis pairs, reused for both bracketings.
  std::vector<Coeffs> basis_products(k * k);
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) basis_products[i * k + j] = a.product(i, j);
  }
  auto unit = [&](std::size_t i) {
    Coeffs c(k, RingElement::zero(a.spec()));
    c[i] = RingElement::one(a.spec());
    return c;
  };
  for (std::size_t x = 0; x < k; ++x) {
    for (std::size_t y = 0; y < k; ++y) {
      for (std::size_t z = 0; z < k; ++z) {
        Coeffs left = a.multiply(basis_products[x * k + y], unit(z));
        Coeffs right = a.multiply(unit(x), basis_products[y * k + z]);
        if (left != right) return {false, std::array<std::size_t, 3>{x, y, z}};
      }
    }
  }
  return {};
}

bool is_commutative(const StructureConstants& a) {
  for (std::size_t i = 0; i < a.rank(); ++i) {
    for (std::size_t j = i + 1; j < a.rank(); ++j) {
      if (a.product(i, j) != a.product(j, i)) return false;
    }
  }
  return true;
}

SquareMatrix left_regular_rep(const AlgebraElement& x) {
  const AlgebraPtr& a = x.algebra();
  SquareMatrix m(a->spec(), a->rank());
  for (std::size_t j = 0; j < a->rank(); ++j) m.set_column(j, (x * AlgebraElement::basis(a, j)).coeffs());
  return m;
}

AlgebraElement evaluate(const Polynomial& f, const AlgebraElement& x) {
  AlgebraElement acc = AlgebraElement::zero(x.algebra());
  for (int k = f.degree(); k >= 0; --k) acc = acc * x + f.coeff(static_cast<std::size_t>(k));
  return acc;
}

Polynomial min_poly(const AlgebraElement& x) {
  const RingSpec spec = x.spec();
  if (!spec.is_field()) throw DomainError("minimal polynomial requires a field, got " + spec.name());
  std::vector<Coeffs> powers{AlgebraElement::one(x.algebra()).coeffs()};
  AlgebraElement current = AlgebraElement::one(x.algebra());
  for (std::size_t degree = 1; degree <= x.algebra()->rank(); ++degree) {
    current = current * x;
    auto combo = solve_linear(powers, current.coeffs());
    if (combo) {
      // x^degree = sum c_i x^i  =>  T^degree - sum c_i T^i.
      std::vector<RingElement> coeffs(degree + 1, RingElement::zero(spec));
      for (std::size_t i = 0; i < degree; ++i) coeffs[i] = -(*combo)[i];
      coeffs[degree] = RingElement::one(spec);
      return Polynomial(spec, std::move(coeffs));
    }
    powers.push_back(current.coeffs());
  }
  throw DomainError("no dependency among powers; the algebra is not finite-dimensional");
}

std::uint64_t element_count(const StructureConstants& a) {
  if (!a.spec().is_finite()) throw DomainError(a.spec().name() + " is not a finite field");
  return saturating_pow(a.spec().modulus(), a.rank());
}

void for_each_element(const AlgebraPtr& a, const std::function<void(const AlgebraElement&)>& visit) {
  const std::vector<RingElement> values = field_elements(a->spec());
  const std::size_t k = a->rank();
  const std::size_t p = values.size();
  std::vector<std::size_t> digits(k, 0);
  while (true) {
    Coeffs c(k, values[0]);
    for (std::size_t i = 0; i < k; ++i) c[i] = values[digits[i]];
    visit(AlgebraElement(a, std::move(c)));
    std::size_t pos = k;
    while (pos > 0) {
      --pos;
      if (++digits[pos] < p) break;
      digits[pos] = 0;
      if (pos == 0) return;
    }
  }
}

unsigned algebra_degree(const AlgebraPtr& a) {
  if (!a->spec().is_finite()) throw DomainError("algebra degree needs a finite prime field");
  enforce_guard(element_count(*a), kAlgebraDegreeGuard, "algebra_degree");
  unsigned best = 0;
  for_each_element(a, [&](const AlgebraElement& x) {
    best = std::max(best, static_cast<unsigned>(min_poly(x).degree()));
  });
  return best;
}

StructureConstants direct_product(const StructureConstants& a, const StructureConstants& b) {
  if (!(a.spec() == b.spec())) throw DomainError("direct product of algebras over different rings");
  const RingSpec spec = a.spec();
  const std::size_t ka = a.rank(), kb = b.rank(), k = ka + kb;
  // Native basis: (e_0..e_{ka-1}, 0), (0, f_0..f_{kb-1}). The new basis
  // replaces (e_0, 0) by (1, 1) = (e_0, 0) + (0, f_0).
  auto to_new = [&](const Coeffs& left, const Coeffs& right) {
    Coeffs out(k, RingElement::zero(spec));
    out[0] = left[0];
    for (std::size_t i = 1; i < ka; ++i) out[i] = left[i];
    out[ka] = right[0] - left[0];
    for (std::size_t j = 1; j < kb; ++j) out[ka + j] = right[j];
    return out;
  };
  Coeffs zero_a(ka, RingElement::zero(spec)), zero_b(kb, RingElement::zero(spec));
  auto component = [&](std::size_t idx) -> std::pair<Coeffs, Coeffs> {
    Coeffs l = zero_a, r = zero_b;
    if (idx == 0) {
      l[0] = RingElement::one(spec);
      r[0] = RingElement::one(spec);
    } else if (idx < ka) {
      l[idx] = RingElement::one(spec);
    } else {
      r[idx - ka] = RingElement::one(spec);
    }
    return {l, r};
  };
  std::vector<std::vector<Coeffs>> table(k, std::vector<Coeffs>(k));
  for (std::size_t i = 0; i < k; ++i) {
    auto [li, ri] = component(i);
    for (std::size_t j = 0; j < k; ++j) {
      auto [lj, rj] = component(j);
      table[i][j] = to_new(a.multiply(li, lj), b.multiply(ri, rj));
    }
  }
  return StructureConstants(spec, std::move(table));
}

AlgebraElement product_element(const AlgebraPtr& product, const AlgebraElement& x, const AlgebraElement& y) {
  const std::size_t ka = x.algebra()->rank(), kb = y.algebra()->rank();
  if (product->rank() != ka + kb) throw DomainError("product rank does not match components");
  Coeffs out(ka + kb, RingElement::zero(product->spec()));
  out[0] = x.coeff(0);
  for (std::size_t i = 1; i < ka; ++i) out[i] = x.coeff(i);
  out[ka] = y.coeff(0) - x.coeff(0);
  for (std::size_t j = 1; j < kb; ++j) out[ka + j] = y.coeff(j);
  return AlgebraElement(product, std::move(out));
}

std::pair<Coeffs, Coeffs> split_product_element(const AlgebraElement& z, std::size_t rank_a) {
  const std::size_t k = z.algebra()->rank();
  if (rank_a == 0 || rank_a >= k) throw DomainError("invalid component rank");
  Coeffs left(z.coeffs().begin(), z.coeffs().begin() + static_cast<std::ptrdiff_t>(rank_a));
  Coeffs right(z.coeffs().begin() + static_cast<std::ptrdiff_t>(rank_a), z.coeffs().end());
  right[0] += z.coeff(0);
  return {left, right};
}

namespace {

// Coordinates of an n x n matrix in the basis Id, E_ab ((a,b) != (0,0)).
Coeffs matrix_coordinates(const SquareMatrix& m) {
  const std::size_t n = m.size();
  Coeffs out;
  out.reserve(n * n);
  out.push_back(m.at(0, 0));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      if (r == 0 && c == 0) continue;
      out.push_back(r == c ? m.at(r, c) - m.at(0, 0) : m.at(r, c));
    }
  }
  return out;
}

SquareMatrix matrix_basis_element(RingSpec spec, std::size_t n, std::size_t index) {
  if (index == 0) return SquareMatrix::identity(spec, n);
  SquareMatrix m(spec, n);
  // Slot (0,0) holds the identity, so index is also the row-major position.
  m.at(index / n, index % n) = RingElement::one(spec);
  return m;
}

}  // namespace

StructureConstants matrix_algebra(RingSpec spec, std::size_t n) {
  if (n == 0) throw DomainError("matrix size must be at least 1");
  const std::size_t k = n * n;
  std::vector<SquareMatrix> basis;
  basis.reserve(k);
  for (std::size_t i = 0; i < k; ++i) basis.push_back(matrix_basis_element(spec, n, i));
  std::vector<std::vector<Coeffs>> table(k, std::vector<Coeffs>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i][j] = matrix_coordinates(basis[i] * basis[j]);
  }
  return StructureConstants(spec, std::move(table));
}

AlgebraElement matrix_unit(const AlgebraPtr& mn, std::size_t n, std::size_t row, std::size_t col) {
  SquareMatrix m(mn->spec(), n);
  m.at(row, col) = RingElement::one(mn->spec());
  return matrix_element(mn, m);
}

AlgebraElement matrix_element(const AlgebraPtr& mn, const SquareMatrix& m) {
  if (m.size() * m.size() != mn->rank()) throw DomainError("matrix size does not match algebra rank");
  return AlgebraElement(mn, matrix_coordinates(m));
}

StructureConstants change_basis(const StructureConstants& a, const std::vector<Coeffs>& new_basis) {
  const std::size_t k = a.rank();
  if (new_basis.size() != k) throw DomainError("new basis must have rank elements");
  SquareMatrix p(a.spec(), k);
  for (std::size_t j = 0; j < k; ++j) p.set_column(j, new_basis[j]);
  Coeffs one(k, RingElement::zero(a.spec()));
  one[0] = RingElement::one(a.spec());
  if (new_basis[0] != one) throw DomainError("first new basis element must be 1");
  auto p_inv = inverse(p);
  if (!p_inv) throw DomainError("change of basis is not invertible over " + a.spec().name());
  std::vector<std::vector<Coeffs>> table(k, std::vector<Coeffs>(k));
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) table[i][j] = (*p_inv) * a.multiply(new_basis[i], new_basis[j]);
  }
  return StructureConstants(a.spec(), std::move(table));
}

AlgebraElement LinearMap::apply(const AlgebraElement& x) const {
  if (!AlgebraElement::same_algebra(x.algebra(), source)) throw DomainError("element is not in the map's source");
  AlgebraElement out = AlgebraElement::zero(target);
  for (std::size_t i = 0; i < x.coeffs().size(); ++i) {
    if (!x.coeff(i).is_zero()) out += x.coeff(i) * images[i];
  }
  return out;
}

SquareMatrix LinearMap::matrix() const {
  if (source->rank() != target->rank()) throw DomainError("map between algebras of different rank");
  SquareMatrix m(source->spec(), source->rank());
  for (std::size_t j = 0; j < images.size(); ++j) m.set_column(j, images[j].coeffs());
  return m;
}

bool verify_homomorphism(const LinearMap& map) {
  const std::size_t k = map.source->rank();
  if (map.images.size() != k) return false;
  if (map.images[0] != AlgebraElement::one(map.target)) return false;
  for (std::size_t i = 0; i < k; ++i) {
    for (std::size_t j = 0; j < k; ++j) {
      AlgebraElement lhs = map.apply(AlgebraElement::basis(map.source, i) * AlgebraElement::basis(map.source, j));
      if (lhs != map.images[i] * map.images[j]) return false;
    }
  }
  return true;
}

bool is_invertible(const LinearMap& map) {
  if (map.source->rank() != map.target->rank()) return false;
  return determinant(map.matrix()).is_unit();
}

}  // namespace lowrank
