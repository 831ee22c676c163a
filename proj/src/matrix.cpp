#include "lowrank/matrix.hpp"

namespace lowrank {

SquareMatrix::SquareMatrix(RingSpec spec, std::size_t n)
    : spec_(spec), n_(n), entries_(n * n, RingElement::zero(spec)) {}

SquareMatrix::SquareMatrix(RingSpec spec, const std::vector<std::vector<RingElement>>& rows)
    : SquareMatrix(spec, rows.size()) {
  for (std::size_t r = 0; r < n_; ++r) {
    if (rows[r].size() != n_) throw DomainError("matrix rows must form a square");
    for (std::size_t c = 0; c < n_; ++c) {
      if (!(rows[r][c].spec() == spec_)) throw DomainError("matrix entry from a different ring");
      at(r, c) = rows[r][c];
    }
  }
}

SquareMatrix SquareMatrix::identity(RingSpec spec, std::size_t n) {
  SquareMatrix m(spec, n);
  for (std::size_t i = 0; i < n; ++i) m.at(i, i) = RingElement::one(spec);
  return m;
}

SquareMatrix SquareMatrix::diagonal(RingSpec spec, const std::vector<RingElement>& diag) {
  SquareMatrix m(spec, diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m.at(i, i) = diag[i];
  return m;
}

std::vector<RingElement> SquareMatrix::column(std::size_t col) const {
  std::vector<RingElement> out;
  out.reserve(n_);
  for (std::size_t r = 0; r < n_; ++r) out.push_back(at(r, col));
  return out;
}

void SquareMatrix::set_column(std::size_t col, const std::vector<RingElement>& values) {
  if (values.size() != n_) throw DomainError("column length mismatch");
  for (std::size_t r = 0; r < n_; ++r) at(r, col) = values[r];
}

std::vector<std::vector<RingElement>> SquareMatrix::rows() const {
  std::vector<std::vector<RingElement>> out(n_);
  for (std::size_t r = 0; r < n_; ++r) {
    out[r].assign(entries_.begin() + static_cast<std::ptrdiff_t>(r * n_),
                  entries_.begin() + static_cast<std::ptrdiff_t>((r + 1) * n_));
  }
  return out;
}

bool SquareMatrix::is_lower_triangular() const {
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = r + 1; c < n_; ++c) {
      if (!at(r, c).is_zero()) return false;
    }
  }
  return true;
}

SquareMatrix& SquareMatrix::operator+=(const SquareMatrix& other) {
  if (!(spec_ == other.spec_) || n_ != other.n_) throw DomainError("matrix shape or ring mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] += other.entries_[k];
  return *this;
}

SquareMatrix& SquareMatrix::operator-=(const SquareMatrix& other) {
  if (!(spec_ == other.spec_) || n_ != other.n_) throw DomainError("matrix shape or ring mismatch");
  for (std::size_t k = 0; k < entries_.size(); ++k) entries_[k] -= other.entries_[k];
  return *this;
}

SquareMatrix operator*(const SquareMatrix& a, const SquareMatrix& b) {
  if (!(a.spec_ == b.spec_) || a.n_ != b.n_) throw DomainError("matrix shape or ring mismatch");
  SquareMatrix out(a.spec_, a.n_);
  for (std::size_t r = 0; r < a.n_; ++r) {
    for (std::size_t k = 0; k < a.n_; ++k) {
      const RingElement& ark = a.at(r, k);
      if (ark.is_zero()) continue;
      for (std::size_t c = 0; c < a.n_; ++c) out.at(r, c) += ark * b.at(k, c);
    }
  }
  return out;
}

SquareMatrix operator*(const RingElement& c, SquareMatrix m) {
  for (auto& e : m.entries_) e *= c;
  return m;
}

std::vector<RingElement> operator*(const SquareMatrix& m, const std::vector<RingElement>& v) {
  if (v.size() != m.n_) throw DomainError("matrix-vector length mismatch");
  std::vector<RingElement> out(m.n_, RingElement::zero(m.spec_));
  for (std::size_t r = 0; r < m.n_; ++r) {
    for (std::size_t c = 0; c < m.n_; ++c) out[r] += m.at(r, c) * v[c];
  }
  return out;
}

std::string SquareMatrix::to_string() const {
  std::string out = "[";
  for (std::size_t r = 0; r < n_; ++r) {
    out += r == 0 ? "[" : ", [";
    for (std::size_t c = 0; c < n_; ++c) {
      if (c) out += ", ";
      out += at(r, c).to_string();
    }
    out += "]";
  }
  return out + "]";
}

RingElement determinant(const SquareMatrix& m) {
  const std::size_t n = m.size();
  const RingSpec spec = m.spec();
  if (n == 0) return RingElement::one(spec);
  SquareMatrix a = m;
  RingElement prev = RingElement::one(spec);
  bool negate = false;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a.at(k, k).is_zero()) {
      std::size_t pivot = k + 1;
      while (pivot < n && a.at(pivot, k).is_zero()) ++pivot;
      if (pivot == n) return RingElement::zero(spec);
      for (std::size_t c = 0; c < n; ++c) std::swap(a.at(k, c), a.at(pivot, c));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        a.at(i, j) = exact_divide(a.at(i, j) * a.at(k, k) - a.at(i, k) * a.at(k, j), prev);
      }
      a.at(i, k) = RingElement::zero(spec);
    }
    prev = a.at(k, k);
  }
  RingElement det = a.at(n - 1, n - 1);
  return negate ? -det : det;
}

namespace {

SquareMatrix minor_matrix(const SquareMatrix& m, std::size_t skip_row, std::size_t skip_col) {
  SquareMatrix out(m.spec(), m.size() - 1);
  for (std::size_t r = 0, rr = 0; r < m.size(); ++r) {
    if (r == skip_row) continue;
    for (std::size_t c = 0, cc = 0; c < m.size(); ++c) {
      if (c == skip_col) continue;
      out.at(rr, cc++) = m.at(r, c);
    }
    ++rr;
  }
  return out;
}

std::optional<SquareMatrix> gauss_jordan_inverse(const SquareMatrix& m) {
  const std::size_t n = m.size();
  SquareMatrix a = m;
  SquareMatrix inv = SquareMatrix::identity(m.spec(), n);
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && a.at(pivot, col).is_zero()) ++pivot;
    if (pivot == n) return std::nullopt;
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(a.at(col, c), a.at(pivot, c));
        std::swap(inv.at(col, c), inv.at(pivot, c));
      }
    }
    RingElement scale = a.at(col, col).inverse();
    for (std::size_t c = 0; c < n; ++c) {
      a.at(col, c) *= scale;
      inv.at(col, c) *= scale;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || a.at(r, col).is_zero()) continue;
      RingElement f = a.at(r, col);
      for (std::size_t c = 0; c < n; ++c) {
        a.at(r, c) -= f * a.at(col, c);
        inv.at(r, c) -= f * inv.at(col, c);
      }
    }
  }
  return inv;
}

// Polynomial-entry determinant by Laplace expansion along the first row.
Polynomial poly_det(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc(m[0][0].spec());
  for (std::size_t c = 0; c < n; ++c) {
    if (m[0][c].is_zero()) continue;
    std::vector<std::vector<Polynomial>> sub;
    sub.reserve(n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Polynomial> row;
      row.reserve(n - 1);
      for (std::size_t cc = 0; cc < n; ++cc) {
        if (cc != c) row.push_back(m[r][cc]);
      }
      sub.push_back(std::move(row));
    }
    Polynomial term = m[0][c] * poly_det(sub);
    if (c % 2 == 0) {
      acc += term;
    } else {
      acc -= term;
    }
  }
  return acc;
}

}  // namespace

std::optional<SquareMatrix> inverse(const SquareMatrix& m) {
  if (m.spec().is_field()) return gauss_jordan_inverse(m);
  RingElement det = determinant(m);
  if (!det.is_unit()) return std::nullopt;
  RingElement det_inv = det.inverse();
  const std::size_t n = m.size();
  SquareMatrix out(m.spec(), n);
  if (n == 1) {
    out.at(0, 0) = det_inv;
    return out;
  }
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      RingElement cof = determinant(minor_matrix(m, r, c));
      if ((r + c) % 2 == 1) cof = -cof;
      out.at(c, r) = cof * det_inv;
    }
  }
  return out;
}

Polynomial char_poly_cofactor(const SquareMatrix& m) {
  const RingSpec spec = m.spec();
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(RingElement::one(spec));
  std::vector<std::vector<Polynomial>> entries(n, std::vector<Polynomial>(n, Polynomial(spec)));
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < n; ++c) {
      entries[r][c] = r == c ? Polynomial::linear_factor(m.at(r, c)) : Polynomial::constant(-m.at(r, c));
    }
  }
  return poly_det(entries);
}

Polynomial char_poly_berkowitz(const SquareMatrix& m) {
  const RingSpec spec = m.spec();
  const std::size_t n = m.size();
  if (n == 0) return Polynomial::constant(RingElement::one(spec));
  // vect holds the characteristic polynomial of the leading block, highest degree first.
  std::vector<RingElement> vect{RingElement::one(spec), -m.at(0, 0)};
  for (std::size_t r = 1; r < n; ++r) {
    // Leading r x r block M, row R = m[r][0..r), column C = m[0..r)[r].
    std::vector<RingElement> toeplitz{RingElement::one(spec), -m.at(r, r)};
    std::vector<RingElement> power_c;
    for (std::size_t i = 0; i < r; ++i) power_c.push_back(m.at(i, r));
    for (std::size_t k = 0; k < r; ++k) {
      RingElement dot = RingElement::zero(spec);
      for (std::size_t i = 0; i < r; ++i) dot += m.at(r, i) * power_c[i];
      toeplitz.push_back(-dot);
      std::vector<RingElement> next(r, RingElement::zero(spec));
      for (std::size_t i = 0; i < r; ++i) {
        for (std::size_t j = 0; j < r; ++j) next[i] += m.at(i, j) * power_c[j];
      }
      power_c = std::move(next);
    }
    std::vector<RingElement> next_vect(r + 2, RingElement::zero(spec));
    for (std::size_t i = 0; i < r + 2; ++i) {
      for (std::size_t j = 0; j <= i && j < vect.size(); ++j) next_vect[i] += toeplitz[i - j] * vect[j];
    }
    vect = std::move(next_vect);
  }
  return Polynomial(spec, std::vector<RingElement>(vect.rbegin(), vect.rend()));
}

Polynomial char_poly(const SquareMatrix& m) {
  return m.size() <= 4 ? char_poly_cofactor(m) : char_poly_berkowitz(m);
}

namespace {

// Row-reduces an augmented system in place; returns pivot columns.
std::vector<std::size_t> row_reduce(std::vector<std::vector<RingElement>>& rows, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t prow = 0;
  for (std::size_t col = 0; col < ncols && prow < rows.size(); ++col) {
    std::size_t sel = prow;
    while (sel < rows.size() && rows[sel][col].is_zero()) ++sel;
    if (sel == rows.size()) continue;
    std::swap(rows[prow], rows[sel]);
    RingElement scale = rows[prow][col].inverse();
    for (auto& e : rows[prow]) e *= scale;
    for (std::size_t r = 0; r < rows.size(); ++r) {
      if (r == prow || rows[r][col].is_zero()) continue;
      RingElement f = rows[r][col];
      for (std::size_t c = 0; c < rows[r].size(); ++c) rows[r][c] -= f * rows[prow][c];
    }
    pivots.push_back(col);
    ++prow;
  }
  return pivots;
}

}  // namespace

std::optional<std::vector<RingElement>> solve_linear(const std::vector<std::vector<RingElement>>& columns,
                                                     const std::vector<RingElement>& rhs) {
  const std::size_t dim = rhs.size();
  const std::size_t nvars = columns.size();
  if (dim == 0) return std::vector<RingElement>{};
  const RingSpec spec = rhs[0].spec();
  if (!spec.is_field()) throw DomainError("linear solve requires a field");
  std::vector<std::vector<RingElement>> rows(dim, std::vector<RingElement>(nvars + 1, RingElement::zero(spec)));
  for (std::size_t r = 0; r < dim; ++r) {
    for (std::size_t c = 0; c < nvars; ++c) rows[r][c] = columns[c][r];
    rows[r][nvars] = rhs[r];
  }
  std::vector<std::size_t> pivots = row_reduce(rows, nvars);
  for (std::size_t r = pivots.size(); r < dim; ++r) {
    if (!rows[r][nvars].is_zero()) return std::nullopt;
  }
  std::vector<RingElement> x(nvars, RingElement::zero(spec));
  for (std::size_t k = 0; k < pivots.size(); ++k) x[pivots[k]] = rows[k][nvars];
  return x;
}

std::size_t vector_rank(const std::vector<std::vector<RingElement>>& vectors) {
  if (vectors.empty()) return 0;
  const std::size_t dim = vectors[0].size();
  if (dim == 0) return 0;
  if (!vectors[0][0].spec().is_field()) throw DomainError("rank computation requires a field");
  std::vector<std::vector<RingElement>> rows = vectors;
  return row_reduce(rows, dim).size();
}

}  // namespace lowrank
