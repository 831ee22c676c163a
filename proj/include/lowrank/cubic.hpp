#pragma once

#include <string>
#include <vector>

#include "lowrank/algebra.hpp"
#include "lowrank/involutions.hpp"
#include "lowrank/matrix.hpp"

namespace lowrank {

/// Arbitrary rank-3 table in the basis 1, i, j:
/// i^2 = a + b i + c j, ij = d + e i + f j, ji = l + m i + n j, j^2 = x + y i + z j.
struct GeneralCubicTable {
  RingElement a, b, c, d, e, f, l, m, n, x, y, z;

  const RingSpec& spec() const { return a.spec(); }
  static GeneralCubicTable zero(const RingSpec& spec);
  friend bool operator==(const GeneralCubicTable&, const GeneralCubicTable&) = default;
};

StructureConstants to_structure(const GeneralCubicTable& t);
GeneralCubicTable from_structure(const StructureConstants& a);

/// Parameters of the universal table; validity is checked by validate_relations.
struct CubicCoefficients {
  RingElement b, c, m, n, y, z;

  const RingSpec& spec() const { return b.spec(); }
  static CubicCoefficients from_ints(const RingSpec& spec, std::int64_t b, std::int64_t c, std::int64_t m,
                                     std::int64_t n, std::int64_t y, std::int64_t z);
  /// (n, 0, m, n, 0, m)
  static CubicCoefficients exceptional(const RingElement& n, const RingElement& m);
  bool is_zero() const;
  std::vector<RingElement> as_vector() const { return {b, c, m, n, y, z}; }
  friend bool operator==(const CubicCoefficients&, const CubicCoefficients&) = default;
};

/// i -> i - f, j -> j - e, which makes ij a scalar.
GeneralCubicTable good_basis(const GeneralCubicTable& t);

/// Passes to a good basis, checks a = -cz, d = cy, x = -by, l = cy - nz and
/// the coefficient relations. Throws RelationError naming every failure.
CubicCoefficients normalize(const GeneralCubicTable& t);

struct RelationReport {
  bool valid = true;
  std::vector<std::string> violated;
};

/// cm = 0, cn = 0, ny = 0, my = 0, bm = mn, mn = nz, n^2 = bn, m^2 = mz.
RelationReport validate_relations(const CubicCoefficients& c);

/// i^2 = -cz + bi + cj, ij = cy, ji = (cy - bm) + mi + nj, j^2 = -by + yi + zj.
/// Throws RelationError on invalid coefficients.
StructureConstants build_algebra(const CubicCoefficients& c);

enum class CubicCase { Commutative, Exceptional, Nilproduct };

std::string to_string(CubicCase c);
CubicCase classify_case(const CubicCoefficients& c);

/// 1bar = 1, ibar = n - i, jbar = m - j. Exceptional or nilproduct cases only.
Involution standard_involution_E(const CubicCoefficients& c);

/// a(a + bn + cm) + bcmn, the norm of a + b i + c j.
RingElement exceptional_norm(const CubicCoefficients& coeffs, const RingElement& a, const RingElement& b,
                             const RingElement& c);

/// I = n - i and j span a left ideal with xy = t(x) y, t(I) = n, t(j) = m.
struct ExceptionalWitness {
  AlgebraElement big_i;
  AlgebraElement j;
  RingElement t_big_i;
  RingElement t_j;
};

/// Exceptional or nilproduct cases only; all four product identities and the
/// splitting A = R + M are checked before returning.
ExceptionalWitness exceptional_witness(const CubicCoefficients& c);

/// x -> t(x) - x on M, extended by 1bar = 1, expressed in the basis 1, i, j.
Involution involution_from_witness(const ExceptionalWitness& w);

struct CubicMatrixRep {
  SquareMatrix big_i;
  SquareMatrix big_j;
};

/// I = [[0,-cz,cy],[1,b,0],[0,c,0]], J = [[0,cy-bm,-by],[0,m,y],[1,n,z]].
CubicMatrixRep matrix_rep(const CubicCoefficients& c);

/// Names of the four table identities that I, J fail; empty when all hold.
std::vector<std::string> check_matrix_rep(const CubicCoefficients& c, const CubicMatrixRep& rep);

/// R + M in the basis 1, e1, e2 with e_a e_b = t(e_a) e_b, t(e1) = m, t(e2) = n.
StructureConstants exceptional_ideal_algebra(const RingElement& m, const RingElement& n);

/// (T - p)(T - p - mq - rn)^2, the characteristic polynomial of p + q e1 + r e2
/// in exceptional_ideal_algebra(m, n).
Polynomial char_poly_case_E(const RingElement& p, const RingElement& q, const RingElement& r,
                            const RingElement& m, const RingElement& n);

/// a X^3 + b X^2 Y + c X Y^2 + d Y^3
struct BinaryCubicForm {
  RingElement a, b, c, d;

  const RingSpec& spec() const { return a.spec(); }
  friend bool operator==(const BinaryCubicForm&, const BinaryCubicForm&) = default;
};

/// (-c, b, -z, y). Commutative coefficients only.
BinaryCubicForm form_from_commutative(const CubicCoefficients& c);
/// Inverse of form_from_commutative.
CubicCoefficients commutative_from_form(const BinaryCubicForm& f);

/// i^2 = -ac + bi - aj, ij = ji = -ad, j^2 = -bd + di - cj in the form's letters.
StructureConstants gross_lucianovic_algebra(const BinaryCubicForm& f);

/// b^2 c^2 + 18abcd - 4ac^3 - 4db^3 - 27a^2 d^2
RingElement form_discriminant(const BinaryCubicForm& f);

/// g = [[alpha, beta], [gamma, delta]] acts by p -> p(alpha X + gamma Y, beta X + delta Y) / det g.
BinaryCubicForm gl2_act(const SquareMatrix& g, const BinaryCubicForm& f);

}  // namespace lowrank
