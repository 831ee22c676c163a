#include "lowrank/cubic.hpp"

namespace lowrank {

namespace {

Coeffs triple(const RingElement& r, const RingElement& s, const RingElement& t) { return {r, s, t}; }

bool all_zero(std::initializer_list<const RingElement*> xs) {
  for (const auto* x : xs) {
    if (!x->is_zero()) return false;
  }
  return true;
}

void require_exceptional_or_nil(const CubicCoefficients& c, const char* what) {
  if (classify_case(c) == CubicCase::Commutative) {
    throw DomainError(std::string(what) + " needs an exceptional or nilproduct tuple, got a commutative one");
  }
}

}  // namespace

GeneralCubicTable GeneralCubicTable::zero(const RingSpec& spec) {
  RingElement z = RingElement::zero(spec);
  return {z, z, z, z, z, z, z, z, z, z, z, z};
}

StructureConstants to_structure(const GeneralCubicTable& t) {
  const RingSpec& s = t.spec();
  RingElement zero = RingElement::zero(s), one = RingElement::one(s);
  Coeffs e0 = triple(one, zero, zero), e1 = triple(zero, one, zero), e2 = triple(zero, zero, one);
  return StructureConstants(s, {{e0, e1, e2},
                                {e1, triple(t.a, t.b, t.c), triple(t.d, t.e, t.f)},
                                {e2, triple(t.l, t.m, t.n), triple(t.x, t.y, t.z)}});
}

GeneralCubicTable from_structure(const StructureConstants& a) {
  if (a.rank() != 3) throw DomainError("expected a rank-3 algebra, got rank " + std::to_string(a.rank()));
  auto c = [&](std::size_t i, std::size_t j, std::size_t l) { return a.coeff(i, j, l); };
  return {c(1, 1, 0), c(1, 1, 1), c(1, 1, 2), c(1, 2, 0), c(1, 2, 1), c(1, 2, 2),
          c(2, 1, 0), c(2, 1, 1), c(2, 1, 2), c(2, 2, 0), c(2, 2, 1), c(2, 2, 2)};
}

CubicCoefficients CubicCoefficients::from_ints(const RingSpec& spec, std::int64_t b, std::int64_t c, std::int64_t m,
                                               std::int64_t n, std::int64_t y, std::int64_t z) {
  return {RingElement(spec, b), RingElement(spec, c), RingElement(spec, m),
          RingElement(spec, n), RingElement(spec, y), RingElement(spec, z)};
}

CubicCoefficients CubicCoefficients::exceptional(const RingElement& n, const RingElement& m) {
  RingElement zero = RingElement::zero(n.spec());
  return {n, zero, m, n, zero, m};
}

bool CubicCoefficients::is_zero() const { return all_zero({&b, &c, &m, &n, &y, &z}); }

GeneralCubicTable good_basis(const GeneralCubicTable& t) {
  const RingSpec& s = t.spec();
  RingElement zero = RingElement::zero(s), one = RingElement::one(s);
  StructureConstants moved =
      change_basis(to_structure(t), {triple(one, zero, zero), triple(-t.f, one, zero), triple(-t.e, zero, one)});
  return from_structure(moved);
}

RelationReport validate_relations(const CubicCoefficients& k) {
  RelationReport r;
  auto check = [&](bool ok, const char* name) {
    if (!ok) {
      r.valid = false;
      r.violated.emplace_back(name);
    }
  };
  check((k.c * k.m).is_zero(), "cm = 0");
  check((k.c * k.n).is_zero(), "cn = 0");
  check((k.n * k.y).is_zero(), "ny = 0");
  check((k.m * k.y).is_zero(), "my = 0");
  check(k.b * k.m == k.m * k.n, "bm = mn");
  check(k.m * k.n == k.n * k.z, "mn = nz");
  check(k.n * k.n == k.b * k.n, "n^2 = bn");
  check(k.m * k.m == k.m * k.z, "m^2 = mz");
  return r;
}

CubicCoefficients normalize(const GeneralCubicTable& raw) {
  GeneralCubicTable t = good_basis(raw);
  std::vector<std::string> violated;
  if (t.a != -(t.c * t.z)) violated.emplace_back("a = -cz");
  if (t.d != t.c * t.y) violated.emplace_back("d = cy");
  if (t.x != -(t.b * t.y)) violated.emplace_back("x = -by");
  if (t.l != t.c * t.y - t.n * t.z) violated.emplace_back("l = cy - nz");
  CubicCoefficients out{t.b, t.c, t.m, t.n, t.y, t.z};
  RelationReport rel = validate_relations(out);
  violated.insert(violated.end(), rel.violated.begin(), rel.violated.end());
  if (!violated.empty()) throw RelationError(std::move(violated));
  return out;
}

StructureConstants build_algebra(const CubicCoefficients& k) {
  RelationReport rel = validate_relations(k);
  if (!rel.valid) throw RelationError(rel.violated);
  RingElement cy = k.c * k.y;
  RingElement zero = RingElement::zero(k.spec());
  GeneralCubicTable t{-(k.c * k.z), k.b, k.c, cy, zero, zero, cy - k.b * k.m, k.m, k.n, -(k.b * k.y), k.y, k.z};
  return to_structure(t);
}

std::string to_string(CubicCase c) {
  switch (c) {
    case CubicCase::Commutative:
      return "commutative";
    case CubicCase::Exceptional:
      return "exceptional";
    case CubicCase::Nilproduct:
      return "nilproduct";
  }
  return "";
}

CubicCase classify_case(const CubicCoefficients& k) {
  RelationReport rel = validate_relations(k);
  if (!rel.valid) throw RelationError(rel.violated);
  if (k.is_zero()) return CubicCase::Nilproduct;
  if (k.m.is_zero() && k.n.is_zero()) return CubicCase::Commutative;
  if (!k.c.is_zero() || !k.y.is_zero()) throw DomainError("noncommutative tuple with c or y nonzero");
  return CubicCase::Exceptional;
}

Involution standard_involution_E(const CubicCoefficients& k) {
  require_exceptional_or_nil(k, "standard_involution_E");
  Involution inv = involution_from_trace(make_algebra(build_algebra(k)), {k.n, k.m});
  if (!verify_standard(inv)) throw DomainError("internal error: exceptional involution failed verification");
  return inv;
}

RingElement exceptional_norm(const CubicCoefficients& k, const RingElement& a, const RingElement& b,
                             const RingElement& c) {
  return a * (a + b * k.n + c * k.m) + b * c * k.m * k.n;
}

ExceptionalWitness exceptional_witness(const CubicCoefficients& k) {
  require_exceptional_or_nil(k, "exceptional_witness");
  AlgebraPtr a = make_algebra(build_algebra(k));
  AlgebraElement big_i = k.n + (-AlgebraElement::basis(a, 1));
  AlgebraElement j = AlgebraElement::basis(a, 2);
  ExceptionalWitness w{big_i, j, k.n, k.m};
  std::vector<std::string> violated;
  if (big_i * big_i != k.n * big_i) violated.emplace_back("I^2 = nI");
  if (big_i * j != k.n * j) violated.emplace_back("Ij = nj");
  if (j * big_i != k.m * big_i) violated.emplace_back("jI = mI");
  if (j * j != k.m * j) violated.emplace_back("j^2 = mj");
  SquareMatrix span(k.spec(), 3);
  span.set_column(0, AlgebraElement::one(a).coeffs());
  span.set_column(1, big_i.coeffs());
  span.set_column(2, j.coeffs());
  if (!determinant(span).is_unit()) violated.emplace_back("A = R + M");
  if (!violated.empty()) throw RelationError(std::move(violated));
  return w;
}

Involution involution_from_witness(const ExceptionalWitness& w) {
  const AlgebraPtr& a = w.j.algebra();
  const RingSpec& s = a->spec();
  SquareMatrix span(s, 3);
  span.set_column(0, AlgebraElement::one(a).coeffs());
  span.set_column(1, w.big_i.coeffs());
  span.set_column(2, w.j.coeffs());
  auto to_witness_basis = inverse(span);
  if (!to_witness_basis) throw DomainError("witness elements do not split A as R + M");
  AlgebraElement i_bar = w.t_big_i + (-w.big_i);
  AlgebraElement j_bar = w.t_j + (-w.j);
  Involution inv{a, {}};
  for (std::size_t k = 0; k < 3; ++k) {
    Coeffs coords = (*to_witness_basis) * AlgebraElement::basis(a, k).coeffs();
    inv.images.push_back(coords[0] + (coords[1] * i_bar + coords[2] * j_bar));
  }
  return inv;
}

CubicMatrixRep matrix_rep(const CubicCoefficients& k) {
  const RingSpec& s = k.spec();
  RingElement zero = RingElement::zero(s), one = RingElement::one(s);
  RingElement cy = k.c * k.y;
  CubicMatrixRep rep{SquareMatrix(s, {{zero, -(k.c * k.z), cy}, {one, k.b, zero}, {zero, k.c, zero}}),
                     SquareMatrix(s, {{zero, cy - k.b * k.m, -(k.b * k.y)}, {zero, k.m, k.y}, {one, k.n, k.z}})};
  return rep;
}

std::vector<std::string> check_matrix_rep(const CubicCoefficients& k, const CubicMatrixRep& rep) {
  const SquareMatrix id = SquareMatrix::identity(k.spec(), 3);
  const SquareMatrix& i = rep.big_i;
  const SquareMatrix& j = rep.big_j;
  RingElement cy = k.c * k.y;
  std::vector<std::string> failed;
  if (i * i != -(k.c * k.z) * id + k.b * i + k.c * j) failed.emplace_back("I^2 = -cz + bI + cJ");
  if (i * j != cy * id) failed.emplace_back("IJ = cy");
  if (j * i != (cy - k.b * k.m) * id + k.m * i + k.n * j) failed.emplace_back("JI = (cy - bm) + mI + nJ");
  if (j * j != -(k.b * k.y) * id + k.y * i + k.z * j) failed.emplace_back("J^2 = -by + yI + zJ");
  return failed;
}

StructureConstants exceptional_ideal_algebra(const RingElement& m, const RingElement& n) {
  const RingSpec& s = m.spec();
  RingElement zero = RingElement::zero(s), one = RingElement::one(s);
  Coeffs e0 = triple(one, zero, zero), e1 = triple(zero, one, zero), e2 = triple(zero, zero, one);
  return StructureConstants(s, {{e0, e1, e2},
                                {e1, triple(zero, m, zero), triple(zero, zero, m)},
                                {e2, triple(zero, n, zero), triple(zero, zero, n)}});
}

Polynomial char_poly_case_E(const RingElement& p, const RingElement& q, const RingElement& r, const RingElement& m,
                            const RingElement& n) {
  Polynomial repeated = Polynomial::linear_factor(p + m * q + r * n);
  return Polynomial::linear_factor(p) * repeated * repeated;
}

BinaryCubicForm form_from_commutative(const CubicCoefficients& k) {
  if (!k.m.is_zero() || !k.n.is_zero()) throw DomainError("form correspondence needs m = n = 0");
  return {-k.c, k.b, -k.z, k.y};
}

CubicCoefficients commutative_from_form(const BinaryCubicForm& f) {
  RingElement zero = RingElement::zero(f.spec());
  return {f.b, -f.a, zero, zero, f.d, -f.c};
}

StructureConstants gross_lucianovic_algebra(const BinaryCubicForm& f) {
  const RingSpec& s = f.spec();
  RingElement zero = RingElement::zero(s), one = RingElement::one(s);
  RingElement ij = -(f.a * f.d);
  Coeffs e0 = triple(one, zero, zero), e1 = triple(zero, one, zero), e2 = triple(zero, zero, one);
  return StructureConstants(s, {{e0, e1, e2},
                                {e1, triple(-(f.a * f.c), f.b, -f.a), triple(ij, zero, zero)},
                                {e2, triple(ij, zero, zero), triple(-(f.b * f.d), f.d, -f.c)}});
}

RingElement form_discriminant(const BinaryCubicForm& f) {
  const RingSpec& s = f.spec();
  return f.b * f.b * f.c * f.c + RingElement(s, 18) * f.a * f.b * f.c * f.d -
         RingElement(s, 4) * f.a * f.c * f.c * f.c - RingElement(s, 4) * f.d * f.b * f.b * f.b -
         RingElement(s, 27) * f.a * f.a * f.d * f.d;
}

BinaryCubicForm gl2_act(const SquareMatrix& g, const BinaryCubicForm& f) {
  if (g.size() != 2) throw DomainError("GL2 action needs a 2x2 matrix");
  if (!(g.spec() == f.spec())) throw DomainError("matrix and form over different rings");
  RingElement det = determinant(g);
  if (!det.is_unit()) throw DomainError("det g = " + det.to_string() + " is not a unit");
  const RingSpec& s = f.spec();
  // Homogeneous polynomials in X, Y as coefficient lists, X^k first.
  using Homog = std::vector<RingElement>;
  auto mul = [&](const Homog& p, const Homog& q) {
    Homog out(p.size() + q.size() - 1, RingElement::zero(s));
    for (std::size_t i = 0; i < p.size(); ++i) {
      for (std::size_t j = 0; j < q.size(); ++j) out[i + j] += p[i] * q[j];
    }
    return out;
  };
  Homog u{g.at(0, 0), g.at(1, 0)};  // alpha X + gamma Y
  Homog v{g.at(0, 1), g.at(1, 1)};  // beta X + delta Y
  Homog uu = mul(u, u), vv = mul(v, v);
  std::vector<Homog> terms{mul(uu, u), mul(uu, v), mul(u, vv), mul(vv, v)};
  std::vector<RingElement> coeffs{f.a, f.b, f.c, f.d};
  Homog sum(4, RingElement::zero(s));
  for (std::size_t t = 0; t < 4; ++t) {
    for (std::size_t k = 0; k < 4; ++k) sum[k] += coeffs[t] * terms[t][k];
  }
  RingElement scale = det.inverse();
  return {scale * sum[0], scale * sum[1], scale * sum[2], scale * sum[3]};
}

}  // namespace lowrank
