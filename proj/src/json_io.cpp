#include "lowrank/json_io.hpp"

namespace lowrank::json_io {

namespace {

const Json& require(const Json& doc, const char* key) {
  if (!doc.is_object()) throw InputError("expected a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) throw InputError(std::string("missing key \"") + key + "\"");
  return *it;
}

const Json& require_array(const Json& j, const std::string& what) {
  if (!j.is_array()) throw InputError(what + " must be an array");
  return j;
}

Json with_ring(const RingSpec& spec) { return Json{{"ring", to_json(spec)}}; }

}  // namespace

RingSpec ring_from_json(const Json& j) {
  if (j.is_string()) {
    auto s = j.get<std::string>();
    if (s == "Z") return RingSpec::integers();
    if (s == "Q") return RingSpec::rationals();
    throw InputError("unknown ring \"" + s + "\"");
  }
  const Json& kind = require(j, "kind");
  if (!kind.is_string()) throw InputError("ring kind must be a string");
  auto k = kind.get<std::string>();
  if (k == "Z") return RingSpec::integers();
  if (k == "Q") return RingSpec::rationals();
  if (k == "Fp") {
    const Json& p = require(j, "p");
    if (!p.is_number_unsigned()) throw InputError("prime field modulus must be a positive integer");
    auto value = p.get<std::uint64_t>();
    if (!is_prime(value)) throw InputError("modulus " + std::to_string(value) + " is not prime");
    return RingSpec::prime_field(value);
  }
  throw InputError("unknown ring kind \"" + k + "\"");
}

Json to_json(const RingSpec& spec) {
  switch (spec.kind()) {
    case RingKind::Integers:
      return Json{{"kind", "Z"}};
    case RingKind::Rationals:
      return Json{{"kind", "Q"}};
    case RingKind::PrimeField:
      return Json{{"kind", "Fp"}, {"p", spec.modulus()}};
  }
  return {};
}

RingElement element_from_json(const RingSpec& spec, const Json& j) {
  if (j.is_string()) return RingElement::parse(spec, j.get<std::string>());
  if (j.is_number_integer()) return RingElement(spec, j.get<std::int64_t>());
  throw InputError("ring elements must be strings or integers, got " + j.dump());
}

Json to_json(const RingElement& e) { return e.to_string(); }

Coeffs coeffs_from_json(const RingSpec& spec, const Json& j, std::optional<std::size_t> expected) {
  require_array(j, "coefficient vector");
  if (expected && j.size() != *expected) {
    throw InputError("expected " + std::to_string(*expected) + " coefficients, got " + std::to_string(j.size()));
  }
  Coeffs out;
  for (const auto& e : j) out.push_back(element_from_json(spec, e));
  return out;
}

Json to_json(const Coeffs& c) {
  Json out = Json::array();
  for (const auto& e : c) out.push_back(to_json(e));
  return out;
}

RingSpec ring_of(const Json& doc, const std::optional<RingSpec>& fallback) {
  if (doc.is_object() && doc.contains("ring")) return ring_from_json(doc["ring"]);
  if (fallback) return *fallback;
  throw InputError("missing key \"ring\" and no --ring given");
}

AlgebraPtr algebra_from_json(const Json& doc, const std::optional<RingSpec>& fallback) {
  RingSpec spec = ring_of(doc, fallback);
  const Json& table = require_array(require(doc, "table"), "table");
  std::size_t k = table.size();
  if (doc.contains("rank")) {
    if (!doc["rank"].is_number_unsigned() || doc["rank"].get<std::size_t>() != k) {
      throw InputError("rank does not match the table size");
    }
  }
  std::vector<std::vector<Coeffs>> rows;
  for (const auto& row : table) {
    require_array(row, "table row");
    if (row.size() != k) throw InputError("table must be k x k");
    std::vector<Coeffs> entries;
    for (const auto& entry : row) entries.push_back(coeffs_from_json(spec, entry, k));
    rows.push_back(std::move(entries));
  }
  try {
    return make_algebra(StructureConstants(spec, std::move(rows)));
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

Json to_json(const StructureConstants& a) {
  Json out = with_ring(a.spec());
  out["rank"] = a.rank();
  Json table = Json::array();
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Json row = Json::array();
    for (std::size_t j = 0; j < a.rank(); ++j) row.push_back(to_json(a.product(i, j)));
    table.push_back(std::move(row));
  }
  out["table"] = std::move(table);
  return out;
}

Involution involution_from_json(const Json& doc, const std::optional<RingSpec>& fallback) {
  AlgebraPtr a = algebra_from_json(doc, fallback);
  const Json& images = require_array(require(doc, "images"), "images");
  if (images.size() != a->rank()) throw InputError("need one image per basis element");
  Involution inv{a, {}};
  for (const auto& img : images) inv.images.emplace_back(a, coeffs_from_json(a->spec(), img, a->rank()));
  return inv;
}

Json to_json(const Involution& inv) {
  Json out = to_json(*inv.algebra);
  Json images = Json::array();
  for (const auto& img : inv.images) images.push_back(to_json(img.coeffs()));
  out["images"] = std::move(images);
  return out;
}

QuadraticAlgebra quadratic_from_json(const Json& doc, const std::optional<RingSpec>& fallback) {
  RingSpec spec = ring_of(doc, fallback);
  return {element_from_json(spec, require(doc, "t")), element_from_json(spec, require(doc, "n"))};
}

Json to_json(const QuadraticAlgebra& q) {
  Json out = with_ring(q.spec());
  out["t"] = to_json(q.t);
  out["n"] = to_json(q.n);
  return out;
}

CubicCoefficients coefficients_from_json(const Json& doc, const std::optional<RingSpec>& fallback) {
  RingSpec spec = ring_of(doc, fallback);
  auto get = [&](const char* key) { return element_from_json(spec, require(doc, key)); };
  return {get("b"), get("c"), get("m"), get("n"), get("y"), get("z")};
}

Json to_json(const CubicCoefficients& c) {
  Json out = with_ring(c.spec());
  const char* names[] = {"b", "c", "m", "n", "y", "z"};
  auto values = c.as_vector();
  for (std::size_t i = 0; i < 6; ++i) out[names[i]] = to_json(values[i]);
  return out;
}

GeneralCubicTable general_table_from_json(const Json& doc, const std::optional<RingSpec>& fallback) {
  RingSpec spec = ring_of(doc, fallback);
  // Absent letters default to zero so sparse tables stay short.
  auto get = [&](const char* key) {
    return doc.contains(key) ? element_from_json(spec, doc[key]) : RingElement::zero(spec);
  };
  if (!doc.is_object()) throw InputError("expected a JSON object");
  return {get("a"), get("b"), get("c"), get("d"), get("e"), get("f"),
          get("l"), get("m"), get("n"), get("x"), get("y"), get("z")};
}

Json to_json(const GeneralCubicTable& t) {
  Json out = with_ring(t.spec());
  out["a"] = to_json(t.a);
  out["b"] = to_json(t.b);
  out["c"] = to_json(t.c);
  out["d"] = to_json(t.d);
  out["e"] = to_json(t.e);
  out["f"] = to_json(t.f);
  out["l"] = to_json(t.l);
  out["m"] = to_json(t.m);
  out["n"] = to_json(t.n);
  out["x"] = to_json(t.x);
  out["y"] = to_json(t.y);
  out["z"] = to_json(t.z);
  return out;
}

BinaryCubicForm form_from_json(const Json& doc, const std::optional<RingSpec>& fallback) {
  RingSpec spec = ring_of(doc, fallback);
  auto get = [&](const char* key) { return element_from_json(spec, require(doc, key)); };
  return {get("a"), get("b"), get("c"), get("d")};
}

Json to_json(const BinaryCubicForm& f) {
  Json out = with_ring(f.spec());
  out["a"] = to_json(f.a);
  out["b"] = to_json(f.b);
  out["c"] = to_json(f.c);
  out["d"] = to_json(f.d);
  return out;
}

SquareMatrix matrix_from_json(const RingSpec& spec, const Json& j) {
  require_array(j, "matrix");
  std::vector<std::vector<RingElement>> rows;
  for (const auto& row : j) rows.push_back(coeffs_from_json(spec, row, j.size()));
  try {
    return SquareMatrix(spec, rows);
  } catch (const DomainError& e) {
    throw InputError(e.what());
  }
}

Json to_json(const SquareMatrix& m) {
  Json out = Json::array();
  for (const auto& row : m.rows()) out.push_back(to_json(row));
  return out;
}

Json to_json(const Polynomial& p) {
  return Json{{"coefficients", to_json(p.coefficients())}, {"text", p.to_string()}};
}

Json to_json(const LinearMap& map) {
  Json images = Json::array();
  for (const auto& img : map.images) images.push_back(to_json(img.coeffs()));
  return Json{{"images", std::move(images)}};
}

Json to_json(const CensusReport& r) {
  Json out = Json{{"field", to_json(r.field)}, {"total", r.total}, {"valid", r.valid}};
  out["counts"] = Json{{"commutative", r.commutative}, {"exceptional", r.exceptional}, {"nilproduct", r.nilproduct}};
  out["commutative_and_involution"] = r.both;
  out["verdict"] = r.pass() ? "pass" : "fail";
  out["counterexamples"] = r.counterexamples;
  Json rows = Json::array();
  for (const auto& row : r.rows) {
    Json coeffs = to_json(row.coeffs);
    coeffs.erase("ring");
    rows.push_back(Json{{"coefficients", std::move(coeffs)},
                        {"case", to_string(row.tag)},
                        {"commutative", row.commutative},
                        {"standard_involution", row.standard_involution},
                        {"exceptional_witness", row.exceptional_witness},
                        {"ok", row.ok}});
  }
  out["rows"] = std::move(rows);
  if (!r.classes.empty()) {
    Json classes = Json::array();
    for (const auto& cls : r.classes) {
      Json members = Json::array();
      for (auto idx : cls) members.push_back(idx);
      classes.push_back(std::move(members));
    }
    out["isomorphism_classes"] = std::move(classes);
  }
  return out;
}

Json to_json(const QuadraticCensus& c) {
  Json classes = Json::array();
  for (const auto& cls : c.classes) {
    Json members = Json::array();
    for (const auto& [t, n] : cls) members.push_back(Json{{"t", to_json(t)}, {"n", to_json(n)}});
    classes.push_back(std::move(members));
  }
  return Json{{"field", to_json(c.field)},
              {"algebras", c.field.modulus() * c.field.modulus()},
              {"class_count", c.classes.size()},
              {"expected_class_count", c.expected_classes},
              {"matches_discriminant", c.matches_discriminant},
              {"classes", std::move(classes)}};
}

Json to_json(const DegreeProductReport& r) {
  Json out{{"deg_a", r.deg_a},
           {"deg_b", r.deg_b},
           {"deg_product", r.deg_product},
           {"additive", r.additive},
           {"consistent", r.consistent}};
  if (r.witness) {
    out["witness"] = Json{{"x", to_json(r.witness->first.coeffs())}, {"y", to_json(r.witness->second.coeffs())}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

Json to_json(const MnProbeReport& r) {
  Json out{{"field", to_json(r.field)},
           {"n", r.n},
           {"m2_adjoint_standard", r.adjoint_standard},
           {"m2_standard_involutions", r.m2_standard_involutions}};
  if (r.diagonal_min_poly) {
    out["diagonal_min_poly"] = to_json(*r.diagonal_min_poly);
    out["diagonal_min_poly_degree"] = r.diagonal_min_poly->degree();
  }
  out["pair_swap_standard"] = r.pair_swap_standard;
  out["pair_degree"] = r.pair_degree;
  return out;
}

}  // namespace lowrank::json_io
