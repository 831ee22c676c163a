#pragma once

#include <optional>

#include <json.hpp>

#include "lowrank/algebra.hpp"
#include "lowrank/classify.hpp"
#include "lowrank/cubic.hpp"
#include "lowrank/involutions.hpp"
#include "lowrank/quadratic.hpp"

namespace lowrank::json_io {

using Json = nlohmann::ordered_json;

// Every reader throws InputError on a missing key or a value of the wrong shape.

/// {"kind":"Z"} | {"kind":"Q"} | {"kind":"Fp","p":<prime>}
RingSpec ring_from_json(const Json& j);
Json to_json(const RingSpec& spec);

/// Accepts "3", "-2/7" or a JSON integer; always written as a string.
RingElement element_from_json(const RingSpec& spec, const Json& j);
Json to_json(const RingElement& e);

Coeffs coeffs_from_json(const RingSpec& spec, const Json& j, std::optional<std::size_t> expected = std::nullopt);
Json to_json(const Coeffs& c);

/// The document's "ring", or fallback when that key is absent.
RingSpec ring_of(const Json& doc, const std::optional<RingSpec>& fallback);

/// {"ring":..., "rank":k, "table":[[[...]]]}
AlgebraPtr algebra_from_json(const Json& doc, const std::optional<RingSpec>& fallback = std::nullopt);
Json to_json(const StructureConstants& a);

/// Algebra fields plus "images": one coefficient list per basis element.
Involution involution_from_json(const Json& doc, const std::optional<RingSpec>& fallback = std::nullopt);
Json to_json(const Involution& inv);

/// {"ring":..., "t":..., "n":...}
QuadraticAlgebra quadratic_from_json(const Json& doc, const std::optional<RingSpec>& fallback = std::nullopt);
Json to_json(const QuadraticAlgebra& q);

/// {"ring":..., "b","c","m","n","y","z"}
CubicCoefficients coefficients_from_json(const Json& doc, const std::optional<RingSpec>& fallback = std::nullopt);
Json to_json(const CubicCoefficients& c);

/// {"ring":..., "a","b","c","d","e","f","l","m","n","x","y","z"}
GeneralCubicTable general_table_from_json(const Json& doc, const std::optional<RingSpec>& fallback = std::nullopt);
Json to_json(const GeneralCubicTable& t);

/// {"ring":..., "a","b","c","d"}
BinaryCubicForm form_from_json(const Json& doc, const std::optional<RingSpec>& fallback = std::nullopt);
Json to_json(const BinaryCubicForm& f);

/// Rows of strings.
SquareMatrix matrix_from_json(const RingSpec& spec, const Json& j);
Json to_json(const SquareMatrix& m);

/// Coefficients low degree first, plus the rendered text.
Json to_json(const Polynomial& p);

Json to_json(const LinearMap& map);
Json to_json(const CensusReport& r);
Json to_json(const QuadraticCensus& c);
Json to_json(const DegreeProductReport& r);
Json to_json(const MnProbeReport& r);

}  // namespace lowrank::json_io
