#pragma once

#include <json.hpp>

#include "rrmul/ff/field.hpp"
#include "rrmul/ff/poly.hpp"

namespace rrmul::ff {

using Json = nlohmann::ordered_json;

/// Prime fields and extensions of a prime field serialize as {p, m, modulus};
/// a relative extension as {base, degree, modulus} with the modulus
/// coefficients in the element format of the base.
Json field_to_json(const Field& f);
FieldPtr field_from_json(const Json& j);

/// Prime field elements are integers; extension elements are little-endian
/// coefficient lists over the base (nested for towers).
Json elem_to_json(const Field& f, Elem a);
Elem elem_from_json(const Field& f, const Json& j);

Json poly_to_json(const Poly& p);
Poly poly_from_json(const FieldPtr& f, const Json& j);

}  // namespace rrmul::ff
