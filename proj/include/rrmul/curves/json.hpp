#pragma once

#include "rrmul/curves/function.hpp"
#include "rrmul/ff/json.hpp"

namespace rrmul::curves {

using ff::Json;

Json curve_to_json(const Curve& C);
CurvePtr curve_from_json(const Json& j);

/// {"degree", "infinity": true} | line {"degree", "poly"} | elliptic {"degree", "x", "y"}
/// with coordinates in residue_field(degree).
Json point_to_json(const Curve& C, const ClosedPoint& P);
ClosedPoint point_from_json(const Curve& C, const Json& j);

/// [{"point", "mult"}, ...] in point order.
Json divisor_to_json(const Curve& C, const Divisor& D);
Divisor divisor_from_json(const Curve& C, const Json& j);

Json function_to_json(const Function& f);
Function function_from_json(const Curve& C, const Json& j);

}  // namespace rrmul::curves
