#pragma once

#include "rrmul/curves/divisor.hpp"

namespace rrmul::curves {

/// Chord-tangent group law on an elliptic curve with O as identity, over an
/// extension field L of the base.
GeomPoint ec_neg(const Curve& C, const ff::Field& L, const GeomPoint& P);
GeomPoint ec_add(const Curve& C, const ff::Field& L, const GeomPoint& P, const GeomPoint& Q);
GeomPoint ec_mul(const Curve& C, const ff::Field& L, long n, const GeomPoint& P);

/// Sum of the geometric points in the orbit of P; a rational point.
GeomPoint trace_point(const Curve& C, const ClosedPoint& P);

/// Image of D under the sum map Div(E) -> E(F_q).
GeomPoint divisor_sum(const Curve& C, const Divisor& D);

}  // namespace rrmul::curves
