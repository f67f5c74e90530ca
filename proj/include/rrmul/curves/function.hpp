#pragma once

#include <string>
#include <vector>

#include "rrmul/curves/divisor.hpp"

namespace rrmul::curves {

/// Element (u + v y) / d of the function field. On the line v is zero.
/// Normalized: d is monic and shares no factor with both u and v; the zero
/// function is (0, 0, 1).
struct Function {
    Poly u{nullptr}, v{nullptr}, d{nullptr};

    bool is_zero() const { return u.is_zero() && v.is_zero(); }
    bool operator==(const Function& o) const { return u == o.u && v == o.v && d == o.d; }
};

Function make_function(const Curve& C, Poly u, Poly v, Poly d);
Function fn_constant(const Curve& C, Elem c);
Function fn_x(const Curve& C);
Function fn_y(const Curve& C);  // elliptic only
Function fn_poly(const Curve& C, const Poly& p);

Function fn_add(const Curve& C, const Function& f, const Function& g);
Function fn_sub(const Curve& C, const Function& f, const Function& g);
Function fn_mul(const Curve& C, const Function& f, const Function& g);
Function fn_scale(const Curve& C, const Function& f, Elem c);
/// Throws std::domain_error on the zero function.
Function fn_inv(const Curve& C, const Function& f);
Function fn_div(const Curve& C, const Function& f, const Function& g);

/// u^2 - u v H - v^2 F, the norm of u + v y down to F_q(x).
Poly norm(const Curve& C, const Poly& u, const Poly& v);

/// Order of f at P. Throws std::domain_error for f = 0.
long valuation(const Curve& C, const Function& f, const ClosedPoint& P);

/// div(f). Throws std::domain_error for f = 0.
Divisor principal_divisor(const Curve& C, const Function& f);

/// Pole order of f at P exceeds nu.
struct PoleTooDeep : std::domain_error {
    using std::domain_error::domain_error;
};

/// Value of z_P^nu f at P in residue_field(deg P), with the uniformizers
///   line:      pi(x) at a finite point, 1/x at infinity;
///   elliptic:  x - x_P off the 2-torsion, y - y_P on it, x/y at O.
/// Throws PoleTooDeep when v_P(f) < -nu.
Elem evaluate_generalized(const Curve& C, const Function& f, const ClosedPoint& P, long nu);
inline Elem evaluate(const Curve& C, const Function& f, const ClosedPoint& P) {
    return evaluate_generalized(C, f, P, 0);
}

/// Power series of x and y in the uniformizer at a finite point of an
/// elliptic curve, `precision` terms each, over residue_field(deg P).
struct LocalExpansion {
    FieldPtr L;
    std::vector<Elem> x, y;
};
LocalExpansion local_expansion(const Curve& C, const ClosedPoint& P, std::size_t precision);

/// Truncated series of p(x) for x given as a series.
std::vector<Elem> series_of_poly(const ff::Field& L, const Poly& p, const std::vector<Elem>& xs);

std::string to_string(const Function& f);

}  // namespace rrmul::curves
