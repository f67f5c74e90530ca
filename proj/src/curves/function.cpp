#include "rrmul/curves/function.hpp"

#include <algorithm>
#include <climits>
#include <set>
#include <stdexcept>

namespace rrmul::curves {

namespace {

void require_same_field(const Curve& C, const Poly& p) {
    if (p.field() != C.field() && !p.field()->same_as(*C.field()))
        throw std::invalid_argument("function coefficients over the wrong field");
}

Poly pi_power(const Poly& pi, unsigned e) {
    Poly r = Poly::constant(pi.field(), 1);
    for (unsigned i = 0; i < e; ++i) r *= pi;
    return r;
}

std::vector<Elem> ser_mul(const ff::Field& L, const std::vector<Elem>& a, const std::vector<Elem>& b,
                          std::size_t n) {
    std::vector<Elem> r(n, 0);
    for (std::size_t i = 0; i < n && i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; i + j < n && j < b.size(); ++j) r[i + j] = L.add(r[i + j], L.mul(a[i], b[j]));
    }
    return r;
}

// Valuation of u + v y at a finite elliptic point, u and v not both zero.
long numerator_valuation(const Curve& C, const Poly& u, const Poly& v, const ClosedPoint& P) {
    const unsigned e = C.pi_valuation(P);
    unsigned m = UINT_MAX;
    if (!u.is_zero()) m = u.multiplicity(P.pi);
    if (!v.is_zero()) m = std::min(m, v.multiplicity(P.pi));
    Poly up = u, vp = v;
    if (m > 0) {
        Poly pm = pi_power(P.pi, m);
        up = u / pm;
        vp = v / pm;
    }
    FieldPtr L = C.residue_field(P.degree);
    const Elem h = L->add(up.eval_in(*L, P.x), L->mul(vp.eval_in(*L, P.x), P.y));
    long val = static_cast<long>(m) * e;
    if (h == 0) val += norm(C, up, vp).multiplicity(P.pi);
    return val;
}

// (valuation, leading coefficient) at O of u + v y.
std::pair<long, Elem> at_origin(const Poly& u, const Poly& v) {
    const long vu = u.is_zero() ? LONG_MAX : -2L * u.degree();
    const long vv = v.is_zero() ? LONG_MAX : -2L * v.degree() - 3;
    if (vu < vv) return {vu, u.lead()};
    return {vv, v.lead()};
}

}  // namespace

Poly norm(const Curve& C, const Poly& u, const Poly& v) {
    return u * u - u * v * C.h_poly() - v * v * C.f_poly();
}

Function make_function(const Curve& C, Poly u, Poly v, Poly d) {
    require_same_field(C, u);
    require_same_field(C, v);
    require_same_field(C, d);
    if (d.is_zero()) throw std::domain_error("function with zero denominator");
    if (!C.is_elliptic() && !v.is_zero()) throw std::invalid_argument("y-part on the projective line");
    const FieldPtr& F = C.field();
    if (u.is_zero() && v.is_zero()) return Function{Poly(F), Poly(F), Poly::constant(F, 1)};
    Poly g = ff::gcd(ff::gcd(u, v), d);
    if (!g.is_one()) {
        u = u / g;
        v = v / g;
        d = d / g;
    }
    const Elem c = F->inv(d.lead());
    return Function{u.scaled(c), v.scaled(c), d.scaled(c)};
}

Function fn_constant(const Curve& C, Elem c) {
    const FieldPtr& F = C.field();
    return make_function(C, Poly::constant(F, c), Poly(F), Poly::constant(F, 1));
}

Function fn_x(const Curve& C) { return fn_poly(C, Poly::x(C.field())); }

Function fn_y(const Curve& C) {
    if (!C.is_elliptic()) throw std::invalid_argument("y is not a function on the projective line");
    const FieldPtr& F = C.field();
    return make_function(C, Poly(F), Poly::constant(F, 1), Poly::constant(F, 1));
}

Function fn_poly(const Curve& C, const Poly& p) {
    const FieldPtr& F = C.field();
    return make_function(C, p, Poly(F), Poly::constant(F, 1));
}

Function fn_add(const Curve& C, const Function& f, const Function& g) {
    return make_function(C, f.u * g.d + g.u * f.d, f.v * g.d + g.v * f.d, f.d * g.d);
}

Function fn_sub(const Curve& C, const Function& f, const Function& g) {
    return make_function(C, f.u * g.d - g.u * f.d, f.v * g.d - g.v * f.d, f.d * g.d);
}

Function fn_mul(const Curve& C, const Function& f, const Function& g) {
    Poly vv = f.v * g.v;
    Poly u = f.u * g.u + vv * C.f_poly();
    Poly v = f.u * g.v + g.u * f.v - vv * C.h_poly();
    return make_function(C, u, v, f.d * g.d);
}

Function fn_scale(const Curve& C, const Function& f, Elem c) {
    return make_function(C, f.u.scaled(c), f.v.scaled(c), f.d);
}

Function fn_inv(const Curve& C, const Function& f) {
    if (f.is_zero()) throw std::domain_error("inverse of the zero function");
    Poly n = norm(C, f.u, f.v);
    return make_function(C, f.d * (f.u - f.v * C.h_poly()), -(f.d * f.v), n);
}

Function fn_div(const Curve& C, const Function& f, const Function& g) { return fn_mul(C, f, fn_inv(C, g)); }

long valuation(const Curve& C, const Function& f, const ClosedPoint& P) {
    if (f.is_zero()) throw std::domain_error("valuation of the zero function");
    if (!C.is_elliptic()) {
        if (P.infinite) return static_cast<long>(f.d.degree()) - f.u.degree();
        return static_cast<long>(f.u.multiplicity(P.pi)) - f.d.multiplicity(P.pi);
    }
    if (P.infinite) return at_origin(f.u, f.v).first + 2L * f.d.degree();
    const long vd = static_cast<long>(f.d.multiplicity(P.pi)) * C.pi_valuation(P);
    return numerator_valuation(C, f.u, f.v, P) - vd;
}

Divisor principal_divisor(const Curve& C, const Function& f) {
    if (f.is_zero()) throw std::domain_error("divisor of the zero function");
    Divisor D;
    std::set<Poly> primes;
    Poly num = C.is_elliptic() ? norm(C, f.u, f.v) : f.u;
    for (auto& [p, e] : ff::factor(num)) primes.insert(p);
    for (auto& [p, e] : ff::factor(f.d)) primes.insert(p);
    for (const auto& pi : primes)
        for (const auto& P : C.points_above(pi)) D.add(P, valuation(C, f, P));
    D.add(C.infinity(), valuation(C, f, C.infinity()));
    return D;
}

std::vector<Elem> series_of_poly(const ff::Field& L, const Poly& p, const std::vector<Elem>& xs) {
    const std::size_t n = xs.size();
    std::vector<Elem> acc(n, 0);
    for (std::size_t i = p.coeffs().size(); i-- > 0;) {
        acc = ser_mul(L, acc, xs, n);
        if (n) acc[0] = L.add(acc[0], p[i]);
    }
    return acc;
}

LocalExpansion local_expansion(const Curve& C, const ClosedPoint& P, std::size_t precision) {
    if (!C.is_elliptic() || P.infinite) throw std::invalid_argument("local expansion needs a finite elliptic point");
    LocalExpansion E;
    E.L = C.residue_field(P.degree);
    const ff::Field& L = *E.L;
    if (precision == 0) return E;
    const bool torsion = C.is_two_torsion(P);
    E.x.assign(precision, 0);
    E.y.assign(precision, 0);
    E.x[0] = P.x;
    E.y[0] = P.y;
    if (precision > 1) (torsion ? E.y : E.x)[1] = 1;
    // G(x, y) = y^2 + H(x) y - F(x); the unknown series gets one coefficient per step
    Elem slope;
    if (torsion) {
        slope = L.sub(L.mul(C.a1(), P.y), C.f_poly().derivative().eval_in(L, P.x));
    } else {
        slope = L.add(L.add(P.y, P.y), C.h_poly().eval_in(L, P.x));
    }
    const Elem inv_slope = L.inv(slope);
    auto& unknown = torsion ? E.x : E.y;
    for (std::size_t n = 1; n < precision; ++n) {
        std::vector<Elem> xs(E.x.begin(), E.x.begin() + n + 1), ys(E.y.begin(), E.y.begin() + n + 1);
        auto g = ser_mul(L, ys, ys, n + 1);
        auto hy = ser_mul(L, series_of_poly(L, C.h_poly(), xs), ys, n + 1);
        auto fx = series_of_poly(L, C.f_poly(), xs);
        Elem gn = L.sub(L.add(g[n], hy[n]), fx[n]);
        unknown[n] = L.neg(L.mul(gn, inv_slope));
    }
    return E;
}

Elem evaluate_generalized(const Curve& C, const Function& f, const ClosedPoint& P, long nu) {
    const FieldPtr L = C.residue_field(P.degree);
    if (f.is_zero()) return 0;
    if (!C.is_elliptic()) {
        if (P.infinite) {
            const long val = static_cast<long>(f.d.degree()) - f.u.degree();
            if (val + nu < 0) throw PoleTooDeep("pole deeper than the evaluation twist");
            if (val + nu > 0) return 0;
            return L->div(f.u.lead(), f.d.lead());
        }
        const unsigned mu = f.u.multiplicity(P.pi), md = f.d.multiplicity(P.pi);
        const long val = static_cast<long>(mu) - md;
        if (val + nu < 0) throw PoleTooDeep("pole deeper than the evaluation twist");
        if (val + nu > 0) return 0;
        Poly up = f.u / pi_power(P.pi, mu), dp = f.d / pi_power(P.pi, md);
        return L->div(up.eval_in(*L, P.x), dp.eval_in(*L, P.x));
    }
    if (P.infinite) {
        auto [vn, lead] = at_origin(f.u, f.v);
        const long val = vn + 2L * f.d.degree();
        if (val + nu < 0) throw PoleTooDeep("pole deeper than the evaluation twist");
        if (val + nu > 0) return 0;
        return L->div(lead, f.d.lead());
    }
    const long vn = numerator_valuation(C, f.u, f.v, P);
    const long vd = static_cast<long>(f.d.multiplicity(P.pi)) * C.pi_valuation(P);
    const long val = vn - vd;
    if (val + nu < 0) throw PoleTooDeep("pole deeper than the evaluation twist");
    if (val + nu > 0) return 0;
    auto E = local_expansion(C, P, static_cast<std::size_t>(std::max(vn, vd)) + 1);
    const ff::Field& K = *E.L;
    auto us = series_of_poly(K, f.u, E.x);
    auto vs = ser_mul(K, series_of_poly(K, f.v, E.x), E.y, E.x.size());
    auto ds = series_of_poly(K, f.d, E.x);
    const Elem num = K.add(us[vn], vs[vn]);
    if (num == 0 || ds[vd] == 0) throw std::logic_error("local expansion disagrees with the valuation");
    return K.div(num, ds[vd]);
}

std::string to_string(const Function& f) {
    if (f.is_zero()) return "0";
    std::string s;
    if (f.v.is_zero()) s = f.u.to_string();
    else if (f.u.is_zero()) s = "(" + f.v.to_string() + ")*y";
    else s = f.u.to_string() + " + (" + f.v.to_string() + ")*y";
    if (!f.d.is_one()) s = "(" + s + ")/(" + f.d.to_string() + ")";
    return s;
}

}  // namespace rrmul::curves
