#include "rrmul/curves/group.hpp"

#include <stdexcept>

namespace rrmul::curves {

GeomPoint ec_neg(const Curve& C, const ff::Field& L, const GeomPoint& P) {
    if (P.infinite) return P;
    const Elem h = L.add(L.mul(C.a1(), P.x), C.a3());
    return GeomPoint{false, P.x, L.neg(L.add(P.y, h))};
}

GeomPoint ec_add(const Curve& C, const ff::Field& L, const GeomPoint& P, const GeomPoint& Q) {
    if (!C.is_elliptic()) throw std::logic_error("group law on the projective line");
    if (P.infinite) return Q;
    if (Q.infinite) return P;
    if (P.x == Q.x && Q.y == ec_neg(C, L, P).y) return GeomPoint{true, 0, 0};
    Elem lambda;
    if (P.x != Q.x) {
        lambda = L.div(L.sub(Q.y, P.y), L.sub(Q.x, P.x));
    } else {
        const Elem three = L.from_int(3), two = L.from_int(2);
        Elem num = L.add(L.mul(three, L.mul(P.x, P.x)), L.mul(L.mul(two, C.a2()), P.x));
        num = L.sub(L.add(num, C.a4()), L.mul(C.a1(), P.y));
        const Elem den = L.add(L.add(L.mul(two, P.y), L.mul(C.a1(), P.x)), C.a3());
        lambda = L.div(num, den);
    }
    const Elem nu = L.sub(P.y, L.mul(lambda, P.x));
    Elem x3 = L.add(L.mul(lambda, lambda), L.mul(C.a1(), lambda));
    x3 = L.sub(L.sub(L.sub(x3, C.a2()), P.x), Q.x);
    const Elem y3 = L.sub(L.neg(L.mul(L.add(lambda, C.a1()), x3)), L.add(nu, C.a3()));
    return GeomPoint{false, x3, y3};
}

GeomPoint ec_mul(const Curve& C, const ff::Field& L, long n, const GeomPoint& P) {
    GeomPoint base = n < 0 ? ec_neg(C, L, P) : P;
    unsigned long k = n < 0 ? static_cast<unsigned long>(-n) : static_cast<unsigned long>(n);
    GeomPoint acc{true, 0, 0};
    while (k) {
        if (k & 1) acc = ec_add(C, L, acc, base);
        k >>= 1;
        if (k) base = ec_add(C, L, base, base);
    }
    return acc;
}

GeomPoint trace_point(const Curve& C, const ClosedPoint& P) {
    if (P.infinite) return GeomPoint{true, 0, 0};
    FieldPtr L = C.residue_field(P.degree);
    const std::uint32_t q = C.q();
    GeomPoint acc{true, 0, 0};
    GeomPoint cur{false, P.x, P.y};
    for (unsigned i = 0; i < P.degree; ++i) {
        acc = ec_add(C, *L, acc, cur);
        cur = GeomPoint{false, L->pow(cur.x, q), L->pow(cur.y, q)};
    }
    if (!acc.infinite && (acc.x >= q || acc.y >= q)) throw std::logic_error("orbit sum is not rational");
    return acc;
}

GeomPoint divisor_sum(const Curve& C, const Divisor& D) {
    const ff::Field& F = *C.field();
    GeomPoint acc{true, 0, 0};
    for (const auto& [P, m] : D.terms()) acc = ec_add(C, F, acc, ec_mul(C, F, m, trace_point(C, P)));
    return acc;
}

}  // namespace rrmul::curves
