#include "rrmul/curves/riemann_roch.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "rrmul/curves/group.hpp"
#include "rrmul/ff/linalg.hpp"

namespace rrmul::curves {

namespace {

Poly poly_power(const Poly& p, long e) {
    Poly r = Poly::constant(p.field(), 1);
    for (long i = 0; i < e; ++i) r *= p;
    return r;
}

long ceil_div(long a, long b) { return a >= 0 ? (a + b - 1) / b : -((-a) / b); }

RiemannRochBasis line_space(const Curve& C, const Divisor& D) {
    const FieldPtr& F = C.field();
    RiemannRochBasis out{D, {}};
    const long deg = D.degree();
    if (deg < 0) return out;
    Poly A = Poly::constant(F, 1), B = Poly::constant(F, 1);
    for (const auto& [P, m] : D.terms()) {
        if (P.infinite) continue;
        if (m > 0) B *= poly_power(P.pi, m);
        else A *= poly_power(P.pi, -m);
    }
    for (long i = 0; i <= deg; ++i)
        out.basis.push_back(make_function(C, A * Poly::monomial(F, 1, static_cast<unsigned>(i)), Poly(F), B));
    return out;
}

// L(D) on an elliptic curve: clear the finite poles with b(x), then cut the
// space L(M O) spanned by x^i, x^i y down by vanishing conditions imposed on
// local expansions at the finite points.
RiemannRochBasis elliptic_space(const Curve& C, const Divisor& D) {
    const FieldPtr& F = C.field();
    RiemannRochBasis out{D, {}};
    if (D.degree() < 0) return out;

    std::map<Poly, std::vector<ClosedPoint>> above;
    for (const auto& [P, m] : D.terms())
        if (!P.infinite && !above.count(P.pi)) above.emplace(P.pi, C.points_above(P.pi));

    Poly b = Poly::constant(F, 1);
    struct Condition {
        ClosedPoint P;
        long order;
    };
    std::vector<Condition> conditions;
    for (const auto& [pi, pts] : above) {
        long e = 0;
        for (const auto& P : pts) e = std::max(e, ceil_div(D[P], static_cast<long>(C.pi_valuation(P))));
        b *= poly_power(pi, e);
        for (const auto& P : pts) {
            const long c = e * static_cast<long>(C.pi_valuation(P)) - D[P];
            if (c > 0) conditions.push_back({P, c});
        }
    }
    const long M = D[C.infinity()] + 2L * b.degree();
    if (M < 0) return out;

    // monomials x^i y^j with pole order 2i + 3j <= M
    std::vector<std::pair<unsigned, unsigned>> mons;
    for (long w = 0; w <= M; ++w) {
        if (w % 2 == 0) mons.emplace_back(static_cast<unsigned>(w / 2), 0);
        else if (w >= 3) mons.emplace_back(static_cast<unsigned>((w - 3) / 2), 1);
    }

    std::vector<ff::Vec> rows;
    for (const auto& cond : conditions) {
        const auto n = static_cast<std::size_t>(cond.order);
        auto E = local_expansion(C, cond.P, n);
        const ff::Field& L = *E.L;
        std::vector<std::vector<Elem>> series;
        std::vector<Elem> xpow(n, 0);
        xpow[0] = 1;
        unsigned cur_i = 0;
        std::vector<std::vector<Elem>> xpows{xpow};
        for (const auto& [i, j] : mons) {
            while (cur_i < i) {
                std::vector<Elem> next(n, 0);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t c = 0; a + c < n; ++c)
                        next[a + c] = L.add(next[a + c], L.mul(xpows.back()[a], E.x[c]));
                xpows.push_back(next);
                ++cur_i;
            }
            if (j == 0) {
                series.push_back(xpows[i]);
            } else {
                std::vector<Elem> s(n, 0);
                for (std::size_t a = 0; a < n; ++a)
                    for (std::size_t c = 0; a + c < n; ++c) s[a + c] = L.add(s[a + c], L.mul(xpows[i][a], E.y[c]));
                series.push_back(s);
            }
        }
        const unsigned k = cond.P.degree;
        for (std::size_t t = 0; t < n; ++t)
            for (unsigned r = 0; r < k; ++r) {
                ff::Vec row(mons.size());
                for (std::size_t m = 0; m < mons.size(); ++m) row[m] = k == 1 ? series[m][t] : L.coeff(series[m][t], r);
                rows.push_back(std::move(row));
            }
    }
    std::vector<ff::Vec> sols;
    if (rows.empty()) {
        for (std::size_t m = 0; m < mons.size(); ++m) {
            ff::Vec e(mons.size(), 0);
            e[m] = 1;
            sols.push_back(e);
        }
    } else {
        sols = ff::kernel(ff::Matrix::from_rows(F, rows));
    }
    for (const auto& s : sols) {
        std::vector<Elem> u, v;
        for (std::size_t m = 0; m < mons.size(); ++m) {
            auto& tgt = mons[m].second == 0 ? u : v;
            if (tgt.size() <= mons[m].first) tgt.resize(mons[m].first + 1, 0);
            tgt[mons[m].first] = s[m];
        }
        out.basis.push_back(make_function(C, Poly(F, u), Poly(F, v), b));
    }
    return out;
}

}  // namespace

RiemannRochBasis riemann_roch_space(const Curve& C, const Divisor& D) {
    return C.is_elliptic() ? elliptic_space(C, D) : line_space(C, D);
}

std::size_t rr_dimension(const Curve& C, const Divisor& D) { return riemann_roch_space(C, D).dimension(); }

Divisor canonical_divisor(const Curve& C) {
    if (C.is_elliptic()) return Divisor();
    return Divisor::point(C.infinity(), -2);
}

bool is_principal(const Curve& C, const Divisor& D) {
    if (D.degree() != 0) return false;
    if (!C.is_elliptic()) return true;
    return divisor_sum(C, D).infinite;
}

bool linearly_equivalent(const Curve& C, const Divisor& A, const Divisor& B) { return is_principal(C, A - B); }

Divisor equivalent_disjoint(const Curve& C, const Divisor& D, const std::vector<ClosedPoint>& avoid) {
    auto avoided = [&](const ClosedPoint& P) { return std::find(avoid.begin(), avoid.end(), P) != avoid.end(); };
    bool clash = false;
    for (const auto& [P, m] : D.terms()) clash = clash || avoided(P);
    if (!clash) return D;
    const long d = D.degree();
    const auto& pts = C.rational_points();
    if (!C.is_elliptic()) {
        if (d == 0) return Divisor();
        for (const auto& R : pts)
            if (!avoided(R)) return Divisor::point(R, d);
        throw std::runtime_error("no rational point outside the avoided set");
    }
    const ff::Field& F = *C.field();
    const GeomPoint sum = divisor_sum(C, D);
    for (const auto& S : pts) {
        if (avoided(S)) continue;
        const GeomPoint s{S.infinite, S.x, S.y};
        const GeomPoint r = ec_add(C, F, sum, ec_mul(C, F, -(d - 1), s));
        const ClosedPoint R = C.closed_point(C.field(), r);
        if (avoided(R)) continue;
        Divisor out = Divisor::point(R, 1);
        out.add(S, d - 1);
        return out;
    }
    throw std::runtime_error("no rational point outside the avoided set");
}

}  // namespace rrmul::curves
