#include "rrmul/ordinary/ordinary.hpp"

#include <algorithm>
#include <map>
#include <mutex>

namespace rrmul::ordinary {

namespace {

BigInt qpow(std::uint64_t q, long e) { return pow(BigInt(static_cast<unsigned long>(q)), static_cast<unsigned long>(e)); }

// Per (q, w): floor term of f2 as (A_w * c - B_w * n1) / Den_w where
// c = 2g - 2 + 2a + 4w.
struct WConst {
    BigInt A, B, Den;
};

const WConst& w_const(std::uint64_t q, long w) {
    static std::mutex mu;
    static std::map<std::pair<std::uint64_t, long>, WConst> cache;
    std::lock_guard lock(mu);
    auto it = cache.find({q, w});
    if (it != cache.end()) return it->second;
    // (1 + (q^{w-2}-1)/(q^w-1))^{-1} = (q^w-1)/(q^w+q^{w-2}-2)
    const BigInt P = qpow(q, w) - 1;
    const BigInt Q = qpow(q, w) + qpow(q, w - 2) - 2;
    const Rat G = gq_closed(q, static_cast<unsigned>(w));
    WConst c;
    c.A = P * G.get_den();
    c.B = 2 * P * G.get_num();
    c.Den = Q * G.get_den();
    return cache.emplace(std::make_pair(q, w), c).first->second;
}

}  // namespace

Rat gq_sum(std::uint64_t q, unsigned n) {
    if (q < 2 || n < 2) throw std::invalid_argument("G_q(n) needs q >= 2 and n >= 2");
    const BigInt den = (qpow(q, n) - 1) * (qpow(q, n - 1) - 1);
    Rat s = 0;
    for (unsigned k = 1; k + 2 <= n; ++k) s += make_rat((qpow(q, n - k) - 1) * (qpow(q, n - k - 1) - 1), den);
    return s;
}

Rat gq_closed(std::uint64_t q, unsigned n) {
    if (q < 2 || n < 2) throw std::invalid_argument("G_q(n) needs q >= 2 and n >= 2");
    const BigInt Q(static_cast<unsigned long>(q));
    const Rat inner = Rat(1) - make_rat((Q - 1) * n, qpow(q, n) - 1);
    return make_rat(1, Q * Q - 1) - inner / Rat((Q - 1) * (qpow(q, n - 1) - 1));
}

long f1(long g, long a) {
    if (g < 1) throw std::invalid_argument("f1 needs g >= 1");
    if (a == -1) return 1;
    if (a >= 0 && a <= g - 2) return g;
    return 0;
}

long f2(long g, long a, FieldSize q, std::uint64_t n1) {
    if (g < 1) throw std::invalid_argument("f2 needs g >= 1");
    if (a == g - 2) return g;
    if (a < -2 || a > g - 2) return 0;
    if (!q) return 3 * g + 3 + a;
    if (*q < 2) throw std::invalid_argument("f2 needs q >= 2");
    const BigInt N1(static_cast<unsigned long>(n1));
    bool first = true;
    long best = 0;
    BigInt num, fl;
    for (long w = 2; w <= g - 1 - a; ++w) {
        const WConst& c = w_const(*q, w);
        num = c.A * (2 * g - 2 + 2 * a + 4 * w) - c.B * N1;
        mpz_fdiv_q(fl.get_mpz_t(), num.get_mpz_t(), c.Den.get_mpz_t());
        const long val = (g - 1 - a - w) + fl.get_si();
        if (first || val < best) best = val;
        first = false;
    }
    return best;
}

long f_s(int s, long g, long a, FieldSize q, std::uint64_t n1) {
    if (s == 1) return f1(g, a);
    if (s == 2) return f2(g, a, q, n1);
    throw std::invalid_argument("s must be 1 or 2");
}

Rat phi(int s, const Rat& nu, const Rat& alpha, FieldSize q) {
    if (s != 1 && s != 2) throw std::invalid_argument("s must be 1 or 2");
    if (alpha < 0 || alpha > 1) return 0;
    if (s == 1) return 1;
    if (alpha == 1) return 4;
    if (!q) return Rat(3) + alpha;
    const BigInt Q(static_cast<unsigned long>(*q));
    const BigInt q2 = Q * Q;
    return make_rat(3 * q2 + 1, q2 + 1) + make_rat(q2 - 1, q2 + 1) * alpha - make_rat(2 * q2, q2 * q2 - 1) * nu;
}

bool is_ordinary(const Curve& C, const Divisor& A) {
    if (C.genus() == 0) return true;
    const long expected = std::max(0L, A.degree() + 1 - static_cast<long>(C.genus()));
    return static_cast<long>(curves::rr_dimension(C, A)) == expected;
}

std::vector<ClosedPoint> exceptional_step_set(const Curve& C, const Divisor& A, int s,
                                              const std::vector<ClosedPoint>& pool) {
    if (s != 1 && s != 2) throw std::invalid_argument("s must be 1 or 2");
    if (!is_ordinary(C, A)) throw std::invalid_argument("exceptional_step_set needs an ordinary divisor");
    std::vector<ClosedPoint> out;
    for (const auto& P : pool)
        if (!is_ordinary(C, A + Divisor::point(P, s))) out.push_back(P);
    return out;
}

ReducedConstraints reduce_signed_constraints(const Curve& C, const std::vector<SignedConstraint>& signed_constraints) {
    ReducedConstraints out;
    const long g = C.genus();
    const Divisor omega = curves::canonical_divisor(C);
    for (const auto& sc : signed_constraints) {
        if (sc.k == 0 || sc.k < -2 || sc.k > 2) throw std::invalid_argument("constraint multiplier must be +-1 or +-2");
        const long num = g - 1 + sc.n();
        if (sc.k > 0) {
            out.constraints.push_back({sc.k, sc.G});
            const long b = floor(make_rat(num, sc.k)).get_si();
            out.d_plus = out.d_plus ? std::min(*out.d_plus, b) : b;
        } else {
            out.constraints.push_back({-sc.k, -omega - sc.G});
            const long b = ceil(make_rat(num, sc.k)).get_si();
            out.d_minus = out.d_minus ? std::max(*out.d_minus, b) : b;
        }
    }
    return out;
}

long pool_bound(const Curve& C, const std::vector<Constraint>& constraints, long d0, long d) {
    if (C.genus() == 0 || d0 >= d) return 0;
    const long g = C.genus();
    const std::uint64_t n1 = C.rational_points().size();
    long best = 0;
    bool first = true;
    for (long dp = d0; dp < d; ++dp) {
        long sum = 0;
        for (const auto& c : constraints) sum += f_s(c.s, g, c.s * dp - c.t(), C.q(), n1);
        if (first || sum > best) best = sum;
        first = false;
    }
    return best;
}

Divisor construct_ordinary_divisor(const Curve& C, const std::vector<Constraint>& constraints, long d,
                                   const Divisor& D0, std::vector<ClosedPoint> pool) {
    for (const auto& c : constraints)
        if (c.s != 1 && c.s != 2) throw std::invalid_argument("s must be 1 or 2");
    for (const auto& P : pool)
        if (P.degree != 1) throw std::invalid_argument("pool points must be rational");
    std::sort(pool.begin(), pool.end());
    pool.erase(std::unique(pool.begin(), pool.end()), pool.end());
    const long d0 = D0.degree();
    if (d0 > d) throw PreconditionError("deg D0 exceeds the target degree");
    auto all_ordinary = [&](const Divisor& D) {
        for (const auto& c : constraints)
            if (!is_ordinary(C, c.s * D - c.T)) return false;
        return true;
    };
    if (!all_ordinary(D0)) throw PreconditionError("some s_i D0 - T_i is exceptional");
    if (d == d0) return D0;
    const long bound = C.genus() == 0 ? 0 : pool_bound(C, constraints, d0, d);
    if (static_cast<long>(pool.size()) <= bound)
        throw PreconditionError("pool has " + std::to_string(pool.size()) + " points, needs more than " +
                                std::to_string(bound));
    Divisor D = D0;
    for (long dp = d0; dp < d; ++dp) {
        bool stepped = false;
        for (const auto& P : pool) {
            Divisor cand = D + Divisor::point(P);
            if (all_ordinary(cand)) {
                D = std::move(cand);
                stepped = true;
                break;
            }
        }
        if (!stepped)
            throw InternalContradiction("no pool point keeps the constraints ordinary at degree " +
                                        std::to_string(dp + 1));
    }
    return D;
}

}  // namespace rrmul::ordinary
