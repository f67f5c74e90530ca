#include <algorithm>
#include <random>
#include <thread>

#include "rrmul/chudnovsky/chudnovsky.hpp"

namespace rrmul::chudnovsky {

Elem evaluate_formula(const BilinearAlgorithm& alg, Elem x, Elem y) {
    const ff::Field& F = *alg.base;
    const ff::Field& E = *alg.ext;
    const auto a = alg.phi.apply(coordinates(alg, x));
    const auto b = alg.phi.apply(coordinates(alg, y));
    Elem acc = 0;
    for (std::size_t i = 0; i < alg.n(); ++i) acc = E.add(acc, E.mul(F.mul(a[i], b[i]), alg.w[i]));
    return acc;
}

MulResult mul_via_algorithm(const BilinearAlgorithm& alg, const ff::Field& field, Elem x, Elem y) {
    if (!field.same_as(*alg.ext)) throw std::invalid_argument("element field differs from the algorithm's field");
    return mul_via_algorithm(alg, x, y);
}

MulResult mul_via_algorithm(const BilinearAlgorithm& alg, Elem x, Elem y) {
    const ff::Field& F = *alg.base;
    const ff::Field& E = *alg.ext;
    if (x >= E.order() || y >= E.order()) throw std::invalid_argument("operand outside the algorithm's field");
    const auto a = alg.phi.apply(coordinates(alg, x));
    const auto b = alg.phi.apply(coordinates(alg, y));
    MulResult r;
    for (std::size_t i = 0; i < alg.n(); ++i) {
        const Elem m = F.mul(a[i], b[i]);
        ++r.multiplications;
        r.value = E.add(r.value, E.mul(m, alg.w[i]));
    }
    if (r.multiplications != alg.n()) throw std::logic_error("multiplication count differs from the length");
    return r;
}

namespace {

enum class AddMode { Xor, Swar, Generic };

// Elements of F_{p^D} as base-p digits in 6-bit lanes, D <= 10, p <= 31.
struct Swar {
    std::uint64_t ones = 0, bias = 0, p = 0;
    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        const std::uint64_t s = a + b;
        const std::uint64_t over = ((s + bias) >> 5) & ones;
        return s - over * p;
    }
};

struct Tables {
    AddMode mode = AddMode::Generic;
    Swar swar;
    const ff::Field* E = nullptr;
    std::uint32_t qb = 0, n = 0, Qlo = 0, Qhi = 0, Qord = 0;
    std::vector<Elem> phiv;            // phi(y), n entries per y
    std::vector<Elem> mulF;            // base field products
    std::vector<std::uint64_t> wm;     // packed c * w_i
    std::vector<std::uint64_t> packed;

    std::uint64_t add(std::uint64_t a, std::uint64_t b) const {
        switch (mode) {
            case AddMode::Xor: return a ^ b;
            case AddMode::Swar: return swar.add(a, b);
            default: return E->add(static_cast<Elem>(a), static_cast<Elem>(b));
        }
    }
};

Tables make_tables(const BilinearAlgorithm& alg) {
    const ff::Field& F = *alg.base;
    const ff::Field& E = *alg.ext;
    Tables t;
    t.E = &E;
    t.qb = F.order();
    t.n = static_cast<std::uint32_t>(alg.n());
    t.Qord = E.order();
    const unsigned klo = alg.k / 2;
    t.Qlo = 1;
    for (unsigned i = 0; i < klo; ++i) t.Qlo *= t.qb;
    t.Qhi = t.Qord / t.Qlo;

    const std::uint32_t p = E.characteristic();
    const unsigned D = E.absolute_degree();
    if (p == 2) {
        t.mode = AddMode::Xor;
    } else if (p <= 31 && D <= 10) {
        t.mode = AddMode::Swar;
        for (unsigned i = 0; i < D; ++i) {
            t.swar.ones |= std::uint64_t{1} << (6 * i);
            t.swar.bias |= std::uint64_t{32 - p} << (6 * i);
        }
        t.swar.p = p;
    }
    t.packed.resize(t.Qord);
    for (Elem e = 0; e < t.Qord; ++e) {
        if (t.mode != AddMode::Swar) {
            t.packed[e] = e;
            continue;
        }
        std::uint64_t v = 0;
        Elem r = e;
        for (unsigned i = 0; i < D; ++i) {
            v |= std::uint64_t{r % p} << (6 * i);
            r /= p;
        }
        t.packed[e] = v;
    }
    t.phiv.resize(static_cast<std::size_t>(t.Qord) * t.n);
    for (Elem y = 0; y < t.Qord; ++y) {
        auto v = alg.phi.apply(coordinates(alg, y));
        std::copy(v.begin(), v.end(), t.phiv.begin() + static_cast<std::size_t>(y) * t.n);
    }
    t.mulF.resize(static_cast<std::size_t>(t.qb) * t.qb);
    for (Elem a = 0; a < t.qb; ++a)
        for (Elem b = 0; b < t.qb; ++b) t.mulF[a * t.qb + b] = F.mul(a, b);
    t.wm.resize(static_cast<std::size_t>(t.n) * t.qb);
    for (std::uint32_t i = 0; i < t.n; ++i)
        for (Elem c = 0; c < t.qb; ++c) t.wm[i * t.qb + c] = t.packed[E.mul(c, alg.w[i])];
    return t;
}

struct Failure {
    Elem x = 0, y = 0;
};

template <AddMode M>
std::optional<Failure> scan_range(const Tables& t, Elem x_lo, Elem x_hi) {
    std::vector<std::uint64_t> rh(t.Qhi), xh(t.Qhi), rl(t.Qlo), xl(t.Qlo);
    auto add = [&t](std::uint64_t a, std::uint64_t b) {
        if constexpr (M == AddMode::Xor)
            return a ^ b;
        else if constexpr (M == AddMode::Swar)
            return t.swar.add(a, b);
        else
            return t.add(a, b);
    };
    auto formula = [&](const Elem* px, Elem y) {
        const Elem* py = &t.phiv[static_cast<std::size_t>(y) * t.n];
        std::uint64_t acc = 0;
        for (std::uint32_t i = 0; i < t.n; ++i) acc = add(acc, t.wm[i * t.qb + t.mulF[px[i] * t.qb + py[i]]]);
        return acc;
    };
    for (Elem x = x_lo; x < x_hi; ++x) {
        const Elem* px = &t.phiv[static_cast<std::size_t>(x) * t.n];
        for (std::uint32_t a = 0; a < t.Qhi; ++a) {
            const Elem y = a * t.Qlo;
            rh[a] = formula(px, y);
            xh[a] = t.packed[t.E->mul(x, y)];
        }
        for (std::uint32_t b = 0; b < t.Qlo; ++b) {
            rl[b] = formula(px, b);
            xl[b] = t.packed[t.E->mul(x, b)];
        }
        for (std::uint32_t a = 0; a < t.Qhi; ++a) {
            const std::uint64_t ra = rh[a], xa = xh[a];
            std::uint64_t diff = 0;
            for (std::uint32_t b = 0; b < t.Qlo; ++b) diff |= add(ra, rl[b]) ^ add(xa, xl[b]);
            if (diff == 0) continue;
            for (std::uint32_t b = 0; b < t.Qlo; ++b)
                if (add(ra, rl[b]) != add(xa, xl[b])) return Failure{x, a * t.Qlo + b};
        }
    }
    return std::nullopt;
}

std::optional<Failure> scan(const Tables& t, Elem lo, Elem hi) {
    switch (t.mode) {
        case AddMode::Xor: return scan_range<AddMode::Xor>(t, lo, hi);
        case AddMode::Swar: return scan_range<AddMode::Swar>(t, lo, hi);
        default: return scan_range<AddMode::Generic>(t, lo, hi);
    }
}

VerifyResult with_failure(const BilinearAlgorithm& alg, VerifyResult r, Elem x, Elem y) {
    r.ok = false;
    r.counterexample = Counterexample{x, y, evaluate_formula(alg, x, y), alg.ext->mul(x, y)};
    return r;
}

}  // namespace

VerifyResult verify_exhaustive(const BilinearAlgorithm& alg, unsigned jobs, std::uint64_t limit) {
    const std::uint64_t Q = alg.ext->order();
    if (Q * Q > limit)
        throw std::length_error("exhaustive verification needs " + std::to_string(Q * Q) + " pairs, limit " +
                                std::to_string(limit));
    const Tables t = make_tables(alg);
    if (jobs == 0) jobs = std::max(1u, std::thread::hardware_concurrency());
    jobs = static_cast<unsigned>(std::min<std::uint64_t>(jobs, Q));
    std::vector<std::optional<Failure>> found(jobs);
    auto run = [&](unsigned j) {
        const Elem lo = static_cast<Elem>(Q * j / jobs), hi = static_cast<Elem>(Q * (j + 1) / jobs);
        found[j] = scan(t, lo, hi);
    };
    if (jobs == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned j = 0; j < jobs; ++j) pool.emplace_back(run, j);
        for (auto& th : pool) th.join();
    }
    VerifyResult r;
    r.exhaustive = true;
    for (const auto& f : found)
        if (f) {
            r.pairs_checked = static_cast<std::uint64_t>(f->x) * Q + f->y + 1;
            return with_failure(alg, r, f->x, f->y);
        }
    r.pairs_checked = Q * Q;
    return r;
}

VerifyResult verify_naive(const BilinearAlgorithm& alg, std::uint64_t limit) {
    const ff::Field& E = *alg.ext;
    const std::uint64_t Q = E.order();
    if (Q * Q > limit)
        throw std::length_error("naive verification needs " + std::to_string(Q * Q) + " pairs, limit " +
                                std::to_string(limit));
    VerifyResult r;
    r.exhaustive = true;
    for (Elem x = 0; x < Q; ++x)
        for (Elem y = 0; y < Q; ++y) {
            ++r.pairs_checked;
            if (evaluate_formula(alg, x, y) != E.mul(x, y)) return with_failure(alg, r, x, y);
        }
    return r;
}

VerifyResult verify_sampled(const BilinearAlgorithm& alg, std::uint64_t m, std::uint64_t seed) {
    const ff::Field& E = *alg.ext;
    std::vector<Elem> forced{0, 1};
    Elem b = 1;
    for (unsigned i = 1; i < alg.k; ++i) forced.push_back(b *= alg.base->order());
    VerifyResult r;
    auto check = [&](Elem x, Elem y) {
        ++r.pairs_checked;
        if (evaluate_formula(alg, x, y) == E.mul(x, y)) return true;
        r = with_failure(alg, r, x, y);
        return false;
    };
    for (Elem x : forced)
        for (Elem y : forced)
            if (!check(x, y)) return r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<Elem> pick(0, E.order() - 1);
    for (std::uint64_t i = 0; i < m; ++i) {
        const Elem x = pick(rng);
        const Elem y = pick(rng);
        if (!check(x, y)) return r;
    }
    return r;
}

}  // namespace rrmul::chudnovsky
