#include "rrmul/bounds/numbers.hpp"

#include <algorithm>
#include <mutex>
#include <numeric>
#include <stdexcept>

#include "rrmul/ff/field.hpp"

namespace rrmul::bounds {

std::vector<std::uint64_t> primes_up_to(std::uint64_t n) {
    std::vector<std::uint64_t> out;
    if (n < 2) return out;
    std::vector<char> composite(n + 1, 0);
    for (std::uint64_t i = 2; i <= n; ++i) {
        if (composite[i]) continue;
        out.push_back(i);
        for (std::uint64_t j = i * i; j <= n; j += i) composite[j] = 1;
    }
    return out;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("cannot factor 0");
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t l = 2; l * l <= N; ++l) {
        if (N % l) continue;
        unsigned e = 0;
        while (N % l == 0) {
            N /= l;
            ++e;
        }
        out.emplace_back(l, e);
    }
    if (N > 1) out.emplace_back(N, 1);
    return out;
}

std::uint64_t psi(std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("psi needs N >= 1");
    std::uint64_t r = N;
    for (auto [l, e] : factorize(N)) r = r / l * (l + 1);
    return r;
}

namespace {

// psi(N) for N <= limit from a smallest-prime-factor sieve, grown on demand.
class PsiTable {
public:
    const std::vector<std::uint64_t>& upto(std::uint64_t limit) {
        std::lock_guard lock(mu_);
        if (values_.size() <= limit) build(std::max<std::uint64_t>(limit, 2 * values_.size()));
        return values_;
    }

private:
    void build(std::uint64_t limit) {
        std::vector<std::uint64_t> spf(limit + 1, 0);
        for (std::uint64_t i = 2; i <= limit; ++i)
            if (!spf[i])
                for (std::uint64_t j = i; j <= limit; j += i)
                    if (!spf[j]) spf[j] = i;
        std::vector<std::uint64_t> v(limit + 1, 0);
        if (limit >= 1) v[1] = 1;
        for (std::uint64_t n = 2; n <= limit; ++n) {
            const std::uint64_t l = spf[n];
            const std::uint64_t m = n / l;
            v[n] = m % l == 0 ? v[m] * l : v[m] * (l + 1);
        }
        values_ = std::move(v);
    }

    std::mutex mu_;
    std::vector<std::uint64_t> values_;
};

PsiTable& psi_table() {
    static PsiTable t;
    return t;
}

std::uint64_t next_prime_at_least(std::uint64_t n) {
    if (n <= 2) return 2;
    for (std::uint64_t m = n;; ++m)
        if (ff::is_prime(m)) return m;
}

}  // namespace

PsiCeiling ceil_psi(const Rat& x, std::uint64_t p) {
    if (x <= 0) throw std::invalid_argument("ceil_psi needs x > 0");
    if (!ff::is_prime(p)) throw std::invalid_argument("ceil_psi needs a prime p");
    const BigInt cx = ceil(x);
    if (!cx.fits_ulong_p()) throw std::out_of_range("x too large");
    const std::uint64_t target = cx.get_ui();
    if (target <= 1) return {1, 1};
    // an attained value bounds the search, since psi(N) >= N + 1 for N > 1
    std::uint64_t bound;
    if (p != 2) {
        bound = 3;
        while (bound < target) bound *= 2;
    } else {
        bound = next_prime_at_least(std::max<std::uint64_t>(target - 1, 3)) + 1;
    }
    const auto& table = psi_table().upto(bound);
    PsiCeiling best{bound + 1, 0};
    for (std::uint64_t N = 1; N < bound; ++N) {
        if (N % p == 0) continue;
        const std::uint64_t v = table[N];
        if (v >= target && v < best.value) best = {v, N};
    }
    if (best.witness == 0) throw std::logic_error("psi ceiling search exhausted its bound");
    return best;
}

std::uint64_t ceil_prime(const Rat& x) {
    if (x < 2) throw std::invalid_argument("ceil_prime needs x >= 2");
    const BigInt c = ceil(x);
    if (!c.fits_ulong_p()) throw std::out_of_range("x too large");
    return next_prime_at_least(c.get_ui());
}

PrimeEps prime_eps(const Rat& x, std::uint64_t scan_limit) {
    if (x < 2) throw std::invalid_argument("prime_eps needs x >= 2");
    if (x > Rat(static_cast<unsigned long>(scan_limit))) throw std::invalid_argument("scan_limit must be >= x");
    // Bertrand: the successor of every prime below scan_limit is below 2 * scan_limit.
    const auto primes = primes_up_to(2 * scan_limit);
    PrimeEps r;
    r.scan_limit = scan_limit;
    const std::uint64_t first = ceil_prime(x);
    r.value = (Rat(static_cast<unsigned long>(first)) - x) / x;
    r.next = first;
    auto it = std::lower_bound(primes.begin(), primes.end(), first);
    for (; it + 1 != primes.end() && *it < scan_limit; ++it) {
        const Rat gap = make_rat(static_cast<long>(*(it + 1) - *it), static_cast<long>(*it));
        if (gap > r.value) {
            r.value = gap;
            r.maximizer = *it;
            r.next = *(it + 1);
        }
    }
    return r;
}

namespace {

// Kronecker symbol of the discriminant -4 at a prime l.
int chi_minus4(std::uint64_t l) {
    if (l == 2) return 0;
    return l % 4 == 1 ? 1 : -1;
}

// Kronecker symbol of the discriminant -3 at a prime l.
int chi_minus3(std::uint64_t l) {
    if (l == 3) return 0;
    return l % 3 == 1 ? 1 : -1;
}

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t r = n;
    for (auto [l, e] : factorize(n)) r = r / l * (l - 1);
    return r;
}

}  // namespace

std::uint64_t cusps_by_divisor_sum(std::uint64_t N) {
    std::uint64_t s = 0;
    for (std::uint64_t d = 1; d <= N; ++d)
        if (N % d == 0) s += euler_phi(std::gcd(d, N / d));
    return s;
}

ModularGenus genus_x0(std::uint64_t N) {
    if (N == 0) throw std::invalid_argument("genus_x0 needs N >= 1");
    const auto fac = factorize(N);
    ModularGenus g;
    g.nu_inf = 1;
    std::int64_t nu2 = N % 4 == 0 ? 0 : 1, nu3 = N % 9 == 0 ? 0 : 1;
    for (auto [l, e] : fac) {
        g.nu_inf *= e % 2 ? 2 * ipow(l, (e - 1) / 2) : (l + 1) * ipow(l, e / 2 - 1);
        nu2 *= 1 + chi_minus4(l);
        nu3 *= 1 + chi_minus3(l);
    }
    g.nu2 = static_cast<std::uint64_t>(nu2);
    g.nu3 = static_cast<std::uint64_t>(nu3);
    g.psi_over_12 = make_rat(static_cast<long>(psi(N)), 12);
    g.genus = g.psi_over_12 + 1 - make_rat(static_cast<long>(g.nu_inf), 2) - make_rat(static_cast<long>(g.nu3), 3) -
              make_rat(static_cast<long>(g.nu2), 4);
    if (g.genus.get_den() != 1 || g.genus < 0 || g.genus > g.psi_over_12)
        throw std::logic_error("genus formula gave " + to_string(g.genus) + " for N = " + std::to_string(N));
    return g;
}

Rat x0_point_lower_bound(std::uint64_t p, std::uint64_t N) {
    if (!ff::is_prime(p)) throw std::invalid_argument("p must be prime");
    if (N == 0 || std::gcd(N, p) != 1) throw std::invalid_argument("N must be coprime to p");
    return make_rat(static_cast<long>(p - 1) * static_cast<long>(psi(N)), 12);
}

}  // namespace rrmul::bounds
