#pragma once

#include <cstdint>
#include <vector>

#include "rrmul/ff/rational.hpp"

namespace rrmul::bounds {

/// Primes up to n inclusive, by the sieve of Eratosthenes.
std::vector<std::uint64_t> primes_up_to(std::uint64_t n);

/// Prime factors with exponents, by trial division. N >= 1.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t N);

/// Dedekind psi, N prod_{l | N} (1 + 1/l), by trial division. Throws for N = 0.
std::uint64_t psi(std::uint64_t N);

struct PsiCeiling {
    std::uint64_t value = 0;    // least psi(N) >= x with gcd(N, p) = 1
    std::uint64_t witness = 0;  // least N attaining it
};

/// The search covers every N with psi(N) at most an attained upper bound:
/// 3 * 2^j <= 2x for p odd and x >= 3/2, a prime N >= x - 1 for p = 2.
/// Throws for x <= 0 or p not prime.
PsiCeiling ceil_psi(const Rat& x, std::uint64_t p);

/// Least prime >= x. Throws for x < 2.
std::uint64_t ceil_prime(const Rat& x);

struct PrimeEps {
    Rat value;
    std::uint64_t maximizer = 0;  // p_j, or 0 when the leading term (ceil_prime(x) - x)/x wins
    std::uint64_t next = 0;       // ceil_prime of the maximizer's right end
    std::uint64_t scan_limit = 0;
    /// Always true: gaps starting at or beyond scan_limit are not computed and
    /// the supremum over them has to come from an external prime-gap estimate.
    bool relies_on_external_estimate = true;
};

/// max((ceil_prime(x) - x)/x, max over consecutive primes x <= p_j < scan_limit
/// of (p_{j+1} - p_j)/p_j). Throws unless 2 <= x <= scan_limit.
PrimeEps prime_eps(const Rat& x, std::uint64_t scan_limit);

struct ModularGenus {
    Rat genus;         // an integer
    Rat psi_over_12;
    std::uint64_t nu_inf = 0;
    std::uint64_t nu3 = 0;
    std::uint64_t nu2 = 0;
};

/// Genus of X_0(N) from psi(N)/12 + 1 - nu_inf/2 - nu3/3 - nu2/4. The
/// symbols (-1/l) and (-3/l) are the Kronecker symbols of the discriminants
/// -4 and -3, so (-1/2) = 0 and (-3/2) = -1. Throws std::logic_error if the
/// result is not an integer in [0, psi(N)/12].
ModularGenus genus_x0(std::uint64_t N);

/// sum_{d | N} phi(gcd(d, N/d)), the cusp count by its divisor-sum form.
std::uint64_t cusps_by_divisor_sum(std::uint64_t N);

/// (p - 1) psi(N) / 12. Throws unless p is prime and gcd(N, p) = 1.
Rat x0_point_lower_bound(std::uint64_t p, std::uint64_t N);

}  // namespace rrmul::bounds
