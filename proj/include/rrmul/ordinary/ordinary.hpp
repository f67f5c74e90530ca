#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "rrmul/curves/riemann_roch.hpp"
#include "rrmul/ff/rational.hpp"

namespace rrmul::ordinary {

using curves::ClosedPoint;
using curves::Curve;
using curves::Divisor;

/// Field size, or nullopt for an infinite base field.
using FieldSize = std::optional<std::uint64_t>;

/// G_q(n) as the finite sum over k = 1..n-2. Requires q >= 2, n >= 2.
Rat gq_sum(std::uint64_t q, unsigned n);
/// The same quantity in closed form.
Rat gq_closed(std::uint64_t q, unsigned n);
inline Rat gq(std::uint64_t q, unsigned n) { return gq_closed(q, n); }

/// 1 at a = -1, g on [0, g-2], 0 elsewhere.
long f1(long g, long a);

/// g at a = g-2; on [-2, g-3] the minimum over w of the floored bound
/// (finite q, needs n1 = |X(F_q)|) or 3g+3+a (infinite field); 0 elsewhere.
long f2(long g, long a, FieldSize q, std::uint64_t n1);

/// f1 or f2 by s.
long f_s(int s, long g, long a, FieldSize q, std::uint64_t n1);

/// The limit shapes phi_{1,nu} and phi_{2,nu}.
Rat phi(int s, const Rat& nu, const Rat& alpha, FieldSize q);

/// l(A) == max(0, deg A + 1 - g). On the projective line every divisor is
/// declared ordinary, which agrees with l there.
bool is_ordinary(const Curve& C, const Divisor& A);

/// {P in pool : A + sP exceptional}. Throws std::invalid_argument when A is
/// not ordinary or s is not 1 or 2.
std::vector<ClosedPoint> exceptional_step_set(const Curve& C, const Divisor& A, int s,
                                              const std::vector<ClosedPoint>& pool);

/// s D - T is to be ordinary.
struct Constraint {
    int s = 1;
    Divisor T;
    long t() const { return T.degree(); }
};

/// l(k D - G) is to vanish.
struct SignedConstraint {
    int k = 1;
    Divisor G;
    long n() const { return G.degree(); }
};

/// Window of admissible degrees; nullopt bounds are unbounded.
struct ReducedConstraints {
    std::vector<Constraint> constraints;
    std::optional<long> d_minus;
    std::optional<long> d_plus;
    bool feasible() const { return !d_minus || !d_plus || *d_minus <= *d_plus; }
    bool admits(long d) const { return (!d_minus || d >= *d_minus) && (!d_plus || d <= *d_plus); }
};

ReducedConstraints reduce_signed_constraints(const Curve& C, const std::vector<SignedConstraint>& signed_constraints);

struct PreconditionError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};
struct InternalContradiction : std::logic_error {
    using std::logic_error::logic_error;
};

/// max over d0 <= d' < d of sum_i f_{s_i}(s_i d' - t_i), with N1 = |X(F_q)|;
/// 0 on the projective line or when d0 >= d.
long pool_bound(const Curve& C, const std::vector<Constraint>& constraints, long d0, long d);

/// Greedy construction: D = D0 + P_1 + ... + P_{d-d0}, each P_j the first
/// point of the (sorted) pool keeping every s_i D - T_i ordinary.
Divisor construct_ordinary_divisor(const Curve& C, const std::vector<Constraint>& constraints, long d,
                                   const Divisor& D0, std::vector<ClosedPoint> pool);

}  // namespace rrmul::ordinary
