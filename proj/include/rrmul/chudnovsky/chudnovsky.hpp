#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "rrmul/curves/json.hpp"
#include "rrmul/curves/riemann_roch.hpp"
#include "rrmul/ff/linalg.hpp"

namespace rrmul::chudnovsky {

using curves::ClosedPoint;
using curves::Curve;
using curves::CurvePtr;
using curves::Divisor;
using ff::Elem;
using ff::FieldPtr;
using ff::Json;
using ff::Matrix;

/// Where an algorithm came from: the curve, D, Q and the evaluation points.
struct Provenance {
    std::string route;  // "identity", "projective_line" or "elliptic"
    CurvePtr curve;
    Divisor D;
    std::optional<ClosedPoint> Q;
    std::vector<ClosedPoint> G;
};

/// Symmetric bilinear algorithm xy = sum_i phi_i(x) phi_i(y) w_i for
/// F_{q^k} = ext over base. Row i of phi holds phi_i in the polynomial basis
/// 1, t, ..., t^{k-1} of ext.
struct BilinearAlgorithm {
    FieldPtr base;
    FieldPtr ext;
    unsigned k = 1;
    Matrix phi{nullptr, 0, 0};
    std::vector<Elem> w;
    bool symmetric = true;
    std::optional<Provenance> provenance;

    std::uint64_t q() const { return base->order(); }
    std::size_t n() const { return w.size(); }
};

/// Coordinates of x in ext over base (length k).
std::vector<Elem> coordinates(const BilinearAlgorithm& alg, Elem x);

struct PointNotFound : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// First closed point of exact degree k in the canonical point order.
/// Throws PointNotFound, quoting whether 2g+1 <= q^{(k-1)/2}(q^{1/2}-1) holds.
ClosedPoint find_closed_point_of_degree(const Curve& C, unsigned k);

struct CriterionReport {
    long g = 0, d = 0, n = 0, k = 0;
    std::size_t l_2D_minus_G = 0;
    std::size_t l_D_minus_Q = 0;
    long expected_l_D_minus_Q = 0;  // max(0, deg(D-Q) + 1 - g)
    bool lower_degree = false;      // 2d - n <= g - 1
    bool upper_degree = false;      // g - 1 <= d - k
    std::size_t dim_L_D = 0, rank_ev_Q_D = 0;
    std::size_t dim_L_2D = 0, rank_ev_G_2D = 0;

    bool two_D_minus_G_ordinary() const { return l_2D_minus_G == 0; }
    bool D_minus_Q_ordinary() const { return static_cast<long>(l_D_minus_Q) == expected_l_D_minus_Q; }
    bool ev_Q_surjective() const { return static_cast<long>(rank_ev_Q_D) == k; }
    bool ev_G_injective() const { return rank_ev_G_2D == dim_L_2D; }
    bool all() const {
        return two_D_minus_G_ordinary() && D_minus_Q_ordinary() && lower_degree && upper_degree &&
               ev_Q_surjective() && ev_G_injective();
    }
    std::string to_string() const;
};

/// Throws ordinary::PreconditionError when Q lies in supp D or the G points
/// are not pairwise distinct rational points.
CriterionReport check_criterion(const Curve& C, const Divisor& D, const ClosedPoint& Q,
                                const std::vector<ClosedPoint>& G);

struct ConstructionError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Algorithm of length |G| from evaluation at Q and at the rational points G,
/// with f at P_i read as (z_i^{nu_i} f)(P_i), nu_i = v_{P_i}(D) (doubled on
/// L(2D)). phi = ev_{G,D} o sigma with sigma the row-reduction right inverse
/// of ev_{Q,D}; w solves w o ev_{G,2D} = ev_{Q,2D}. The result is checked on
/// all pairs of basis vectors before it is returned.
BilinearAlgorithm build_multiplier(const CurvePtr& C, const ClosedPoint& Q, const std::vector<ClosedPoint>& G,
                                   const Divisor& D);

/// n = 1: multiplication in the base field itself.
BilinearAlgorithm identity_algorithm(const FieldPtr& base);

struct NoCurveFound : std::runtime_error {
    NoCurveFound(const std::string& what, std::vector<std::string> inv)
        : std::runtime_error(what), inventory(std::move(inv)) {}
    std::vector<std::string> inventory;
};

/// k = 1: identity. k <= q/2 + 1: the projective line with n = 2k - 1.
/// Otherwise the first elliptic curve (coefficients (a1, a3, a2, a4, a6) in
/// lexicographic order) with |X(F_q)| >= 2k and |X(F_q)| > 5, n = 2k, D built
/// greedily from D0 = (k-1) O. A hint replaces the inventory.
BilinearAlgorithm auto_pipeline(const FieldPtr& base, unsigned k, const CurvePtr& hint = nullptr);

struct Counterexample {
    Elem x = 0, y = 0, lhs = 0, rhs = 0;
};

struct VerifyResult {
    bool ok = true;
    bool exhaustive = false;
    std::uint64_t pairs_checked = 0;
    std::optional<Counterexample> counterexample;
};

/// Largest q^{2k} verify_exhaustive accepts by default.
inline constexpr std::uint64_t kDefaultExhaustiveLimit = 10'000'000'000ull;

/// Every pair (x, y). Both sides of each pair are assembled from tables for
/// the high and low coordinate halves of y, recomputed for every x; the
/// reported counterexample is the first failing pair in (x, y) order.
/// Throws std::length_error above `limit` pairs.
VerifyResult verify_exhaustive(const BilinearAlgorithm& alg, unsigned jobs = 1,
                               std::uint64_t limit = kDefaultExhaustiveLimit);

/// Every pair, each evaluated directly from phi and w. Reference for small sizes.
VerifyResult verify_naive(const BilinearAlgorithm& alg, std::uint64_t limit = 4'000'000);

/// m uniform pairs from the seed, plus x, y in {0, 1, basis vectors}.
VerifyResult verify_sampled(const BilinearAlgorithm& alg, std::uint64_t m, std::uint64_t seed);

/// Direct evaluation of sum_i phi_i(x) phi_i(y) w_i.
Elem evaluate_formula(const BilinearAlgorithm& alg, Elem x, Elem y);

struct MulResult {
    Elem value = 0;
    std::size_t multiplications = 0;  // bilinear base-field products
};

/// Throws std::invalid_argument when the field is not alg.ext or x, y lie outside it.
MulResult mul_via_algorithm(const BilinearAlgorithm& alg, const ff::Field& field, Elem x, Elem y);
MulResult mul_via_algorithm(const BilinearAlgorithm& alg, Elem x, Elem y);

/// {q, k, n, base_field, field_modulus, phi, w, symmetric, provenance}.
Json algorithm_to_json(const BilinearAlgorithm& alg);
BilinearAlgorithm algorithm_from_json(const Json& j);

}  // namespace rrmul::chudnovsky
