#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrmul/curves/json.hpp"
#include "rrmul/curves/riemann_roch.hpp"
#include "rrmul/ff/linalg.hpp"

namespace rrmul::codes {

using curves::ClosedPoint;
using curves::Curve;
using curves::Divisor;
using ff::FieldPtr;
using ff::Json;
using ff::Matrix;
using ff::Vec;

/// Linear [n, k] code over F_q given by a full-rank k x n generator matrix.
class LinearCode {
public:
    /// Keeps a row-reduced basis of the row space of `rows`.
    static LinearCode from_spanning_rows(const Matrix& rows);

    const FieldPtr& field() const { return generator_.field(); }
    std::size_t length() const { return generator_.cols(); }
    std::size_t dimension() const { return generator_.rows(); }
    const Matrix& generator() const { return generator_; }

    /// message (length k) times the generator.
    Vec encode(const Vec& message) const;
    bool contains(const Vec& word) const;

private:
    explicit LinearCode(Matrix g) : generator_(std::move(g)) {}
    Matrix generator_;
};

/// C(G, D): images of L(D) under f -> ((z_i^{nu_i} f)(P_i))_i with nu_i = v_{P_i}(D)
/// and the uniformizers of curves::evaluate_generalized. Throws
/// std::invalid_argument unless the points are pairwise distinct and rational.
LinearCode goppa_code(const Curve& C, const std::vector<ClosedPoint>& G, const Divisor& D);

/// deg D < n and l(2D - G) = 0, with G the sum of the points.
bool xing_criterion(const Curve& C, const std::vector<ClosedPoint>& G, const Divisor& D);

struct IntersectingResult {
    bool intersecting = true;
    bool exhaustive = true;
    std::uint64_t pairs_checked = 0;
    std::optional<std::pair<Vec, Vec>> counterexample;  // two nonzero codewords with disjoint supports
};

inline constexpr std::uint64_t kDefaultPairLimit = 1'000'000;

/// Every pair of projective codewords (messages whose first nonzero entry is 1,
/// in increasing order of sum m_i q^i); the counterexample is the first pair
/// found in that order. Throws std::length_error above `pair_limit` pairs.
IntersectingResult is_intersecting_bruteforce(const LinearCode& code, std::uint64_t pair_limit = kDefaultPairLimit);

/// m random pairs of nonzero codewords; reported as non-exhaustive.
IntersectingResult is_intersecting_sampled(const LinearCode& code, std::uint64_t m, std::uint64_t seed);

/// {field, n, k, generator}.
Json code_to_json(const LinearCode& code);
LinearCode code_from_json(const Json& j);
/// One generator row per line, entries as field indices.
std::string code_to_csv(const LinearCode& code);

}  // namespace rrmul::codes
