#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rrmul/bounds/numbers.hpp"
#include "rrmul/ff/json.hpp"

namespace rrmul::bounds {

using ff::Json;

/// Field size, or nullopt for an infinite base field.
using FieldSize = std::optional<std::uint64_t>;

struct Hypothesis {
    std::string name;
    bool holds = false;
};

/// Named exact values with the hypotheses they depend on.
struct BoundReport {
    std::string quantity;
    std::string citation;
    std::vector<std::pair<std::string, Rat>> values;
    std::vector<Hypothesis> hypotheses;
    std::vector<std::string> notes;

    bool applicable() const;
    bool has(const std::string& name) const;
    /// Throws std::out_of_range for an unknown name.
    const Rat& value(const std::string& name) const;
    bool holds(const std::string& hypothesis) const;
};

/// Values are written as "a/b" strings.
Json report_to_json(const BoundReport& r);
BoundReport report_from_json(const Json& j);
bool operator==(const Hypothesis& a, const Hypothesis& b);
bool operator==(const BoundReport& a, const BoundReport& b);

/// 5 - (14q^2 - 4)/(q^4 + 2q^2 - 1).
Rat stv_threshold(std::uint64_t q);
/// 4 - (12q^2 - 4)/(q^4 + 2q^2 - 1).
Rat rq_threshold(std::uint64_t q);
/// 4 - (10q^2 - 2)/(q^4 + 2q^2 - 1).
Rat kappa_lower_threshold(std::uint64_t q);

/// m_q <= 2(1 + 1/(A - 1)) when A >= stv_threshold(q); likewise M_q with A'.
/// For square q >= 49 also 2(1 + 1/(sqrt q - 2)) from A = A' = sqrt q - 1.
BoundReport stv_bounds(std::uint64_t q, const Rat& A, const std::optional<Rat>& A_prime = std::nullopt);

/// The two terms of the rate lower bound at nu (finite or infinite field),
/// their minimum, and R_q >= 1/2 - 1/(2 nu) under nu >= rq_threshold(q)
/// with nu read as A(q). Throws std::invalid_argument unless nu > 1.
BoundReport rq_bounds(FieldSize q, const Rat& nu);

/// Supremum of the admissible kappa at nu. Throws unless nu > 2.
Rat kappa_window(FieldSize q, const Rat& nu);

/// One curve in an inventory: genus, |X(F_q)|, and whether a point of
/// degree k is known to exist (otherwise 2g+1 <= q^{(k-1)/2}(q^{1/2}-1) is
/// required).
struct CurveRow {
    std::string label;
    long g = 0;
    std::uint64_t n1 = 0;
    bool has_degree_k_point = false;
};

/// Exact test of 2g+1 <= q^{(k-1)/2}(q^{1/2}-1).
bool weil_degree_condition(std::uint64_t q, long g, unsigned k);

/// Best 2k + g - 1 over rows with (a) a degree-k point, (b) N1 > 5g and
/// (c) N1 - g >= 2k - 1. The projective line (g = 0, N1 = q + 1, points of
/// every degree) is always added as a row. Not applicable when no row qualifies.
BoundReport mu_upper(std::uint64_t q, unsigned k, const std::vector<CurveRow>& inventory);

/// 2 + (ceil_psi((24k - 12)/(p - 2), p)/12 - 1)/k for p >= 7 prime and
/// k > (p^2 + p + 1)/2; reports (and skips the value) when a hypothesis fails.
BoundReport ballet_bound(std::uint64_t p, std::uint64_t k);

/// Known exact complexities: mu_q(1) = 1, mu_q(2) = 3 and Mhat_{q^d}(1) = 1.
/// Other entries must be supplied.
struct ComplexityTables {
    std::map<unsigned, std::uint64_t> mu;                          // degree -> mu_q(degree)
    std::map<std::pair<unsigned, unsigned>, std::uint64_t> mhat;  // (degree, u) -> Mhat_{q^degree}(u)
    static ComplexityTables defaults();
};

struct MissingTableEntry : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// sum_i mu_q(deg P_i) Mhat_{q^{deg P_i}}(u_i) over points given as (deg, u),
/// with the hypotheses N1 > 5g, deg G = sum deg_i u_i >= 2k + g - 1 and a
/// point of degree k (supplied flag or the Weil condition). Throws
/// MissingTableEntry when a table entry is absent.
BoundReport co_bound(std::uint64_t q, unsigned k, long g, std::uint64_t n1, bool has_degree_k_point,
                     const std::vector<std::pair<unsigned, unsigned>>& points, const ComplexityTables& tables);

/// N1 + 3 N2 under N_k > 0, N1 > 5g and N1 + 2 N2 >= 2k + g - 1.
BoundReport n1_3n2_bound(std::uint64_t q, unsigned k, long g, std::uint64_t n1, std::uint64_t n2,
                         bool has_degree_k_point);

/// (N1/(sqrt q - 1) + 2 N2/(q - 1))/g written as r0 + r1 sqrt q with r0, r1
/// rational, the exact value when q is a square, and whether it is <= 1.
BoundReport drinfeld_vladut_ratio(std::uint64_t q, long g, std::uint64_t n1, std::uint64_t n2);

/// Bounds on mu_{p^2}(k)/k for p >= 7 prime: items in the order
/// "i" (needs eps, the prime-gap supremum at 24k/(p-2); computed by
/// prime_eps up to eps_scan_limit and flagged as relying on an external
/// estimate beyond it), "ii", "iii" (exact), and "iv", "v", "vi", which use
/// external prime-gap theorems; "v" and "vi" involve logarithms and powers
/// and are rounded upward to rationals and flagged as approximations.
BoundReport prime_gap_corollary(std::uint64_t p, std::uint64_t k, std::uint64_t eps_scan_limit = 2'010'881);

}  // namespace rrmul::bounds
