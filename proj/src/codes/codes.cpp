#include "rrmul/codes/codes.hpp"

#include <random>
#include <set>
#include <sstream>

namespace rrmul::codes {

LinearCode LinearCode::from_spanning_rows(const Matrix& rows) {
    auto e = ff::row_reduce(rows);
    Matrix g(rows.field(), e.pivots.size(), rows.cols());
    for (std::size_t i = 0; i < e.pivots.size(); ++i)
        for (std::size_t j = 0; j < rows.cols(); ++j) g.at(i, j) = e.reduced.at(i, j);
    return LinearCode(std::move(g));
}

Vec LinearCode::encode(const Vec& message) const {
    if (message.size() != dimension()) throw ff::DimensionError("message length differs from the dimension");
    return generator_.transpose().apply(message);
}

bool LinearCode::contains(const Vec& word) const {
    if (word.size() != length()) throw ff::DimensionError("word length differs from the code length");
    return ff::solve_linear(generator_.transpose(), word).particular.has_value();
}

LinearCode goppa_code(const Curve& C, const std::vector<ClosedPoint>& G, const Divisor& D) {
    std::set<ClosedPoint> seen;
    for (const auto& P : G) {
        if (P.degree != 1) throw std::invalid_argument("code positions must be rational points");
        if (!seen.insert(P).second) throw std::invalid_argument("code positions must be pairwise distinct");
    }
    auto L = curves::riemann_roch_space(C, D);
    Matrix rows(C.field(), L.dimension(), G.size());
    for (std::size_t j = 0; j < L.dimension(); ++j)
        for (std::size_t i = 0; i < G.size(); ++i)
            rows.at(j, i) = curves::evaluate_generalized(C, L.basis[j], G[i], D[G[i]]);
    return LinearCode::from_spanning_rows(rows);
}

bool xing_criterion(const Curve& C, const std::vector<ClosedPoint>& G, const Divisor& D) {
    const long n = static_cast<long>(G.size());
    if (D.degree() >= n) return false;
    Divisor Gd;
    for (const auto& P : G) Gd.add(P, 1);
    return curves::rr_dimension(C, 2 * D - Gd) == 0;
}

namespace {

using Support = std::vector<std::uint64_t>;

Support support_of(const Vec& c) {
    Support s((c.size() + 63) / 64, 0);
    for (std::size_t i = 0; i < c.size(); ++i)
        if (c[i]) s[i / 64] |= std::uint64_t{1} << (i % 64);
    return s;
}

bool disjoint(const Support& a, const Support& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] & b[i]) return false;
    return true;
}

Vec message_of(std::uint64_t idx, std::uint32_t q, std::size_t k) {
    Vec m(k);
    for (std::size_t i = 0; i < k; ++i) {
        m[i] = static_cast<ff::Elem>(idx % q);
        idx /= q;
    }
    return m;
}

}  // namespace

IntersectingResult is_intersecting_bruteforce(const LinearCode& code, std::uint64_t pair_limit) {
    const std::uint32_t q = code.field()->order();
    const std::size_t k = code.dimension();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < k; ++i) {
        if (total > pair_limit * q) throw std::length_error("code too large for the exhaustive intersecting check");
        total *= q;
    }
    const std::uint64_t projective = (total - 1) / (q - 1);
    if (projective * (projective + 1) / 2 > pair_limit)
        throw std::length_error("exhaustive intersecting check needs " +
                                std::to_string(projective * (projective + 1) / 2) + " pairs, limit " +
                                std::to_string(pair_limit));
    std::vector<Vec> words;
    std::vector<Support> supports;
    for (std::uint64_t idx = 1; idx < total; ++idx) {
        Vec m = message_of(idx, q, k);
        std::size_t lead = 0;
        while (m[lead] == 0) ++lead;
        if (m[lead] != 1) continue;
        words.push_back(code.encode(m));
        supports.push_back(support_of(words.back()));
    }
    IntersectingResult r;
    for (std::size_t i = 0; i < words.size(); ++i)
        for (std::size_t j = i; j < words.size(); ++j) {
            ++r.pairs_checked;
            if (disjoint(supports[i], supports[j])) {
                r.intersecting = false;
                r.counterexample = std::make_pair(words[i], words[j]);
                return r;
            }
        }
    return r;
}

IntersectingResult is_intersecting_sampled(const LinearCode& code, std::uint64_t m, std::uint64_t seed) {
    const std::uint32_t q = code.field()->order();
    const std::size_t k = code.dimension();
    IntersectingResult r;
    r.exhaustive = false;
    if (k == 0) return r;
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<ff::Elem> pick(0, q - 1);
    auto random_nonzero = [&] {
        for (;;) {
            Vec msg(k);
            for (auto& c : msg) c = pick(rng);
            for (auto c : msg)
                if (c) return msg;
        }
    };
    for (std::uint64_t i = 0; i < m; ++i) {
        Vec a = code.encode(random_nonzero()), b = code.encode(random_nonzero());
        ++r.pairs_checked;
        if (disjoint(support_of(a), support_of(b))) {
            r.intersecting = false;
            r.counterexample = std::make_pair(std::move(a), std::move(b));
            return r;
        }
    }
    return r;
}

Json code_to_json(const LinearCode& code) {
    const ff::Field& F = *code.field();
    Json j;
    j["field"] = ff::field_to_json(F);
    j["n"] = code.length();
    j["k"] = code.dimension();
    Json g = Json::array();
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < code.length(); ++c) row.push_back(ff::elem_to_json(F, code.generator().at(i, c)));
        g.push_back(std::move(row));
    }
    j["generator"] = std::move(g);
    return j;
}

LinearCode code_from_json(const Json& j) {
    FieldPtr F = ff::field_from_json(j.at("field"));
    const std::size_t n = j.at("n").get<std::size_t>();
    const std::size_t k = j.at("k").get<std::size_t>();
    const Json& g = j.at("generator");
    if (g.size() != k) throw std::invalid_argument("generator must have k rows");
    Matrix m(F, k, n);
    for (std::size_t i = 0; i < k; ++i) {
        if (g[i].size() != n) throw std::invalid_argument("generator rows must have n entries");
        for (std::size_t c = 0; c < n; ++c) m.at(i, c) = ff::elem_from_json(*F, g[i][c]);
    }
    LinearCode code = LinearCode::from_spanning_rows(m);
    if (code.dimension() != k) throw std::invalid_argument("generator does not have full row rank");
    return code;
}

std::string code_to_csv(const LinearCode& code) {
    std::ostringstream os;
    for (std::size_t i = 0; i < code.dimension(); ++i) {
        for (std::size_t c = 0; c < code.length(); ++c) os << (c ? "," : "") << code.generator().at(i, c);
        os << "\n";
    }
    return os.str();
}

}  // namespace rrmul::codes
