#include "rrmul/bounds/bounds.hpp"

#include <cmath>
#include <stdexcept>

#include "rrmul/ff/field.hpp"

namespace rrmul::bounds {

namespace {

Rat from_u(std::uint64_t v) { return Rat(BigInt(std::to_string(v))); }

Rat denom_q(std::uint64_t q) {
    const Rat q2 = from_u(q) * from_u(q);
    return q2 * q2 + 2 * q2 - 1;
}

std::optional<std::uint64_t> exact_sqrt(std::uint64_t q) {
    auto s = static_cast<std::uint64_t>(std::llround(std::sqrt(static_cast<long double>(q))));
    for (std::uint64_t c = s > 0 ? s - 1 : 0; c <= s + 1; ++c)
        if (c * c == q) return c;
    return std::nullopt;
}

// Upward rational enclosure of a positive long double value.
Rat rational_above(long double v) {
    double d = static_cast<double>(v);
    for (int i = 0; i < 4; ++i) d = std::nextafter(d, INFINITY);
    return Rat(d);
}

}  // namespace

bool BoundReport::applicable() const {
    for (const auto& h : hypotheses)
        if (!h.holds) return false;
    return true;
}

bool BoundReport::has(const std::string& name) const {
    for (const auto& [n, v] : values)
        if (n == name) return true;
    return false;
}

const Rat& BoundReport::value(const std::string& name) const {
    for (const auto& [n, v] : values)
        if (n == name) return v;
    throw std::out_of_range("no value named " + name + " in " + quantity);
}

bool BoundReport::holds(const std::string& hypothesis) const {
    for (const auto& h : hypotheses)
        if (h.name == hypothesis) return h.holds;
    throw std::out_of_range("no hypothesis named " + hypothesis + " in " + quantity);
}

bool operator==(const Hypothesis& a, const Hypothesis& b) { return a.name == b.name && a.holds == b.holds; }

bool operator==(const BoundReport& a, const BoundReport& b) {
    return a.quantity == b.quantity && a.citation == b.citation && a.values == b.values &&
           a.hypotheses == b.hypotheses && a.notes == b.notes;
}

Json report_to_json(const BoundReport& r) {
    Json j;
    j["quantity"] = r.quantity;
    j["citation"] = r.citation;
    Json values = Json::object();
    for (const auto& [n, v] : r.values) values[n] = to_string(v);
    j["values"] = std::move(values);
    Json hyps = Json::array();
    for (const auto& h : r.hypotheses) hyps.push_back({{"name", h.name}, {"holds", h.holds}});
    j["hypotheses"] = std::move(hyps);
    j["applicable"] = r.applicable();
    j["notes"] = r.notes;
    return j;
}

BoundReport report_from_json(const Json& j) {
    BoundReport r;
    r.quantity = j.at("quantity").get<std::string>();
    r.citation = j.at("citation").get<std::string>();
    for (const auto& [n, v] : j.at("values").items()) r.values.emplace_back(n, parse_rat(v.get<std::string>()));
    for (const auto& h : j.at("hypotheses")) r.hypotheses.push_back({h.at("name"), h.at("holds")});
    r.notes = j.at("notes").get<std::vector<std::string>>();
    return r;
}

Rat stv_threshold(std::uint64_t q) {
    const Rat q2 = from_u(q) * from_u(q);
    return 5 - (14 * q2 - 4) / denom_q(q);
}

Rat rq_threshold(std::uint64_t q) {
    const Rat q2 = from_u(q) * from_u(q);
    return 4 - (12 * q2 - 4) / denom_q(q);
}

Rat kappa_lower_threshold(std::uint64_t q) {
    const Rat q2 = from_u(q) * from_u(q);
    return 4 - (10 * q2 - 2) / denom_q(q);
}

BoundReport stv_bounds(std::uint64_t q, const Rat& A, const std::optional<Rat>& A_prime) {
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    BoundReport r;
    r.quantity = "asymptotic bilinear complexity m_q, M_q";
    r.citation = "shparlinski-tsfasman-vladut";
    const Rat t = stv_threshold(q);
    r.values.emplace_back("threshold", t);
    const bool a_ok = A > 1;
    r.hypotheses.push_back({"A > 1", a_ok});
    r.hypotheses.push_back({"A >= threshold", A >= t});
    if (a_ok && A >= t) r.values.emplace_back("m_q_upper", 2 * (1 + 1 / (A - 1)));
    if (A_prime) {
        const bool ap_ok = *A_prime > 1;
        r.hypotheses.push_back({"A' > 1", ap_ok});
        r.hypotheses.push_back({"A' >= threshold", *A_prime >= t});
        if (ap_ok && *A_prime >= t) r.values.emplace_back("M_q_upper", 2 * (1 + 1 / (*A_prime - 1)));
    }
    if (auto s = exact_sqrt(q)) {
        const Rat sq = from_u(*s);
        r.hypotheses.push_back({"q is a square >= 49", q >= 49});
        r.hypotheses.push_back({"sqrt(q) - 1 >= threshold", sq - 1 >= t});
        if (q >= 49 && sq - 1 >= t) r.values.emplace_back("M_q_upper_square", 2 * (1 + 1 / (sq - 2)));
        r.notes.push_back("for square q, A(q) = A'(q) = sqrt(q) - 1");
    }
    r.notes.push_back("A(q) and A'(q) are inputs, not computed");
    return r;
}

BoundReport rq_bounds(FieldSize q, const Rat& nu) {
    if (nu <= 1) throw std::invalid_argument("rq_bounds needs nu > 1");
    BoundReport r;
    r.quantity = "rate of intersecting codes R_q";
    r.citation = "intersecting-codes-rate";
    Rat t1 = 1 - Rat(5) / (2 * nu);
    const Rat t2 = Rat(1, 2) - 1 / (2 * nu);
    Rat threshold = 4;
    if (q) {
        const Rat e = from_u(*q) * from_u(*q) - 1;
        t1 += (2 - 2 / nu + 1 / e) / e;
        threshold = rq_threshold(*q);
    }
    r.values.emplace_back("term1", t1);
    r.values.emplace_back("term2", t2);
    r.values.emplace_back("rate_lower", t1 < t2 ? t1 : t2);
    r.values.emplace_back("threshold", threshold);
    r.hypotheses.push_back({"nu >= threshold", nu >= threshold});
    if (nu >= threshold) r.values.emplace_back("R_q_lower", t2);
    r.notes.push_back(q ? "finite field of order " + std::to_string(*q) : "infinite field");
    r.notes.push_back("R_q_lower reads nu as A(q)");
    return r;
}

Rat kappa_window(FieldSize q, const Rat& nu) {
    if (nu <= 2) throw std::invalid_argument("kappa_window needs nu > 2");
    if (!q) {
        if (nu <= 4) return (nu - 2) / 2;
        if (nu < 5) return nu - 3;
        return (nu - 1) / 2;
    }
    if (nu <= kappa_lower_threshold(*q)) return (nu - 2) / 2;
    if (nu < stv_threshold(*q)) {
        const Rat q2 = from_u(*q) * from_u(*q);
        const Rat c = q2 / (q2 - 1);
        return c * c * nu - 3 * c;
    }
    return (nu - 1) / 2;
}

bool weil_degree_condition(std::uint64_t q, long g, unsigned k) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    const BigInt a = 2 * g + 1;
    const BigInt Q = BigInt(std::to_string(q));
    if (k % 2 == 1) {
        const BigInt s = pow(Q, (k - 1) / 2);
        return s * s * Q >= (a + s) * (a + s);
    }
    const BigInt u = pow(Q, (k - 2) / 2);
    const BigInt lhs = u * Q - a;
    return lhs >= 0 && lhs * lhs >= u * u * Q;
}

BoundReport mu_upper(std::uint64_t q, unsigned k, const std::vector<CurveRow>& inventory) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BoundReport r;
    r.quantity = "mu_q(k) upper bound from a curve inventory";
    r.citation = "curve-inventory";
    std::vector<CurveRow> rows{{"projective line", 0, q + 1, true}};
    rows.insert(rows.end(), inventory.begin(), inventory.end());
    std::optional<long> best;
    std::string best_label;
    for (const auto& row : rows) {
        const bool a = row.has_degree_k_point || weil_degree_condition(q, row.g, k);
        const bool b = static_cast<long>(row.n1) > 5 * row.g;
        const bool c = static_cast<long>(row.n1) - row.g >= 2 * static_cast<long>(k) - 1;
        r.notes.push_back(row.label + " (g=" + std::to_string(row.g) + ", N1=" + std::to_string(row.n1) +
                          "): degree-k point " + (a ? "yes" : "no") + ", N1 > 5g " + (b ? "yes" : "no") +
                          ", N1 - g >= 2k - 1 " + (c ? "yes" : "no"));
        if (a && b && c && (!best || 2 * static_cast<long>(k) + row.g - 1 < *best)) {
            best = 2 * static_cast<long>(k) + row.g - 1;
            best_label = row.label;
        }
    }
    r.hypotheses.push_back({"some inventory row qualifies", best.has_value()});
    r.values.emplace_back("singleton_lower", Rat(2 * static_cast<long>(k) - 1));
    if (best) {
        r.values.emplace_back("mu_upper", Rat(*best));
        r.values.emplace_back("mu_upper_over_k", make_rat(*best, k));
        r.notes.push_back("best row: " + best_label);
    }
    return r;
}

BoundReport ballet_bound(std::uint64_t p, std::uint64_t k) {
    BoundReport r;
    r.quantity = "mu_{p^2}(k)/k via modular curves X_0(N)";
    r.citation = "modular-curves-psi-ceiling";
    const bool prime = ff::is_prime(p);
    r.hypotheses.push_back({"p prime", prime});
    r.hypotheses.push_back({"p >= 7", p >= 7});
    r.hypotheses.push_back({"k > (p^2 + p + 1)/2", 2 * k > p * p + p + 1});
    if (!r.applicable()) return r;
    const Rat x = make_rat(24 * static_cast<long>(k) - 12, static_cast<long>(p) - 2);
    const auto c = ceil_psi(x, p);
    const Rat bound = 2 + (make_rat(static_cast<long>(c.value), 12) - 1) / Rat(static_cast<long>(k));
    r.values.emplace_back("x", x);
    r.values.emplace_back("psi_ceiling", from_u(c.value));
    r.values.emplace_back("witness_N", from_u(c.witness));
    r.values.emplace_back("bound", bound);
    r.values.emplace_back("mu_upper", bound * Rat(static_cast<long>(k)));
    return r;
}

ComplexityTables ComplexityTables::defaults() {
    ComplexityTables t;
    t.mu[1] = 1;
    t.mu[2] = 3;
    t.mhat[{1, 1}] = 1;
    t.mhat[{2, 1}] = 1;
    return t;
}

BoundReport co_bound(std::uint64_t q, unsigned k, long g, std::uint64_t n1, bool has_degree_k_point,
                     const std::vector<std::pair<unsigned, unsigned>>& points, const ComplexityTables& tables) {
    BoundReport r;
    r.quantity = "mu_q(k) via evaluation at points of higher degree with multiplicity";
    r.citation = "cascudo-oezbudak";
    std::uint64_t deg_G = 0, sum = 0;
    for (auto [d, u] : points) {
        auto mu = tables.mu.find(d);
        if (mu == tables.mu.end()) throw MissingTableEntry("no mu_q(" + std::to_string(d) + ") supplied");
        std::uint64_t mh = 0;
        if (u == 1) {
            mh = 1;
        } else {
            auto it = tables.mhat.find({d, u});
            if (it == tables.mhat.end())
                throw MissingTableEntry("no Mhat_{q^" + std::to_string(d) + "}(" + std::to_string(u) + ") supplied");
            mh = it->second;
        }
        deg_G += static_cast<std::uint64_t>(d) * u;
        sum += mu->second * mh;
    }
    r.hypotheses.push_back({"k > 1", k > 1});
    r.hypotheses.push_back({"point of degree k", has_degree_k_point || weil_degree_condition(q, g, k)});
    r.hypotheses.push_back({"N1 > 5g", static_cast<long>(n1) > 5 * g});
    r.hypotheses.push_back({"deg G >= 2k + g - 1", static_cast<long>(deg_G) >= 2 * static_cast<long>(k) + g - 1});
    r.values.emplace_back("deg_G", from_u(deg_G));
    r.values.emplace_back("bound", from_u(sum));
    return r;
}

BoundReport n1_3n2_bound(std::uint64_t q, unsigned k, long g, std::uint64_t n1, std::uint64_t n2,
                         bool has_degree_k_point) {
    BoundReport r;
    r.quantity = "mu_q(k) from points of degree 1 and 2";
    r.citation = "degree-one-and-two-points";
    r.hypotheses.push_back({"N_k > 0", has_degree_k_point || weil_degree_condition(q, g, k)});
    r.hypotheses.push_back({"N1 > 5g", static_cast<long>(n1) > 5 * g});
    r.hypotheses.push_back(
        {"N1 + 2 N2 >= 2k + g - 1", static_cast<long>(n1 + 2 * n2) >= 2 * static_cast<long>(k) + g - 1});
    r.values.emplace_back("bound", from_u(n1 + 3 * n2));
    return r;
}

BoundReport drinfeld_vladut_ratio(std::uint64_t q, long g, std::uint64_t n1, std::uint64_t n2) {
    if (g <= 0) throw std::invalid_argument("genus must be positive");
    if (q < 2) throw std::invalid_argument("q must be >= 2");
    BoundReport r;
    r.quantity = "(N1/(sqrt q - 1) + 2 N2/(q - 1))/g";
    r.citation = "drinfeld-vladut";
    const Rat den = (from_u(q) - 1) * Rat(g);
    const Rat r0 = (from_u(n1) + 2 * from_u(n2)) / den;
    const Rat r1 = from_u(n1) / den;
    r.values.emplace_back("rational_part", r0);
    r.values.emplace_back("sqrt_q_coefficient", r1);
    if (auto s = exact_sqrt(q)) r.values.emplace_back("ratio", r0 + r1 * from_u(*s));
    const Rat slack = 1 - r0;
    r.hypotheses.push_back({"ratio <= 1", slack >= 0 && r1 * r1 * from_u(q) <= slack * slack});
    return r;
}

BoundReport prime_gap_corollary(std::uint64_t p, std::uint64_t k, std::uint64_t eps_scan_limit) {
    if (!ff::is_prime(p) || p < 7) throw std::invalid_argument("p must be a prime >= 7");
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    BoundReport r;
    r.quantity = "mu_{p^2}(k)/k under prime-gap estimates";
    r.citation = "prime-gaps";
    const Rat pm2(static_cast<long>(p) - 2);
    auto shape = [&](const Rat& c) -> Rat { return 2 * (1 + c / pm2); };

    const bool big = 2 * k > p * p + p + 1;
    r.hypotheses.push_back({"i: k > (p^2 + p + 1)/2", big});
    if (big) {
        const Rat x = make_rat(24 * static_cast<long>(k), static_cast<long>(p) - 2);
        const BigInt cx = ceil(x);
        const std::uint64_t limit = std::max<std::uint64_t>(eps_scan_limit, cx.get_ui());
        const auto eps = prime_eps(x, limit);
        r.values.emplace_back("i_eps", eps.value);
        r.values.emplace_back("i", shape(1 + eps.value));
        r.notes.push_back("i: eps scanned over prime gaps below " + std::to_string(limit) +
                          "; gaps beyond rely on an external estimate");
    }
    r.values.emplace_back("ii", shape(2));
    r.values.emplace_back("iii", shape(1 + make_rat(10, 139)));

    const long double lk = std::log(static_cast<long double>(k)) - std::log(static_cast<long double>(p));
    r.values.emplace_back("iv", shape(make_rat(1000000005, 1000000000)));
    r.notes.push_back("iv: valid for k >= e^50 p (k >= e^50 p evaluated in floating point: " +
                      std::string(lk >= 50 ? "holds" : "fails") + "); relies on an external prime-gap theorem");

    const bool v_range = k >= 16531 * (p - 2);
    r.notes.push_back(std::string("v: valid for k >= 16531 (p - 2): ") + (v_range ? "holds" : "fails") +
                      "; relies on an external prime-gap theorem; rounded upward to a rational");
    const long double L = std::log(24.0L * static_cast<long double>(k) / static_cast<long double>(p - 2));
    if (L > 0) r.values.emplace_back("v", shape(1 + rational_above(1.0L / (25.0L * L * L))));

    const long double kp = std::pow(static_cast<long double>(k), -0.475L);
    r.values.emplace_back("vi", shape(1 + rational_above(kp)));
    r.notes.push_back("vi: valid for k beyond an unspecified threshold; relies on an external prime-gap theorem; "
                      "rounded upward to a rational");
    return r;
}

}  // namespace rrmul::bounds
