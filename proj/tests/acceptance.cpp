// Acceptance gate: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include <chrono>
#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <thread>
#include <unistd.h>

#include "cli.hpp"
#include "rrmul/bounds/bounds.hpp"
#include "rrmul/chudnovsky/chudnovsky.hpp"
#include "rrmul/codes/codes.hpp"
#include "rrmul/ordinary/ordinary.hpp"

using namespace rrmul;
using chudnovsky::BilinearAlgorithm;
using curves::ClosedPoint;
using curves::Curve;
using curves::CurvePtr;
using curves::Divisor;
using ff::Elem;
using ff::field_create;
using ff::FieldPtr;
using ff::Json;

namespace fs = std::filesystem;

namespace {

struct Outcome {
    bool pass = true;
    std::string detail;
};

/// Collects failure messages; keeps the first few.
struct Checker {
    Outcome out;
    int failures = 0;
    void expect(bool ok, const std::string& what) {
        if (ok) return;
        if (failures++ < 5) out.detail += (out.detail.empty() ? "" : "; ") + what;
        out.pass = false;
    }
    Outcome done(const std::string& summary) {
        if (out.pass) out.detail = summary;
        else if (failures > 5) out.detail += "; " + std::to_string(failures - 5) + " more";
        return out;
    }
};

unsigned jobs() { return std::max(1u, std::thread::hardware_concurrency()); }

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt_seconds(double s) {
    std::ostringstream os;
    os.precision(2);
    os << std::fixed << s << " s";
    return os.str();
}

struct CliRun {
    int code = 0;
    std::string out, err;
};

CliRun cli(std::vector<std::string> args) {
    args.insert(args.begin(), "rrmul");
    std::ostringstream out, err;
    CliRun r;
    r.code = cli::run(args, out, err);
    r.out = out.str();
    r.err = err.str();
    return r;
}

std::string slurp(const fs::path& p) {
    std::ifstream f(p, std::ios::binary);
    std::ostringstream os;
    os << f.rdbuf();
    return os.str();
}

/// Nonsingular elliptic curve from random coefficients, with more than `min_points` rational points.
CurvePtr random_elliptic(const FieldPtr& F, std::mt19937_64& rng, std::size_t min_points) {
    for (;;) {
        std::array<Elem, 5> a{};
        for (auto& c : a) c = static_cast<Elem>(rng() % F->order());
        try {
            auto C = Curve::elliptic(F, a);
            if (C->rational_points().size() > min_points) return C;
        } catch (const std::invalid_argument&) {
        }
    }
}

std::vector<ClosedPoint> random_subset(std::vector<ClosedPoint> pts, std::size_t n, std::mt19937_64& rng) {
    std::shuffle(pts.begin(), pts.end(), rng);
    pts.resize(n);
    std::sort(pts.begin(), pts.end());
    return pts;
}

Divisor sum_of(const std::vector<ClosedPoint>& pts) {
    Divisor D;
    for (const auto& P : pts) D.add(P, 1);
    return D;
}

// 1
Outcome criterion_1(const fs::path& dir) {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    const fs::path file = dir / "c1_q4_k3.json";
    auto r = cli({"build-multiplier", "--q", "4", "--k", "3", "--verify", "exhaustive", "--out", file.string()});
    const double t = seconds_since(t0);
    c.expect(r.code == 0, "exit code " + std::to_string(r.code) + ": " + r.err);
    if (r.code != 0) return c.done("");
    Json rep = Json::parse(r.out);
    c.expect(rep["n"] == 5, "length " + rep["n"].dump());
    c.expect(rep["symmetric"] == true, "not symmetric");
    c.expect(rep["verification"]["exhaustive"] == true && rep["verification"]["ok"] == true, "verification failed");
    c.expect(rep["verification"]["pairs_checked"] == 4096, "pairs " + rep["verification"]["pairs_checked"].dump());
    c.expect(rep["singleton_lower"] == 5 && rep["meets_lower"] == true, "lower bound 2k-1 not met");
    // The file round-trips through an independent naive check.
    auto alg = chudnovsky::algorithm_from_json(Json::parse(slurp(file)));
    auto naive = chudnovsky::verify_naive(alg);
    c.expect(naive.ok && naive.pairs_checked == 4096, "naive recheck failed");
    auto mu = bounds::mu_upper(4, 3, {});
    c.expect(mu.applicable() && mu.value("mu_upper") == 5, "P1 row of the inventory bound is not 5");
    c.expect(t < 1.0, "took " + fmt_seconds(t));
    return c.done("n = 5 = 2k-1, symmetric, 4096/4096 pairs, " + fmt_seconds(t));
}

// 2
Outcome criterion_2() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    int instances = 0;
    std::uint64_t pairs = 0;
    for (auto [p, m] : {std::pair{2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}}) {
        auto F = field_create(p, m);
        const unsigned q = F->order();
        for (unsigned k = 1; 2 * k <= q + 2; ++k) {
            auto alg = chudnovsky::auto_pipeline(F, k);
            const std::string tag = "q=" + std::to_string(q) + " k=" + std::to_string(k);
            c.expect(alg.n() == 2 * k - 1, tag + " length " + std::to_string(alg.n()));
            if (k > 1) c.expect(alg.provenance && alg.provenance->route == "projective_line", tag + " not on P1");
            auto v = chudnovsky::verify_exhaustive(alg, jobs());
            c.expect(v.ok && v.exhaustive, tag + " verification failed");
            pairs += v.pairs_checked;
            ++instances;
        }
    }
    const double t = seconds_since(t0);
    c.expect(t < 30.0, "took " + fmt_seconds(t));
    return c.done(std::to_string(instances) + " instances, n = 2k-1 each, " + std::to_string(pairs) + " pairs, " +
                  fmt_seconds(t));
}

// 3
Outcome criterion_3() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    auto alg = chudnovsky::auto_pipeline(field_create(5, 1), 4);
    c.expect(alg.provenance && alg.provenance->route == "elliptic", "route is not elliptic");
    std::size_t n1 = 0;
    if (alg.provenance && alg.provenance->curve) n1 = alg.provenance->curve->rational_points().size();
    c.expect(n1 >= 8, "curve has " + std::to_string(n1) + " points");
    c.expect(alg.n() == 8, "length " + std::to_string(alg.n()));
    auto v = chudnovsky::verify_exhaustive(alg, jobs());
    c.expect(v.ok && v.exhaustive && v.pairs_checked == 390625, "exhaustive verification over 5^8 pairs failed");
    const double t = seconds_since(t0);
    c.expect(t < 60.0, "took " + fmt_seconds(t));
    return c.done((alg.provenance && alg.provenance->curve ? alg.provenance->curve->describe() : std::string("?")) +
                  " with " + std::to_string(n1) + " points, n = 8, 390625 pairs, " + fmt_seconds(t));
}

// 4
Outcome criterion_4() {
    Checker c;
    std::mt19937_64 rng(4);
    int done = 0;
    while (done < 50) {
        auto [p, m] = std::vector<std::pair<unsigned, unsigned>>{{5, 1}, {7, 1}, {3, 2}}[done % 3];
        auto F = field_create(p, m);
        auto C = random_elliptic(F, rng, 5);
        const auto& pts = C->rational_points();
        const long g = 1;
        const unsigned kmax = std::min<unsigned>(static_cast<unsigned>(pts.size() / 2), 4);
        const unsigned k = 2 + static_cast<unsigned>(rng() % (kmax - 1));
        const std::size_t n = std::min<std::size_t>(pts.size(), 2 * k + g - 1 + rng() % 3);
        // Enumerating all degree-k points needs F_{q^{2k}}; past the table limit take the first one.
        ClosedPoint Q;
        if (std::pow(static_cast<double>(F->order()), 2.0 * k) <= ff::kMaxFieldOrder) {
            auto deg_k = C->points_of_degree(k);
            if (deg_k.empty()) continue;
            Q = deg_k[rng() % deg_k.size()];
        } else {
            Q = chudnovsky::find_closed_point_of_degree(*C, k);
        }
        const auto G = random_subset(pts, n, rng);
        const Divisor Gd = sum_of(G);
        const long d = static_cast<long>(k) + g - 1;
        const long d0 = std::min<long>(k - 1, (static_cast<long>(n) - 1) / 2);
        const Divisor D0 = Divisor::point(pts[rng() % pts.size()], d0);
        const std::string tag = C->describe() + " k=" + std::to_string(k) + " n=" + std::to_string(n);
        ++done;
        Divisor D;
        try {
            D = ordinary::construct_ordinary_divisor(*C, {{1, Divisor::point(Q)}, {2, Gd}}, d, D0, pts);
        } catch (const std::exception& e) {
            c.expect(false, tag + ": " + e.what());
            continue;
        }
        c.expect(D.degree() == d, tag + " wrong degree");
        auto rep = chudnovsky::check_criterion(*C, D, Q, G);
        c.expect(rep.l_2D_minus_G == 0, tag + " l(2D-G) = " + std::to_string(rep.l_2D_minus_G));
        c.expect(rep.dim_L_2D == rep.rank_ev_G_2D, tag + " evaluation at G has a kernel on L(2D)");
        const long expected = D.degree() - static_cast<long>(k) + 1 - g;
        c.expect(static_cast<long>(rep.l_D_minus_Q) == std::max(0L, expected), tag + " l(D-Q) differs");
        c.expect(static_cast<long>(rep.dim_L_D - rep.rank_ev_Q_D) == std::max(0L, expected),
                 tag + " evaluation at Q has the wrong kernel on L(D)");
    }
    return c.done("50 configurations over F_5, F_7, F_9; l(2D-G) = 0 and l(D-Q) = deg(D-Q)+1-g by RR spaces and by "
                  "evaluation ranks");
}

// 5
Outcome criterion_5() {
    Checker c;
    std::mt19937_64 rng(5);
    long checked = 0, largest = 0;
    for (std::uint32_t p : {3u, 5u, 7u}) {
        auto F = field_create(p, 1);
        for (int s : {1, 2}) {
            int count = 0;
            while (count < 100) {
                auto C = random_elliptic(F, rng, 0);
                const auto& pts = C->rational_points();
                auto deg2 = C->points_of_degree(2);
                Divisor A;
                const int terms = 1 + static_cast<int>(rng() % 4);
                for (int i = 0; i < terms; ++i) A.add(pts[rng() % pts.size()], static_cast<long>(rng() % 5) - 2);
                if (!deg2.empty() && rng() % 3 == 0) A.add(deg2[rng() % deg2.size()], static_cast<long>(rng() % 3) - 1);
                if (!ordinary::is_ordinary(*C, A)) continue;
                ++count;
                auto bad = ordinary::exceptional_step_set(*C, A, s, pts);
                const long bound = ordinary::f_s(s, 1, A.degree(), p, pts.size());
                largest = std::max<long>(largest, static_cast<long>(bad.size()));
                c.expect(static_cast<long>(bad.size()) <= bound,
                         C->describe() + " A=" + A.to_string() + " s=" + std::to_string(s) + ": " +
                             std::to_string(bad.size()) + " > " + std::to_string(bound));
                ++checked;
            }
        }
    }
    return c.done(std::to_string(checked) + " ordinary divisors, zero violations, largest exceptional set " +
                  std::to_string(largest));
}

// 6
Outcome criterion_6() {
    Checker c;
    int cases = 0;
    for (std::uint64_t q = 2; q <= 16; ++q) {
        c.expect(ordinary::gq_sum(q, 2) == 0 && ordinary::gq_closed(q, 2) == 0, "G_q(2) != 0 at q=" + std::to_string(q));
        Rat prev = ordinary::gq_closed(q, 2);
        for (unsigned n = 2; n <= 64; ++n) {
            const Rat a = ordinary::gq_sum(q, n), b = ordinary::gq_closed(q, n);
            c.expect(a == b, "q=" + std::to_string(q) + " n=" + std::to_string(n) + ": " + to_string(a) + " vs " + to_string(b));
            c.expect(b >= prev, "not monotone at q=" + std::to_string(q) + " n=" + std::to_string(n));
            prev = b;
            ++cases;
        }
    }
    return c.done(std::to_string(cases) + " (q, n) pairs agree exactly; G_q(2) = 0; nondecreasing in n");
}

// 7
Outcome criterion_7() {
    Checker c;
    long cases = 0;
    for (std::uint64_t q : {2u, 3u, 4u, 5u, 7u, 8u, 9u, 11u, 13u, 16u}) {
        for (long g = 1; g <= 40; ++g) {
            const auto weil = static_cast<std::uint64_t>(q + 1 + 2 * g * std::sqrt(static_cast<double>(q)));
            for (std::uint64_t n1 = 0; n1 <= weil; ++n1) {
                for (int s : {1, 2}) {
                    long best = 0, arg = 0;
                    bool first = true;
                    for (long a = -5; a <= g + 3; ++a) {
                        const long v = ordinary::f_s(s, g, a, q, n1);
                        if (first || v > best) best = v, arg = a;
                        first = false;
                    }
                    const std::string tag = "q=" + std::to_string(q) + " g=" + std::to_string(g) +
                                            " N1=" + std::to_string(n1) + " s=" + std::to_string(s);
                    c.expect(best == s * s * g, tag + " max " + std::to_string(best));
                    c.expect(ordinary::f_s(s, g, g - 1 - s, q, n1) == s * s * g,
                             tag + " value at g-1-s is not s^2 g (argmax " + std::to_string(arg) + ")");
                }
                c.expect(ordinary::f2(g, g - 2, q, n1) == g, "f2(g-2) != g");
                for (long a = -2; a + 1 <= g - 3; ++a)
                    c.expect(ordinary::f2(g, a, q, n1) <= ordinary::f2(g, a + 1, q, n1),
                             "f2 decreases at a=" + std::to_string(a) + " g=" + std::to_string(g));
                ++cases;
            }
        }
    }
    return c.done(std::to_string(cases) + " (q, g, N1) triples up to the Weil bound: max s^2 g at g-1-s, f2(g-2) = g, "
                                          "f2 nondecreasing on [-2, g-3]");
}

// 8
Outcome criterion_8() {
    Checker c;
    std::mt19937_64 rng(8);
    std::set<std::string> seen;
    std::uint64_t pairs = 0;
    std::size_t attempts = 0;
    for (std::uint32_t q : {2u, 3u, 4u}) {
        auto F = q == 4 ? field_create(2, 2) : field_create(q, 1);
        std::vector<CurvePtr> curves{Curve::projective_line(F)};
        for (int i = 0; i < 6; ++i) curves.push_back(random_elliptic(F, rng, 0));
        std::size_t found_here = 0;
        while (found_here < 70 && attempts < 200000) {
            ++attempts;
            const auto& C = curves[rng() % curves.size()];
            const auto& pts = C->rational_points();
            if (pts.size() < 2) continue;
            const std::size_t n = 2 + rng() % (pts.size() - 1);
            const auto G = random_subset(pts, n, rng);
            Divisor D;
            const int terms = 1 + static_cast<int>(rng() % 3);
            for (int i = 0; i < terms; ++i) D.add(pts[rng() % pts.size()], static_cast<long>(rng() % 4) - 1);
            if (rng() % 3 == 0) {
                auto deg2 = C->points_of_degree(2);
                if (!deg2.empty()) D.add(deg2[rng() % deg2.size()], 1);
            }
            if (!codes::xing_criterion(*C, G, D)) continue;
            auto code = codes::goppa_code(*C, G, D);
            if (code.dimension() == 0 || code.dimension() > 3) continue;
            std::string key = C->describe() + "|" + sum_of(G).to_string() + "|" + D.to_string();
            if (!seen.insert(key).second) continue;
            ++found_here;
            auto r = codes::is_intersecting_bruteforce(code);
            pairs += r.pairs_checked;
            c.expect(r.intersecting && r.exhaustive, key + " is not intersecting");
        }
    }
    c.expect(seen.size() >= 200, "only " + std::to_string(seen.size()) + " instances");
    return c.done(std::to_string(seen.size()) + " distinct instances over F_2, F_3, F_4, all intersecting (" +
                  std::to_string(pairs) + " codeword pairs)");
}

// 9
Outcome criterion_9() {
    Checker c;
    std::mt19937_64 rng(9);
    std::vector<CurvePtr> curves;
    for (auto [p, m] : {std::pair{2u, 1u}, {3u, 1u}, {2u, 2u}, {5u, 1u}, {7u, 1u}, {2u, 3u}, {3u, 2u}}) {
        auto F = field_create(p, m);
        curves.push_back(Curve::projective_line(F));
        curves.push_back(random_elliptic(F, rng, 0));
        curves.push_back(random_elliptic(F, rng, 0));
    }
    int divisors = 0;
    std::size_t functions = 0;
    while (divisors < 504) {
        const auto& C = curves[divisors % curves.size()];
        const auto& pts = C->rational_points();
        Divisor D;
        const int terms = 1 + static_cast<int>(rng() % 4);
        for (int i = 0; i < terms; ++i) D.add(pts[rng() % pts.size()], static_cast<long>(rng() % 6) - 2);
        if (rng() % 3 == 0) {
            auto deg2 = C->points_of_degree(2);
            if (!deg2.empty()) D.add(deg2[rng() % deg2.size()], static_cast<long>(rng() % 3) - 1);
        }
        ++divisors;
        const long g = static_cast<long>(C->genus());
        const Divisor K = curves::canonical_divisor(*C);
        auto B = curves::riemann_roch_space(*C, D);
        const long lhs = static_cast<long>(B.dimension()) - static_cast<long>(curves::rr_dimension(*C, K - D));
        c.expect(lhs == D.degree() + 1 - g, C->describe() + " D=" + D.to_string());
        for (const auto& f : B.basis) {
            c.expect((curves::principal_divisor(*C, f) + D).is_effective(), C->describe() + " basis element outside L(D)");
            ++functions;
        }
    }
    return c.done(std::to_string(divisors) + " random divisors on " + std::to_string(curves.size()) +
                  " curves (q <= 9), " + std::to_string(functions) + " basis functions checked");
}

// 10
Outcome criterion_10() {
    Checker c;
    const auto t0 = std::chrono::steady_clock::now();
    auto e = bounds::prime_eps(Rat(139), 2'010'881);
    const double t = seconds_since(t0);
    c.expect(e.value == make_rat(10, 139), "eps = " + to_string(e.value));
    c.expect(e.maximizer == 139 && e.next == 149, "maximizer " + std::to_string(e.maximizer));
    c.expect(t < 10.0, "took " + fmt_seconds(t));
    auto r = cli({"prime-eps", "--from", "139", "--limit", "2010881"});
    c.expect(r.code == 0 && Json::parse(r.out)["eps"] == "10/139", "CLI disagrees");
    return c.done("eps(139) = 10/139 (gap 139 -> 149), sieve to 2010881 in " + fmt_seconds(t));
}

// 11
Outcome criterion_11() {
    Checker c;
    std::mt19937_64 rng(11);
    // x = a/b uniform-ish in [3/2, 10^5] with small denominators.
    int samples = 0;
    for (; samples < 10000; ++samples) {
        const long b = 1 + static_cast<long>(rng() % 12);
        const long lo = (3 * b + 1) / 2, hi = 100000 * b;
        const Rat x = make_rat(lo + static_cast<long>(rng() % static_cast<std::uint64_t>(hi - lo + 1)), b);
        for (std::uint64_t p : {3u, 5u, 7u, 11u}) {
            auto cp = bounds::ceil_psi(x, p);
            const Rat v(static_cast<unsigned long>(cp.value));
            c.expect(v >= x && v <= 2 * x, "x=" + to_string(x) + " p=" + std::to_string(p) + " -> " + std::to_string(cp.value));
            c.expect(cp.witness % p != 0 && bounds::psi(cp.witness) == cp.value, "bad witness at x=" + to_string(x));
        }
    }
    return c.done(std::to_string(samples) + " sampled x in [3/2, 10^5] for p in {3, 5, 7, 11}: x <= ceiling <= 2x");
}

// 12
Outcome criterion_12() {
    Checker c;
    for (std::uint64_t N = 1; N <= 5000; ++N) {
        try {
            auto r = bounds::genus_x0(N);
            c.expect(r.genus.get_den() == 1 && r.genus >= 0 && r.genus <= r.psi_over_12,
                     "N=" + std::to_string(N) + " genus " + to_string(r.genus));
        } catch (const std::exception& e) {
            c.expect(false, "N=" + std::to_string(N) + ": " + e.what());
        }
    }
    for (auto [N, g] : std::vector<std::pair<std::uint64_t, long>>{{1, 0}, {11, 1}, {15, 1}, {23, 2}, {37, 2}})
        c.expect(bounds::genus_x0(N).genus == g, "g0(" + std::to_string(N) + ") = " + to_string(bounds::genus_x0(N).genus));
    return c.done("N <= 5000: integer genus in [0, psi/12]; {1:0, 11:1, 15:1, 23:2, 37:2} reproduced");
}

// 13
Outcome criterion_13() {
    Checker c;
    auto r = bounds::stv_bounds(49, Rat(6));
    const Rat q2(49 * 49);
    const Rat threshold = 5 - (14 * q2 - 4) / (q2 * q2 + 2 * q2 - 1);
    c.expect(r.value("threshold") == threshold, "threshold " + to_string(r.value("threshold")));
    c.expect(r.holds("A >= threshold") && Rat(6) >= threshold, "6 < threshold");
    c.expect(r.has("M_q_upper_square") && r.value("M_q_upper_square") == make_rat(12, 5), "square-case bound");
    c.expect(r.has("m_q_upper") && r.value("m_q_upper") == make_rat(12, 5), "m_q bound");
    return c.done("threshold = " + to_string(threshold) + " <= 6, bound 12/5");
}

// 14
Outcome criterion_14(const fs::path& dir) {
    Checker c;
    const std::string a43 = (dir / "det_q4_k3.json").string(), a54 = (dir / "det_q5_k4.json").string();
    const std::string rep = (dir / "det_report.json").string();
    cli({"build-multiplier", "--q", "4", "--k", "3", "--out", a43});
    const std::vector<std::vector<std::string>> commands{
        {"build-multiplier", "--q", "4", "--k", "3", "--out", a43},
        {"build-multiplier", "--q", "5", "--k", "4", "--verify", "sampled", "--samples", "2000", "--seed", "7", "--out", a54},
        {"build-multiplier", "--q", "2", "--k", "9"},
        {"verify", a43, "--sampled", "500", "--seed", "3", "--out", rep},
        {"verify", a43, "--exhaustive", "--out", rep},
        {"construct-divisor", "--q", "5", "--curve", "elliptic:0,0,0,1,1", "--constraint", "2:all", "--out", rep},
        {"construct-divisor", "--q", "7", "--curve", "elliptic:0,0,0,3,2", "--constraint", "1:deg:3", "--constraint",
         "2:all", "--out", rep},
        {"code", "--q", "4", "--D", "2*inf", "--check", "sampled", "--samples", "300", "--seed", "5", "--out", rep},
        {"code", "--q", "3", "--curve", "elliptic:0,0,0,2,1", "--D", "2*inf", "--format", "csv", "--out", rep},
        {"bounds", "stv", "--q", "49", "--A", "6", "--out", rep},
        {"bounds", "rq", "--infinite", "--nu", "4", "--out", rep},
        {"bounds", "kappa", "--q", "7", "--nu", "17/4", "--out", rep},
        {"bounds", "mu", "--q", "5", "--k", "4", "--curve", "elliptic:0,0,0,1,1", "--out", rep},
        {"bounds", "ballet", "--p", "7", "--k", "29", "--out", rep},
        {"bounds", "corollary", "--p", "7", "--k", "40", "--out", rep},
        {"bounds", "dv", "--q", "9", "--g", "3", "--n1", "10", "--n2", "4", "--out", rep},
        {"bounds", "n1n2", "--q", "5", "--k", "4", "--g", "1", "--n1", "6", "--n2", "2", "--out", rep},
        {"bounds", "ballet-table", "--p", "7", "--from", "29", "--to", "60", "--format", "csv", "--out", rep},
        {"bounds", "genus-table", "--from", "1", "--to", "300", "--out", rep},
        {"psi", "--p", "7", "--x", "1000", "--out", rep},
        {"psi", "--n", "360", "--out", rep},
        {"prime-eps", "--from", "139", "--limit", "100000", "--out", rep},
    };
    int compared = 0;
    for (const auto& args : commands) {
        std::string label;
        for (const auto& a : args) label += (label.empty() ? "" : " ") + a;
        std::string artifact;
        std::vector<CliRun> runs;
        std::vector<std::string> files;
        for (int i = 0; i < 2; ++i) {
            runs.push_back(cli(args));
            auto it = std::find(args.begin(), args.end(), "--out");
            files.push_back(it != args.end() ? slurp(*(it + 1)) : std::string());
        }
        c.expect(runs[0].code == runs[1].code, label + ": exit codes differ");
        c.expect(runs[0].out == runs[1].out && !runs[0].out.empty(), label + ": stdout differs");
        c.expect(files[0] == files[1], label + ": artifact differs");
        ++compared;
    }
    return c.done(std::to_string(compared) + " invocations across all subcommands, byte-identical stdout and artifacts");
}

}  // namespace

int main() {
    const fs::path dir = fs::temp_directory_path() / ("rrmul_acceptance_" + std::to_string(::getpid()));
    fs::create_directories(dir);
    const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
        {"mu_4(3) = 5 witnessed by build-multiplier", [&] { return criterion_1(dir); }},
        {"Winograd range on P1 for q in {4,5,7,8,9}", criterion_2},
        {"elliptic pipeline q = 5, k = 4", criterion_3},
        {"greedy construction on elliptic curves", criterion_4},
        {"exceptional step sets within f_s", criterion_5},
        {"G_q summation and closed forms", criterion_6},
        {"f-function extremes", criterion_7},
        {"Xing criterion implies intersecting", criterion_8},
        {"Riemann-Roch suite", criterion_9},
        {"eps_P(139) = 10/139", criterion_10},
        {"psi-ceiling at most 2x", criterion_11},
        {"modular curve genus", criterion_12},
        {"STV numerics at q = 49", criterion_13},
        {"determinism of every subcommand", [&] { return criterion_14(dir); }},
    };
    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        Outcome o;
        try {
            o = criteria[i].second();
        } catch (const std::exception& e) {
            o = {false, std::string("exception: ") + e.what()};
        }
        if (!o.pass) ++failed;
        std::cout << (o.pass ? "PASS" : "FAIL") << " criterion " << (i + 1) << ": " << criteria[i].first << " -- "
                  << o.detail << std::endl;
    }
    fs::remove_all(dir);
    std::cout << (failed ? "acceptance FAILED: " + std::to_string(failed) + " criteria" : "acceptance PASSED: 14/14")
              << std::endl;
    return failed ? 1 : 0;
}
