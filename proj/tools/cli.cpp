#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>

#include "rrmul/bounds/bounds.hpp"
#include "rrmul/chudnovsky/chudnovsky.hpp"
#include "rrmul/codes/codes.hpp"
#include "rrmul/curves/json.hpp"
#include "rrmul/ordinary/ordinary.hpp"

namespace rrmul::cli {

namespace fs = std::filesystem;
using chudnovsky::BilinearAlgorithm;
using chudnovsky::VerifyResult;
using curves::ClosedPoint;
using curves::Curve;
using curves::CurvePtr;
using curves::Divisor;
using ff::Elem;
using ff::FieldPtr;
using ff::Json;

namespace {

/// Error carrying its exit code.
struct Failure : std::runtime_error {
    Failure(int code, const std::string& what) : std::runtime_error(what), code(code) {}
    int code;
};

struct InputError : Failure {
    explicit InputError(const std::string& what) : Failure(kInputError, what) {}
};

constexpr std::uint64_t kAutoExhaustivePairs = 100'000'000;
constexpr std::uint64_t kDefaultSamples = 100'000;

FieldPtr field_of_order(std::uint64_t q) {
    if (q < 2 || q > ff::kMaxFieldOrder) throw InputError("q = " + std::to_string(q) + " is out of range");
    std::uint64_t p = 2;
    while (q % p != 0) ++p;
    unsigned m = 0;
    std::uint64_t r = q;
    while (r % p == 0) r /= p, ++m;
    if (r != 1) throw InputError("q = " + std::to_string(q) + " is not a prime power");
    return ff::field_create(static_cast<std::uint32_t>(p), m);
}

/// "a", "a/b" or a decimal "a.b".
Rat parse_number(const std::string& s) {
    auto dot = s.find('.');
    try {
        if (dot == std::string::npos) return parse_rat(s);
        std::string digits = s.substr(0, dot) + s.substr(dot + 1);
        return make_rat(BigInt(digits), pow(BigInt(10), s.size() - dot - 1));
    } catch (const std::invalid_argument&) {
        throw InputError("not a number: " + s);
    }
}

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    std::istringstream is(s);
    while (std::getline(is, cur, sep)) out.push_back(cur);
    return out;
}

Elem parse_elem(const ff::Field& F, const std::string& s) {
    try {
        std::size_t used = 0;
        unsigned long v = std::stoul(s, &used);
        if (used != s.size() || v >= F.order()) throw std::out_of_range(s);
        return static_cast<Elem>(v);
    } catch (const std::logic_error&) {
        throw InputError("'" + s + "' is not an element index of " + F.name());
    }
}

/// "line" or "elliptic:a1,a3,a2,a4,a6" with element indices.
CurvePtr parse_curve(const FieldPtr& F, const std::string& spec) {
    if (spec == "line") return Curve::projective_line(F);
    const std::string prefix = "elliptic:";
    if (spec.rfind(prefix, 0) != 0) throw InputError("curve must be 'line' or 'elliptic:a1,a3,a2,a4,a6'");
    auto parts = split(spec.substr(prefix.size()), ',');
    if (parts.size() != 5) throw InputError("elliptic curve needs five coefficients");
    std::array<Elem, 5> a{};
    for (std::size_t i = 0; i < 5; ++i) a[i] = parse_elem(*F, parts[i]);
    try {
        return Curve::elliptic(F, a);
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
}

/// "inf", "deg:K", "x" (line) or "x/y".
ClosedPoint parse_point(const Curve& C, const std::string& s) {
    if (s == "inf") return C.infinity();
    if (s.rfind("deg:", 0) == 0) {
        unsigned k = 0;
        try {
            k = static_cast<unsigned>(std::stoul(s.substr(4)));
        } catch (const std::logic_error&) {
            throw InputError("bad degree in '" + s + "'");
        }
        if (k == 0) throw InputError("degree must be positive");
        return chudnovsky::find_closed_point_of_degree(C, k);
    }
    auto xy = split(s, '/');
    const ff::Field& F = *C.field();
    try {
        if (xy.size() == 1) {
            if (C.is_elliptic()) throw InputError("points on an elliptic curve are written x/y");
            return C.rational_point(parse_elem(F, xy[0]));
        }
        if (xy.size() == 2) return C.rational_point(parse_elem(F, xy[0]), parse_elem(F, xy[1]));
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("bad point '" + s + "'");
}

/// Terms joined by '+', each "[m*]point" or "all" (every rational point once); "0" is the zero divisor.
Divisor parse_divisor(const Curve& C, const std::string& spec) {
    Divisor D;
    if (spec.empty() || spec == "0") return D;
    for (const auto& term : split(spec, '+')) {
        if (term == "all") {
            for (const auto& P : C.rational_points()) D.add(P, 1);
            continue;
        }
        long m = 1;
        std::string pt = term;
        if (auto star = term.find('*'); star != std::string::npos) {
            try {
                m = std::stol(term.substr(0, star));
            } catch (const std::logic_error&) {
                throw InputError("bad multiplicity in '" + term + "'");
            }
            pt = term.substr(star + 1);
        }
        D.add(parse_point(C, pt), m);
    }
    return D;
}

std::vector<ClosedPoint> parse_point_set(const Curve& C, const std::string& spec) {
    Divisor D = parse_divisor(C, spec);
    std::vector<ClosedPoint> out;
    for (const auto& [P, m] : D.terms()) {
        if (m != 1 || P.degree != 1) throw InputError("point sets take distinct rational points");
        out.push_back(P);
    }
    return out;
}

fs::path resolve_out(const std::string& p) {
    fs::path path(p);
    if (path.is_relative())
        if (const char* dir = std::getenv("RRMUL_OUT_DIR"); dir && *dir) path = fs::path(dir) / path;
    if (path.has_parent_path()) fs::create_directories(path.parent_path());
    return path;
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot write " + path.string());
    f << text;
}

Json read_json_file(const std::string& path) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw InputError("cannot read " + path);
    try {
        return Json::parse(f);
    } catch (const Json::exception& e) {
        throw InputError(path + ": " + e.what());
    }
}

Json window_bound(const std::optional<long>& v) { return v ? Json(*v) : Json(nullptr); }

Json verify_to_json(const std::string& mode, const VerifyResult& r, const BilinearAlgorithm& alg) {
    Json j;
    j["mode"] = mode;
    j["ok"] = r.ok;
    j["exhaustive"] = r.exhaustive;
    j["pairs_checked"] = r.pairs_checked;
    if (r.counterexample) {
        const auto& c = *r.counterexample;
        const ff::Field& E = *alg.ext;
        j["counterexample"] = {{"x", ff::elem_to_json(E, c.x)},
                               {"y", ff::elem_to_json(E, c.y)},
                               {"formula", ff::elem_to_json(E, c.lhs)},
                               {"product", ff::elem_to_json(E, c.rhs)}};
    }
    return j;
}

std::uint64_t pair_count(const BilinearAlgorithm& alg) {
    long double pairs = static_cast<long double>(alg.ext->order()) * alg.ext->order();
    return pairs > 1e18L ? UINT64_MAX : static_cast<std::uint64_t>(pairs);
}

/// mode: "auto", "exhaustive", "sampled", "naive" or "none".
std::pair<std::string, std::optional<VerifyResult>> run_verification(const BilinearAlgorithm& alg, std::string mode,
                                                                     unsigned jobs, std::uint64_t samples,
                                                                     std::uint64_t seed) {
    if (mode == "auto") mode = pair_count(alg) <= kAutoExhaustivePairs ? "exhaustive" : "sampled";
    if (mode == "none") return {mode, std::nullopt};
    try {
        if (mode == "exhaustive") return {mode, chudnovsky::verify_exhaustive(alg, jobs)};
        if (mode == "naive") return {mode, chudnovsky::verify_naive(alg)};
    } catch (const std::length_error& e) {
        throw InputError(std::string(e.what()) + "; use sampled verification");
    }
    if (mode == "sampled") return {mode, chudnovsky::verify_sampled(alg, samples, seed)};
    throw InputError("unknown verification mode '" + mode + "'");
}

struct Context {
    std::ostream& out;
    std::ostream& err;
    std::string out_path;
    std::string format = "json";

    void emit(const Json& report) {
        const std::string text = report.dump(2) + "\n";
        out << text;
        if (!out_path.empty()) write_file(resolve_out(out_path), text);
    }
    void emit_text(const std::string& text) {
        out << text;
        if (!out_path.empty()) write_file(resolve_out(out_path), text);
    }
};

int exit_for(const bounds::BoundReport& r) { return r.applicable() ? kOk : kInfeasible; }

// build-multiplier

struct BuildOptions {
    std::uint64_t q = 0;
    unsigned k = 0;
    std::string curve;
    std::string verify = "auto";
    unsigned jobs = 1;
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t seed = 1;
};

int cmd_build_multiplier(Context& ctx, const BuildOptions& o) {
    FieldPtr F = field_of_order(o.q);
    if (o.k == 0) throw InputError("k must be positive");
    CurvePtr hint = o.curve.empty() ? nullptr : parse_curve(F, o.curve);
    BilinearAlgorithm alg;
    try {
        alg = chudnovsky::auto_pipeline(F, o.k, hint);
    } catch (const chudnovsky::NoCurveFound& e) {
        Json j;
        j["command"] = "build-multiplier";
        j["q"] = o.q;
        j["k"] = o.k;
        j["status"] = "infeasible";
        j["reason"] = e.what();
        j["inventory"] = e.inventory;
        ctx.out << j.dump(2) << "\n";
        return kInfeasible;
    }
    const fs::path path =
        resolve_out(ctx.out_path.empty() ? "multiplier_q" + std::to_string(o.q) + "_k" + std::to_string(o.k) + ".json"
                                         : ctx.out_path);
    write_file(path, chudnovsky::algorithm_to_json(alg).dump(2) + "\n");

    auto [mode, result] = run_verification(alg, o.verify, o.jobs, o.samples, o.seed);
    Json j;
    j["command"] = "build-multiplier";
    j["q"] = o.q;
    j["k"] = o.k;
    j["n"] = alg.n();
    j["singleton_lower"] = 2 * o.k - 1;
    j["meets_lower"] = alg.n() == 2 * o.k - 1;
    j["symmetric"] = alg.symmetric;
    if (alg.provenance) {
        j["route"] = alg.provenance->route;
        if (const auto& C = alg.provenance->curve) {
            j["curve"] = C->describe();
            j["rational_points"] = C->rational_points().size();
        }
    }
    j["verification"] = result ? verify_to_json(mode, *result, alg) : Json{{"mode", mode}};
    j["status"] = !result ? "unverified" : result->ok ? "PASS" : "FAIL";
    j["output"] = path.string();
    ctx.out << j.dump(2) << "\n";
    return result && !result->ok ? kCheckFailed : kOk;
}

// construct-divisor

struct DivisorOptions {
    std::uint64_t q = 0;
    std::string curve;
    std::vector<std::string> constraints;
    std::optional<long> d;
    std::string pool = "all";
};

int cmd_construct_divisor(Context& ctx, const DivisorOptions& o) {
    FieldPtr F = field_of_order(o.q);
    CurvePtr C = parse_curve(F, o.curve);
    std::vector<ordinary::SignedConstraint> signed_constraints;
    Json cj = Json::array();
    for (const auto& spec : o.constraints) {
        auto colon = spec.find(':');
        if (colon == std::string::npos) throw InputError("constraint must be K:DIVISOR");
        int k = 0;
        try {
            k = std::stoi(spec.substr(0, colon));
        } catch (const std::logic_error&) {
            throw InputError("bad k in '" + spec + "'");
        }
        if (k == 0 || k < -2 || k > 2) throw InputError("constraint k must be in {-2, -1, 1, 2}");
        signed_constraints.push_back({k, parse_divisor(*C, spec.substr(colon + 1))});
    }
    auto reduced = ordinary::reduce_signed_constraints(*C, signed_constraints);

    Json j;
    j["command"] = "construct-divisor";
    j["curve"] = curves::curve_to_json(*C);
    j["window"] = {{"d_minus", window_bound(reduced.d_minus)}, {"d_plus", window_bound(reduced.d_plus)}};
    std::optional<long> d = o.d;
    if (!d) d = reduced.d_plus ? reduced.d_plus : reduced.d_minus;
    if (!d) throw InputError("the degree window is unbounded; pass --d");
    j["d"] = *d;
    if (!reduced.feasible() || !reduced.admits(*d)) {
        j["status"] = "infeasible";
        ctx.emit(j);
        return kInfeasible;
    }

    // Start low enough that every s_i D0 - T_i has negative degree.
    long d0 = *d;
    for (const auto& c : reduced.constraints) {
        const long t = c.t();
        long bound = t - 1 >= 0 ? (t - 1) / c.s : -((-(t - 1) + c.s - 1) / c.s);
        d0 = std::min(d0, bound);
    }
    const Divisor D0 = Divisor::point(C->infinity(), d0);
    Divisor D;
    try {
        D = ordinary::construct_ordinary_divisor(*C, reduced.constraints, *d, D0, parse_point_set(*C, o.pool));
    } catch (const ordinary::PreconditionError& e) {
        j["status"] = "infeasible";
        j["reason"] = e.what();
        ctx.emit(j);
        return kInfeasible;
    }
    j["D"] = curves::divisor_to_json(*C, D);
    j["D_text"] = D.to_string();
    bool all_zero = true;
    for (const auto& sc : signed_constraints) {
        const std::size_t l = curves::rr_dimension(*C, sc.k * D - sc.G);
        all_zero = all_zero && l == 0;
        cj.push_back({{"k", sc.k}, {"G", sc.G.to_string()}, {"deg_G", sc.n()}, {"l", l}});
    }
    j["constraints"] = std::move(cj);
    j["status"] = all_zero ? "PASS" : "FAIL";
    ctx.emit(j);
    return all_zero ? kOk : kCheckFailed;
}

// verify

struct VerifyOptions {
    std::string file;
    bool exhaustive = false;
    bool naive = false;
    std::optional<std::uint64_t> sampled;
    unsigned jobs = 1;
    std::uint64_t seed = 1;
};

int cmd_verify(Context& ctx, const VerifyOptions& o) {
    const Json doc = read_json_file(o.file);
    BilinearAlgorithm alg;
    try {
        alg = chudnovsky::algorithm_from_json(doc);
    } catch (const std::exception& e) {
        throw InputError(o.file + ": " + e.what());
    }
    std::string mode = "auto";
    if (o.exhaustive + o.naive + o.sampled.has_value() > 1) throw InputError("choose one verification mode");
    if (o.exhaustive) mode = "exhaustive";
    if (o.naive) mode = "naive";
    if (o.sampled) mode = "sampled";
    auto [used, result] = run_verification(alg, mode, o.jobs, o.sampled.value_or(kDefaultSamples), o.seed);
    Json j;
    j["command"] = "verify";
    j["q"] = alg.q();
    j["k"] = alg.k;
    j["n"] = alg.n();
    j["verification"] = verify_to_json(used, *result, alg);
    j["status"] = result->ok ? "PASS" : "FAIL";
    ctx.emit(j);
    return result->ok ? kOk : kCheckFailed;
}

// code

struct CodeOptions {
    std::uint64_t q = 0;
    std::string curve = "line";
    std::string D = "0";
    std::string G = "all";
    std::string check = "auto";
    std::uint64_t samples = kDefaultSamples;
    std::uint64_t seed = 1;
};

int cmd_code(Context& ctx, const CodeOptions& o) {
    FieldPtr F = field_of_order(o.q);
    CurvePtr C = parse_curve(F, o.curve);
    const Divisor D = parse_divisor(*C, o.D);
    const auto G = parse_point_set(*C, o.G);
    codes::LinearCode code = [&] {
        try {
            return codes::goppa_code(*C, G, D);
        } catch (const std::invalid_argument& e) {
            throw InputError(e.what());
        }
    }();
    if (ctx.format == "csv") {
        ctx.emit_text(codes::code_to_csv(code));
        return kOk;
    }
    Divisor Gsum;
    for (const auto& P : G) Gsum.add(P, 1);
    const bool xing = codes::xing_criterion(*C, G, D);

    std::optional<codes::IntersectingResult> inter;
    std::string mode = o.check;
    if (code.dimension() > 0 && mode != "none") {
        if (mode == "auto" || mode == "exhaustive") {
            try {
                inter = codes::is_intersecting_bruteforce(code);
                mode = "exhaustive";
            } catch (const std::length_error&) {
                if (mode == "exhaustive") throw InputError("too many codeword pairs for an exhaustive check");
                mode = "sampled";
            }
        }
        if (mode == "sampled") inter = codes::is_intersecting_sampled(code, o.samples, o.seed);
        if (!inter) throw InputError("unknown check mode '" + mode + "'");
    }

    Json j;
    j["command"] = "code";
    j["curve"] = C->describe();
    j["D"] = D.to_string();
    j["deg_D"] = D.degree();
    j["length"] = code.length();
    j["dimension"] = code.dimension();
    j["l_2D_minus_G"] = curves::rr_dimension(*C, 2 * D - Gsum);
    j["xing_criterion"] = xing;
    if (inter) {
        Json ij;
        ij["mode"] = mode;
        ij["intersecting"] = inter->intersecting;
        ij["exhaustive"] = inter->exhaustive;
        ij["pairs_checked"] = inter->pairs_checked;
        if (inter->counterexample) ij["counterexample"] = {inter->counterexample->first, inter->counterexample->second};
        j["intersecting"] = std::move(ij);
    }
    j["code"] = codes::code_to_json(code);
    const bool violation = xing && inter && !inter->intersecting;
    j["status"] = violation ? "FAIL" : "PASS";
    ctx.emit(j);
    return violation ? kCheckFailed : kOk;
}

// bounds

Json values_row(const bounds::BoundReport& r, std::initializer_list<const char*> keys) {
    Json row;
    for (const char* k : keys) row[k] = r.has(k) ? Json(to_string(r.value(k))) : Json(nullptr);
    return row;
}

void emit_table(Context& ctx, const std::vector<std::string>& header, const std::vector<std::vector<std::string>>& rows) {
    if (ctx.format == "csv") {
        std::string text;
        for (std::size_t i = 0; i < header.size(); ++i) text += (i ? "," : "") + header[i];
        text += "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) text += (i ? "," : "") + row[i];
            text += "\n";
        }
        ctx.emit_text(text);
        return;
    }
    Json arr = Json::array();
    for (const auto& row : rows) {
        Json o;
        for (std::size_t i = 0; i < header.size(); ++i) o[header[i]] = row[i];
        arr.push_back(std::move(o));
    }
    ctx.emit(arr);
}

struct BoundsOptions {
    std::optional<std::uint64_t> q;
    bool infinite = false;
    std::string A, A_prime, nu;
    std::uint64_t p = 0, k = 0;
    long g = 0;
    std::uint64_t n1 = 0, n2 = 0;
    bool has_point = false;
    std::vector<std::string> curves;
    std::uint64_t from = 1, to = 1;
    std::uint64_t eps_limit = 2'010'881;
};

bounds::FieldSize field_size(const BoundsOptions& o) {
    if (o.infinite == o.q.has_value()) throw InputError("give exactly one of --q and --infinite");
    return o.infinite ? bounds::FieldSize{} : o.q;
}

std::uint64_t require_q(const BoundsOptions& o) {
    if (!o.q) throw InputError("--q is required");
    return *o.q;
}

bool has_point_of_degree(const Curve& C, unsigned k) {
    if (bounds::weil_degree_condition(C.q(), static_cast<long>(C.genus()), k)) return true;
    if (std::pow(static_cast<long double>(C.q()), k) > 1e6L) return false;
    try {
        chudnovsky::find_closed_point_of_degree(C, k);
        return true;
    } catch (const chudnovsky::PointNotFound&) {
        return false;
    }
}

int cmd_bounds(Context& ctx, const std::string& which, const BoundsOptions& o) {
    auto emit_report = [&](const bounds::BoundReport& r) {
        ctx.emit(bounds::report_to_json(r));
        return exit_for(r);
    };
    try {
        if (which == "stv") {
            std::optional<Rat> ap;
            if (!o.A_prime.empty()) ap = parse_number(o.A_prime);
            return emit_report(bounds::stv_bounds(require_q(o), parse_number(o.A), ap));
        }
        if (which == "rq") return emit_report(bounds::rq_bounds(field_size(o), parse_number(o.nu)));
        if (which == "kappa") {
            const Rat nu = parse_number(o.nu);
            auto q = field_size(o);
            Json j;
            j["quantity"] = "kappa window";
            j["field"] = q ? Json(*q) : Json("infinite");
            j["nu"] = to_string(nu);
            j["kappa_sup"] = to_string(bounds::kappa_window(q, nu));
            ctx.emit(j);
            return kOk;
        }
        if (which == "mu") {
            const std::uint64_t q = require_q(o);
            FieldPtr F = field_of_order(q);
            std::vector<bounds::CurveRow> rows;
            for (const auto& spec : o.curves) {
                CurvePtr C = parse_curve(F, spec);
                rows.push_back({C->describe(), static_cast<long>(C->genus()), C->rational_points().size(),
                                has_point_of_degree(*C, static_cast<unsigned>(o.k))});
            }
            return emit_report(bounds::mu_upper(q, static_cast<unsigned>(o.k), rows));
        }
        if (which == "ballet") return emit_report(bounds::ballet_bound(o.p, o.k));
        if (which == "corollary") return emit_report(bounds::prime_gap_corollary(o.p, o.k, o.eps_limit));
        if (which == "dv") return emit_report(bounds::drinfeld_vladut_ratio(require_q(o), o.g, o.n1, o.n2));
        if (which == "n1n2")
            return emit_report(
                bounds::n1_3n2_bound(require_q(o), static_cast<unsigned>(o.k), o.g, o.n1, o.n2, o.has_point));
        if (which == "ballet-table") {
            std::vector<std::vector<std::string>> rows;
            for (std::uint64_t k = o.from; k <= o.to; ++k) {
                auto r = bounds::ballet_bound(o.p, k);
                if (!r.applicable()) continue;
                auto v = values_row(r, {"x", "psi_ceiling", "witness_N", "bound", "mu_upper"});
                rows.push_back({std::to_string(o.p), std::to_string(k), v["x"], v["psi_ceiling"], v["witness_N"],
                                v["bound"], v["mu_upper"]});
            }
            emit_table(ctx, {"p", "k", "x", "psi_ceiling", "witness_N", "bound", "mu_upper"}, rows);
            return kOk;
        }
        if (which == "genus-table") {
            std::vector<std::vector<std::string>> rows;
            for (std::uint64_t N = std::max<std::uint64_t>(o.from, 1); N <= o.to; ++N) {
                auto g = bounds::genus_x0(N);
                rows.push_back({std::to_string(N), std::to_string(bounds::psi(N)), to_string(g.genus),
                                std::to_string(g.nu_inf), std::to_string(g.nu3), std::to_string(g.nu2)});
            }
            emit_table(ctx, {"N", "psi", "genus", "nu_inf", "nu3", "nu2"}, rows);
            return kOk;
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    throw InputError("unknown bounds report '" + which + "'");
}

// psi and prime-eps

int cmd_psi(Context& ctx, std::optional<std::uint64_t> n, const std::string& x, std::uint64_t p) {
    Json j;
    j["command"] = "psi";
    try {
        if (n) {
            j["N"] = *n;
            j["psi"] = bounds::psi(*n);
        } else {
            if (x.empty() || p == 0) throw InputError("give --n, or --x with --p");
            const Rat xv = parse_number(x);
            auto c = bounds::ceil_psi(xv, p);
            j["x"] = to_string(xv);
            j["p"] = p;
            j["ceiling"] = c.value;
            j["witness_N"] = c.witness;
        }
    } catch (const std::invalid_argument& e) {
        throw InputError(e.what());
    }
    ctx.emit(j);
    return kOk;
}

int cmd_prime_eps(Context& ctx, const std::string& from, std::uint64_t limit) {
    bounds::PrimeEps e;
    const Rat x = parse_number(from);
    try {
        e = bounds::prime_eps(x, limit);
    } catch (const std::invalid_argument& ex) {
        throw InputError(ex.what());
    }
    Json j;
    j["command"] = "prime-eps";
    j["from"] = to_string(x);
    j["scan_limit"] = e.scan_limit;
    j["eps"] = to_string(e.value);
    j["maximizer"] = e.maximizer;
    j["next_prime"] = e.next;
    j["beyond_limit"] = "relies on an external prime-gap estimate";
    ctx.emit(j);
    return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Multiplication algorithms in finite field extensions from curves, and related bounds"};
    app.require_subcommand(1);
    Context ctx{out, err, {}, "json"};
    std::function<int()> action;

    BuildOptions bo;
    auto* build = app.add_subcommand("build-multiplier", "Build and verify a multiplication algorithm for F_{q^k}");
    build->add_option("--q", bo.q, "Base field order")->required();
    build->add_option("--k", bo.k, "Extension degree")->required();
    build->add_option("--curve", bo.curve, "Curve to use instead of the scan: line | elliptic:a1,a3,a2,a4,a6");
    build->add_option("--verify", bo.verify, "auto | exhaustive | sampled | naive | none")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled", "naive", "none"}));
    build->add_option("--jobs", bo.jobs, "Worker threads for exhaustive verification")->check(CLI::Range(1u, 256u));
    build->add_option("--samples", bo.samples, "Pairs for sampled verification");
    build->add_option("--seed", bo.seed, "Seed for sampled verification");
    build->add_option("--out", ctx.out_path, "Algorithm JSON path");
    build->callback([&] { action = [&] { return cmd_build_multiplier(ctx, bo); }; });

    DivisorOptions dop;
    long d_value = 0;
    auto* cons = app.add_subcommand("construct-divisor", "Find D with l(k_i D - G_i) = 0 for every constraint");
    cons->add_option("--q", dop.q, "Base field order")->required();
    cons->add_option("--curve", dop.curve, "line | elliptic:a1,a3,a2,a4,a6")->required();
    cons->add_option("--constraint", dop.constraints, "K:DIVISOR with K in {-2,-1,1,2}; repeatable");
    auto* d_opt = cons->add_option("--d", d_value, "Target degree (default: the upper end of the window)");
    cons->add_option("--pool", dop.pool, "Rational points to build from (default: all)");
    cons->add_option("--out", ctx.out_path, "Report path");
    cons->callback([&] {
        if (*d_opt) dop.d = d_value;
        action = [&] { return cmd_construct_divisor(ctx, dop); };
    });

    VerifyOptions vo;
    std::uint64_t sampled = 0;
    auto* ver = app.add_subcommand("verify", "Check an algorithm file against field multiplication");
    ver->add_option("file", vo.file, "Algorithm JSON")->required();
    ver->add_flag("--exhaustive", vo.exhaustive, "Check every pair");
    ver->add_flag("--naive", vo.naive, "Check every pair by direct evaluation");
    auto* s_opt = ver->add_option("--sampled", sampled, "Check this many random pairs");
    ver->add_option("--jobs", vo.jobs, "Worker threads")->check(CLI::Range(1u, 256u));
    ver->add_option("--seed", vo.seed, "Seed for sampled verification");
    ver->add_option("--out", ctx.out_path, "Report path");
    ver->callback([&] {
        if (*s_opt) vo.sampled = sampled;
        action = [&] { return cmd_verify(ctx, vo); };
    });

    CodeOptions co;
    auto* code = app.add_subcommand("code", "Evaluation code C(G, D) and its intersecting property");
    code->add_option("--q", co.q, "Base field order")->required();
    code->add_option("--curve", co.curve, "line | elliptic:a1,a3,a2,a4,a6");
    code->add_option("--D", co.D, "Divisor, e.g. 2*inf+0/1");
    code->add_option("--G", co.G, "Evaluation points (default: all rational points)");
    code->add_option("--check", co.check, "auto | exhaustive | sampled | none")
        ->check(CLI::IsMember({"auto", "exhaustive", "sampled", "none"}));
    code->add_option("--samples", co.samples, "Pairs for the sampled check");
    code->add_option("--seed", co.seed, "Seed for the sampled check");
    code->add_option("--format", ctx.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
    code->add_option("--out", ctx.out_path, "Output path");
    code->callback([&] { action = [&] { return cmd_code(ctx, co); }; });

    BoundsOptions bnd;
    std::uint64_t q_value = 0;
    auto* b = app.add_subcommand("bounds", "Exact bound evaluators and tables");
    b->require_subcommand(1);
    auto add_q = [&](CLI::App* s) { return s->add_option("--q", q_value, "Field order"); };
    auto add_common = [&](CLI::App* s, const std::string& which) {
        s->add_option("--out", ctx.out_path, "Output path");
        s->callback([&, s, which] {
            if (auto* qo = s->get_option_no_throw("--q"); qo && *qo) bnd.q = q_value;
            action = [&, which] { return cmd_bounds(ctx, which, bnd); };
        });
    };
    {
        auto* s = b->add_subcommand("stv", "m_q and M_q from A(q) and A'(q)");
        add_q(s)->required();
        s->add_option("--A", bnd.A, "A(q) as a rational")->required();
        s->add_option("--A-prime", bnd.A_prime, "A'(q) as a rational");
        add_common(s, "stv");
    }
    for (const char* name : {"rq", "kappa"}) {
        auto* s = b->add_subcommand(name, std::string(name) == "rq" ? "Rate of intersecting codes" : "Kappa window");
        add_q(s);
        s->add_flag("--infinite", bnd.infinite, "Infinite base field");
        s->add_option("--nu", bnd.nu, "nu as a rational")->required();
        add_common(s, name);
    }
    {
        auto* s = b->add_subcommand("mu", "mu_q(k) <= 2k + g - 1 over the projective line and given curves");
        add_q(s)->required();
        s->add_option("--k", bnd.k, "Extension degree")->required();
        s->add_option("--curve", bnd.curves, "Inventory curve elliptic:a1,a3,a2,a4,a6; repeatable");
        add_common(s, "mu");
    }
    for (const char* name : {"ballet", "corollary"}) {
        auto* s = b->add_subcommand(name, std::string(name) == "ballet" ? "mu_{p^2}(k)/k via X_0(N)"
                                                                        : "mu_{p^2}(k)/k under prime-gap estimates");
        s->add_option("--p", bnd.p, "Prime p >= 7")->required();
        s->add_option("--k", bnd.k, "Extension degree")->required();
        if (std::string(name) == "corollary") s->add_option("--eps-limit", bnd.eps_limit, "Prime-gap sieve limit");
        add_common(s, name);
    }
    {
        auto* s = b->add_subcommand("dv", "(N1/(sqrt q - 1) + 2 N2/(q - 1))/g");
        add_q(s)->required();
        s->add_option("--g", bnd.g, "Genus")->required();
        s->add_option("--n1", bnd.n1, "Rational points")->required();
        s->add_option("--n2", bnd.n2, "Degree-2 points")->required();
        add_common(s, "dv");
    }
    {
        auto* s = b->add_subcommand("n1n2", "mu_q(k) <= N1 + 3 N2");
        add_q(s)->required();
        s->add_option("--k", bnd.k, "Extension degree")->required();
        s->add_option("--g", bnd.g, "Genus")->required();
        s->add_option("--n1", bnd.n1, "Rational points")->required();
        s->add_option("--n2", bnd.n2, "Degree-2 points")->required();
        s->add_flag("--has-point", bnd.has_point, "A point of degree k is known");
        add_common(s, "n1n2");
    }
    {
        auto* s = b->add_subcommand("ballet-table", "Ballet-type bound for k in [from, to], keyed by (p, k)");
        s->add_option("--p", bnd.p, "Prime p >= 7")->required();
        s->add_option("--from", bnd.from, "First k")->required();
        s->add_option("--to", bnd.to, "Last k")->required();
        s->add_option("--format", ctx.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        add_common(s, "ballet-table");
    }
    {
        auto* s = b->add_subcommand("genus-table", "Genus of X_0(N) for N in [from, to]");
        s->add_option("--from", bnd.from, "First N")->required();
        s->add_option("--to", bnd.to, "Last N")->required();
        s->add_option("--format", ctx.format, "json | csv")->check(CLI::IsMember({"json", "csv"}));
        add_common(s, "genus-table");
    }

    std::uint64_t psi_n = 0, psi_p = 0;
    std::string psi_x;
    auto* ps = app.add_subcommand("psi", "Dedekind psi, or the least psi(N) >= x over N prime to p");
    auto* n_opt = ps->add_option("--n", psi_n, "N");
    ps->add_option("--x", psi_x, "x as a rational or decimal");
    ps->add_option("--p", psi_p, "Excluded prime");
    ps->add_option("--out", ctx.out_path, "Report path");
    ps->callback([&] {
        action = [&] {
            return cmd_psi(ctx, *n_opt ? std::optional<std::uint64_t>(psi_n) : std::nullopt, psi_x, psi_p);
        };
    });

    std::string eps_from;
    std::uint64_t eps_limit = 0;
    auto* pe = app.add_subcommand("prime-eps", "Largest relative prime gap (p' - p)/p from x up to a limit");
    pe->add_option("--from", eps_from, "x")->required();
    pe->add_option("--limit", eps_limit, "Sieve limit")->required();
    pe->add_option("--out", ctx.out_path, "Report path");
    pe->callback([&] { action = [&] { return cmd_prime_eps(ctx, eps_from, eps_limit); }; });

    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kOk : kInputError;
    }
    try {
        return action();
    } catch (const Failure& f) {
        err << "rrmul: " << f.what() << "\n";
        return f.code;
    } catch (const chudnovsky::PointNotFound& e) {
        err << "rrmul: " << e.what() << "\n";
        return kInfeasible;
    } catch (const ordinary::InternalContradiction& e) {
        err << "rrmul: internal error: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const chudnovsky::ConstructionError& e) {
        err << "rrmul: construction failed: " << e.what() << "\n";
        return kCheckFailed;
    } catch (const std::invalid_argument& e) {
        err << "rrmul: " << e.what() << "\n";
        return kInputError;
    } catch (const fs::filesystem_error& e) {
        err << "rrmul: " << e.what() << "\n";
        return kInputError;
    }
}

}  // namespace rrmul::cli
