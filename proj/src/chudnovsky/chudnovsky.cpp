#include "rrmul/chudnovsky/chudnovsky.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "rrmul/ordinary/ordinary.hpp"

namespace rrmul::chudnovsky {

using curves::evaluate;
using curves::evaluate_generalized;
using curves::Function;
using curves::riemann_roch_space;
using ordinary::PreconditionError;

std::vector<Elem> coordinates(const BilinearAlgorithm& alg, Elem x) {
    const std::uint32_t q = alg.base->order();
    std::vector<Elem> c(alg.k);
    for (unsigned i = 0; i < alg.k; ++i) {
        c[i] = x % q;
        x /= q;
    }
    return c;
}

namespace {

std::uint64_t ipow(std::uint64_t b, unsigned e) {
    std::uint64_t r = 1;
    while (e--) r *= b;
    return r;
}

std::vector<Elem> digits(Elem x, std::uint32_t q, unsigned k) {
    std::vector<Elem> c(k);
    for (unsigned i = 0; i < k; ++i) {
        c[i] = x % q;
        x /= q;
    }
    return c;
}

// Points of exact degree k above the irreducible x-polynomials of degree j, first pi only.
std::optional<ClosedPoint> first_point_above_degree(const Curve& C, unsigned j, unsigned k) {
    const std::uint64_t total = ipow(C.q(), j);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (j > 1 && idx % C.q() == 0) continue;
        ff::Poly f = ff::monic_from_index(C.field(), j, idx);
        if (j > 1 && !ff::is_irreducible(f)) continue;
        std::optional<ClosedPoint> best;
        for (auto& P : C.points_above(f))
            if (P.degree == k && (!best || P < *best)) best = P;
        if (best) return best;
    }
    return std::nullopt;
}

void require_distinct_rational(const std::vector<ClosedPoint>& G) {
    std::set<ClosedPoint> seen;
    for (const auto& P : G) {
        if (P.degree != 1) throw PreconditionError("evaluation points must be rational");
        if (!seen.insert(P).second) throw PreconditionError("evaluation points must be pairwise distinct");
    }
}

// Columns: basis functions; rows: coordinates of f(Q) over F_q.
Matrix ev_Q_matrix(const Curve& C, const std::vector<Function>& basis, const ClosedPoint& Q) {
    const unsigned k = Q.degree;
    Matrix m(C.field(), k, basis.size());
    for (std::size_t j = 0; j < basis.size(); ++j) {
        auto c = digits(evaluate(C, basis[j], Q), C.q(), k);
        for (unsigned i = 0; i < k; ++i) m.at(i, j) = c[i];
    }
    return m;
}

Matrix ev_G_matrix(const Curve& C, const std::vector<Function>& basis, const std::vector<ClosedPoint>& G,
                   const Divisor& D) {
    Matrix m(C.field(), G.size(), basis.size());
    for (std::size_t i = 0; i < G.size(); ++i) {
        const long nu = D[G[i]];
        for (std::size_t j = 0; j < basis.size(); ++j) m.at(i, j) = evaluate_generalized(C, basis[j], G[i], nu);
    }
    return m;
}

Divisor sum_of(const std::vector<ClosedPoint>& G) {
    Divisor out;
    for (const auto& P : G) out.add(P, 1);
    return out;
}

}  // namespace

ClosedPoint find_closed_point_of_degree(const Curve& C, unsigned k) {
    if (k < 1) throw std::invalid_argument("point degree must be >= 1");
    if (k == 1) return C.infinity();
    if (!C.is_elliptic()) return C.line_point(ff::find_irreducible(C.field(), k));
    if (k % 2 == 0)
        if (auto P = first_point_above_degree(C, k / 2, k)) return *P;
    if (auto P = first_point_above_degree(C, k, k)) return *P;
    const double q = C.q();
    const double g = C.genus();
    const bool weil = 2 * g + 1 <= std::pow(q, (k - 1) / 2.0) * (std::sqrt(q) - 1);
    std::ostringstream os;
    os << "no closed point of degree " << k << " on " << C.describe() << "; 2g+1 <= q^((k-1)/2)(q^(1/2)-1) "
       << (weil ? "holds" : "fails");
    throw PointNotFound(os.str());
}

std::string CriterionReport::to_string() const {
    std::ostringstream os;
    auto mark = [](bool b) { return b ? "ok" : "FAIL"; };
    os << "g=" << g << " d=" << d << " n=" << n << " k=" << k << "\n";
    os << "l(2D-G) = " << l_2D_minus_G << " [" << mark(two_D_minus_G_ordinary()) << "]\n";
    os << "l(D-Q) = " << l_D_minus_Q << ", expected " << expected_l_D_minus_Q << " [" << mark(D_minus_Q_ordinary())
       << "]\n";
    os << "2d-n <= g-1 [" << mark(lower_degree) << "]\n";
    os << "g-1 <= d-k [" << mark(upper_degree) << "]\n";
    os << "rank ev_{Q,D} = " << rank_ev_Q_D << " of k=" << k << " [" << mark(ev_Q_surjective()) << "]\n";
    os << "rank ev_{G,2D} = " << rank_ev_G_2D << " of l(2D)=" << dim_L_2D << " [" << mark(ev_G_injective())
       << "]\n";
    return os.str();
}

CriterionReport check_criterion(const Curve& C, const Divisor& D, const ClosedPoint& Q,
                                const std::vector<ClosedPoint>& G) {
    if (D[Q] != 0) throw PreconditionError("Q lies in the support of D");
    require_distinct_rational(G);
    CriterionReport r;
    r.g = C.genus();
    r.d = D.degree();
    r.n = static_cast<long>(G.size());
    r.k = Q.degree;
    const Divisor Gd = sum_of(G);
    const Divisor DQ = D - Divisor::point(Q);
    r.l_2D_minus_G = curves::rr_dimension(C, 2 * D - Gd);
    r.l_D_minus_Q = curves::rr_dimension(C, DQ);
    r.expected_l_D_minus_Q = std::max(0L, DQ.degree() + 1 - r.g);
    r.lower_degree = 2 * r.d - r.n <= r.g - 1;
    r.upper_degree = r.g - 1 <= r.d - r.k;
    auto LD = riemann_roch_space(C, D);
    r.dim_L_D = LD.dimension();
    r.rank_ev_Q_D = ff::rank(ev_Q_matrix(C, LD.basis, Q));
    auto L2D = riemann_roch_space(C, 2 * D);
    r.dim_L_2D = L2D.dimension();
    r.rank_ev_G_2D = ff::rank(ev_G_matrix(C, L2D.basis, G, 2 * D));
    return r;
}

BilinearAlgorithm build_multiplier(const CurvePtr& Cp, const ClosedPoint& Q, const std::vector<ClosedPoint>& G,
                                   const Divisor& D) {
    const Curve& C = *Cp;
    if (D[Q] != 0) throw PreconditionError("Q lies in the support of D");
    require_distinct_rational(G);
    const unsigned k = Q.degree;
    const FieldPtr& F = C.field();

    auto LD = riemann_roch_space(C, D);
    Matrix EQ = ev_Q_matrix(C, LD.basis, Q);
    const std::size_t rq = ff::rank(EQ);
    if (rq != k)
        throw ConstructionError("ev_{Q,D} is not surjective: rank " + std::to_string(rq) + " < k = " +
                                std::to_string(k));
    Matrix sigma = ff::solve_matrix(EQ, Matrix::identity(F, k));
    Matrix phi = ev_G_matrix(C, LD.basis, G, D) * sigma;

    auto L2D = riemann_roch_space(C, 2 * D);
    Matrix E2 = ev_G_matrix(C, L2D.basis, G, 2 * D);
    const std::size_t r2 = ff::rank(E2);
    if (r2 != L2D.dimension())
        throw ConstructionError("ev_{G,2D} is not injective: rank " + std::to_string(r2) + " < l(2D) = " +
                                std::to_string(L2D.dimension()));
    Matrix F2 = ev_Q_matrix(C, L2D.basis, Q);
    Matrix Wt = ff::solve_matrix(E2.transpose(), F2.transpose());

    BilinearAlgorithm alg;
    alg.base = F;
    alg.ext = C.residue_field(k);
    alg.k = k;
    alg.phi = std::move(phi);
    alg.w.resize(G.size());
    for (std::size_t i = 0; i < G.size(); ++i) {
        Elem e = 0;
        for (unsigned j = k; j-- > 0;) e = e * F->order() + Wt.at(i, j);
        alg.w[i] = e;
    }
    alg.provenance = Provenance{C.is_elliptic() ? "elliptic" : "projective_line", Cp, D, Q, G};

    // Bilinearity makes the basis pairs decisive.
    const ff::Field& E = *alg.ext;
    std::vector<Elem> basis(k);
    for (unsigned i = 0; i < k; ++i) basis[i] = static_cast<Elem>(ipow(F->order(), i));
    for (Elem x : basis)
        for (Elem y : basis)
            if (evaluate_formula(alg, x, y) != E.mul(x, y))
                throw ConstructionError("constructed algorithm fails on a basis pair");
    return alg;
}

BilinearAlgorithm identity_algorithm(const FieldPtr& base) {
    BilinearAlgorithm alg;
    alg.base = base;
    alg.ext = base;
    alg.k = 1;
    alg.phi = Matrix::identity(base, 1);
    alg.w = {1};
    alg.provenance = Provenance{"identity", nullptr, Divisor(), std::nullopt, {}};
    return alg;
}

namespace {

BilinearAlgorithm line_route(const CurvePtr& C, unsigned k) {
    const auto& pts = C->rational_points();
    const ClosedPoint Q = find_closed_point_of_degree(*C, k);
    std::vector<ClosedPoint> G(pts.begin(), pts.begin() + (2 * k - 1));
    return build_multiplier(C, Q, G, Divisor::point(C->infinity(), static_cast<long>(k) - 1));
}

bool elliptic_admissible(const Curve& C, unsigned k) {
    const std::size_t n1 = C.rational_points().size();
    return n1 >= 2 * static_cast<std::size_t>(k) && n1 > 5 * C.genus();
}

// nullopt when the rational points cannot serve as the greedy pool.
std::optional<BilinearAlgorithm> elliptic_route(const CurvePtr& C, unsigned k) {
    const auto& pts = C->rational_points();
    const ClosedPoint Q = find_closed_point_of_degree(*C, k);
    const long n = 2 * static_cast<long>(k);
    std::vector<ClosedPoint> G(pts.begin(), pts.begin() + n);
    std::vector<ordinary::Constraint> cons{ordinary::Constraint{1, Divisor::point(Q)},
                                           ordinary::Constraint{2, sum_of(G)}};
    const long d0 = std::min<long>(k - 1, (n - 1) / 2);
    const long d = k + C->genus() - 1;
    if (static_cast<long>(pts.size()) <= ordinary::pool_bound(*C, cons, d0, d)) return std::nullopt;
    const Divisor D0 = Divisor::point(pts.front(), d0);
    const Divisor D = ordinary::construct_ordinary_divisor(*C, cons, d, D0, pts);
    return build_multiplier(C, Q, G, D);
}

}  // namespace

BilinearAlgorithm auto_pipeline(const FieldPtr& base, unsigned k, const CurvePtr& hint) {
    if (k < 1) throw std::invalid_argument("k must be >= 1");
    if (k == 1) return identity_algorithm(base);
    const std::uint64_t q = base->order();
    std::vector<std::string> inventory;
    if (hint) {
        if (!hint->field()->same_as(*base)) throw std::invalid_argument("curve hint is over another field");
        if (!hint->is_elliptic()) {
            if (2 * k - 1 <= q + 1) return line_route(hint, k);
            inventory.push_back(hint->describe() + ": " + std::to_string(q + 1) + " rational points, needs " +
                                std::to_string(2 * k - 1));
        } else {
            if (elliptic_admissible(*hint, k))
                if (auto alg = elliptic_route(hint, k)) return std::move(*alg);
            inventory.push_back(hint->describe() + ": " + std::to_string(hint->rational_points().size()) +
                                " rational points, needs " + std::to_string(std::max(2 * k, 6u)));
        }
        throw NoCurveFound("the hinted curve does not support k = " + std::to_string(k), inventory);
    }
    if (2 * k <= q + 2) return line_route(Curve::projective_line(base), k);
    inventory.push_back("P1 over " + base->name() + ": needs k <= q/2 + 1 = " + std::to_string(q / 2 + 1) +
                        (q % 2 ? ".5" : ""));

    std::size_t scanned = 0, best = 0;
    std::array<Elem, 5> a{};
    const std::uint64_t total = ipow(q, 5);
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        std::uint64_t t = idx;
        for (int i = 4; i >= 0; --i) {
            a[i] = static_cast<Elem>(t % q);
            t /= q;
        }
        CurvePtr C;
        try {
            C = Curve::elliptic(base, a);
        } catch (const std::invalid_argument&) {
            continue;
        }
        ++scanned;
        best = std::max(best, C->rational_points().size());
        if (elliptic_admissible(*C, k))
            if (auto alg = elliptic_route(C, k)) return std::move(*alg);
    }
    inventory.push_back("elliptic curves over " + base->name() + ": " + std::to_string(scanned) +
                        " scanned, at most " + std::to_string(best) + " rational points, needs " +
                        std::to_string(std::max(2 * k, 6u)));
    std::string msg = "no curve of genus <= 1 supports k = " + std::to_string(k) + " over " + base->name();
    for (const auto& s : inventory) msg += "\n  " + s;
    throw NoCurveFound(msg, inventory);
}

}  // namespace rrmul::chudnovsky
