#include "rrmul/curves/curve.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

#include "rrmul/ff/embedding.hpp"

namespace rrmul::curves {

bool ClosedPoint::operator==(const ClosedPoint& o) const {
    if (infinite || o.infinite) return infinite == o.infinite;
    return degree == o.degree && x == o.x && y == o.y && pi == o.pi;
}

std::strong_ordering ClosedPoint::operator<=>(const ClosedPoint& o) const {
    if (infinite || o.infinite) return o.infinite <=> infinite;  // infinity first
    if (auto c = degree <=> o.degree; c != 0) return c;
    if (auto c = pi <=> o.pi; c != 0) return c;
    if (auto c = x <=> o.x; c != 0) return c;
    return y <=> o.y;
}

CurvePtr Curve::projective_line(FieldPtr field) {
    if (!field) throw std::invalid_argument("curve needs a field");
    std::shared_ptr<Curve> c(new Curve());
    c->kind_ = CurveKind::ProjectiveLine;
    c->field_ = std::move(field);
    c->init_polys();
    return c;
}

CurvePtr Curve::elliptic(FieldPtr field, std::array<Elem, 5> a) {
    if (!field) throw std::invalid_argument("curve needs a field");
    for (auto c : a)
        if (c >= field->order()) throw std::invalid_argument("Weierstrass coefficient outside field");
    std::shared_ptr<Curve> c(new Curve());
    c->kind_ = CurveKind::Elliptic;
    c->field_ = std::move(field);
    c->a_ = a;
    c->init_polys();
    if (c->discriminant() == 0) throw std::invalid_argument("singular Weierstrass equation");
    return c;
}

void Curve::init_polys() {
    if (is_elliptic()) {
        h_ = Poly(field_, {a3(), a1()});
        f_ = Poly(field_, {a6(), a4(), a2(), 1});
    } else {
        h_ = Poly(field_);
        f_ = Poly(field_);
    }
}

Elem Curve::discriminant() const {
    const ff::Field& F = *field_;
    auto c = [&](std::int64_t v) { return F.from_int(v); };
    auto m = [&](Elem x, Elem y) { return F.mul(x, y); };
    auto ad = [&](Elem x, Elem y) { return F.add(x, y); };
    auto sb = [&](Elem x, Elem y) { return F.sub(x, y); };
    const Elem A1 = a1(), A2 = a2(), A3 = a3(), A4 = a4(), A6 = a6();
    const Elem b2 = ad(m(A1, A1), m(c(4), A2));
    const Elem b4 = ad(m(c(2), A4), m(A1, A3));
    const Elem b6 = ad(m(A3, A3), m(c(4), A6));
    const Elem b8 = sb(ad(ad(m(m(A1, A1), A6), m(c(4), m(A2, A6))), m(A2, m(A3, A3))),
                       ad(m(A1, m(A3, A4)), m(A4, A4)));
    Elem d = F.neg(m(m(b2, b2), b8));
    d = sb(d, m(c(8), m(b4, m(b4, b4))));
    d = sb(d, m(c(27), m(b6, b6)));
    d = ad(d, m(c(9), m(b2, m(b4, b6))));
    return d;
}

bool Curve::on_curve(const ff::Field& L, Elem x, Elem y) const {
    if (!is_elliptic()) return true;
    const Elem lhs = L.add(L.mul(y, y), L.mul(h_.eval_in(L, x), y));
    return lhs == f_.eval_in(L, x);
}

std::vector<Elem> Curve::y_roots(const FieldPtr& L, Elem x) const {
    const Elem b = h_.eval_in(*L, x);
    const Elem c = f_.eval_in(*L, x);
    return ff::roots(Poly(L, {L->neg(c), b, 1}));
}

ClosedPoint Curve::infinity() const {
    ClosedPoint P;
    P.infinite = true;
    return P;
}

ClosedPoint Curve::line_point(const Poly& pi) const {
    if (is_elliptic()) throw std::logic_error("line_point on an elliptic curve");
    if (!pi.is_monic() || pi.degree() < 1) throw std::invalid_argument("closed point needs a monic polynomial");
    if (!pi.field()->same_as(*field_)) throw std::invalid_argument("polynomial over the wrong field");
    const unsigned k = static_cast<unsigned>(pi.degree());
    if (!ff::is_irreducible(pi)) throw std::invalid_argument("closed point polynomial is not irreducible");
    FieldPtr L = residue_field(k);
    auto rts = ff::roots(pi.lift(L));
    ClosedPoint P;
    P.degree = k;
    P.pi = Poly(field_, pi.coeffs());
    P.x = rts.front();
    return P;
}

ClosedPoint Curve::rational_point(Elem x, Elem y) const {
    if (!is_elliptic()) return line_point(Poly::linear(field_, x));
    return closed_point(field_, GeomPoint{false, x, y});
}

ClosedPoint Curve::closed_point(const FieldPtr& L, const GeomPoint& p) const {
    if (p.infinite) return infinity();
    const std::uint32_t q = field_->order();
    if (!(L->same_as(*field_) || (L->base() && L->base()->same_as(*field_))))
        throw std::invalid_argument("coordinates must lie in an extension of the base field");
    if (p.x >= L->order() || p.y >= L->order()) throw std::invalid_argument("coordinate outside field");
    if (!on_curve(*L, p.x, p.y)) throw std::invalid_argument("point is not on the curve");
    const unsigned m = L->same_as(*field_) ? 1 : L->degree();
    const unsigned dx = ff::degree_over(*L, q, p.x);
    const unsigned dy = is_elliptic() ? ff::degree_over(*L, q, p.y) : 1;
    const unsigned k = std::lcm(dx, dy);
    Elem x = p.x, y = is_elliptic() ? p.y : 0;
    FieldPtr Lk = L;
    if (k != m) {
        const auto& emb = ff::subfield_embedding(field_, k, m);
        x = emb.pull_back(x);
        y = emb.pull_back(y);
        Lk = residue_field(k);
    }
    // canonical representative and minimal polynomial of x
    Elem bx = x, by = y, cx = x, cy = y;
    std::vector<Elem> xconj;
    for (unsigned i = 0; i < k; ++i) {
        if (std::find(xconj.begin(), xconj.end(), cx) == xconj.end()) xconj.push_back(cx);
        if (std::pair(cx, cy) < std::pair(bx, by)) bx = cx, by = cy;
        cx = Lk->pow(cx, q);
        cy = Lk->pow(cy, q);
    }
    Poly mp = Poly::constant(Lk, 1);
    for (Elem c : xconj) mp *= Poly::linear(Lk, c);
    for (Elem c : mp.coeffs())
        if (c >= q) throw std::logic_error("minimal polynomial not defined over the base field");
    ClosedPoint P;
    P.degree = k;
    P.pi = Poly(field_, mp.coeffs());
    P.x = bx;
    P.y = by;
    return P;
}

std::vector<ClosedPoint> Curve::points_above(const Poly& pi) const {
    if (!is_elliptic()) return {line_point(pi)};
    if (!pi.is_monic() || pi.degree() < 1) throw std::invalid_argument("points_above needs a monic polynomial");
    const unsigned j = static_cast<unsigned>(pi.degree());
    const Poly base_pi(field_, pi.coeffs());
    FieldPtr Lj = residue_field(j);
    auto xs = ff::roots(base_pi.lift(Lj));
    if (xs.size() != j) throw std::invalid_argument("points_above needs an irreducible polynomial");
    std::vector<ClosedPoint> out;
    auto ys = y_roots(Lj, xs.front());
    if (!ys.empty()) {
        for (Elem y : ys) {
            ClosedPoint P;
            P.degree = j;
            P.pi = base_pi;
            P.x = xs.front();
            P.y = y;
            out.push_back(P);
        }
        return out;
    }
    FieldPtr L2 = residue_field(2 * j);
    auto xs2 = ff::roots(base_pi.lift(L2));
    auto ys2 = y_roots(L2, xs2.front());
    ClosedPoint P;
    P.degree = 2 * j;
    P.pi = base_pi;
    P.x = xs2.front();
    P.y = ys2.front();
    out.push_back(P);
    return out;
}

std::vector<ClosedPoint> Curve::points_of_degree(unsigned k) const {
    if (k < 1) throw std::invalid_argument("point degree must be >= 1");
    std::vector<ClosedPoint> out;
    if (k == 1) out.push_back(infinity());
    auto scan = [&](unsigned j) {
        std::uint64_t total = 1;
        for (unsigned i = 0; i < j; ++i) total *= q();
        for (std::uint64_t idx = 0; idx < total; ++idx) {
            Poly f = ff::monic_from_index(field_, j, idx);
            if (j > 1 && (idx % q() == 0 || !ff::is_irreducible(f))) continue;
            for (auto& P : points_above(f))
                if (P.degree == k) out.push_back(P);
        }
    };
    scan(k);
    if (is_elliptic() && k % 2 == 0) scan(k / 2);
    std::sort(out.begin(), out.end());
    return out;
}

const std::vector<ClosedPoint>& Curve::rational_points() const {
    std::call_once(rational_once_, [this] { rational_ = points_of_degree(1); });
    return rational_;
}

std::uint64_t Curve::count_points_over(unsigned n) const {
    FieldPtr L = residue_field(n);
    if (!is_elliptic()) return static_cast<std::uint64_t>(L->order()) + 1;
    std::uint64_t count = 1;
    for (Elem x = 0; x < L->order(); ++x)
        for (Elem y = 0; y < L->order(); ++y)
            if (on_curve(*L, x, y)) ++count;
    return count;
}

bool Curve::is_two_torsion(const ClosedPoint& P) const {
    if (!is_elliptic() || P.infinite) return false;
    FieldPtr L = residue_field(P.degree);
    return L->add(L->add(P.y, P.y), h_.eval_in(*L, P.x)) == 0;
}

unsigned Curve::pi_valuation(const ClosedPoint& P) const { return is_two_torsion(P) ? 2 : 1; }

std::string Curve::describe() const {
    std::ostringstream os;
    if (!is_elliptic()) {
        os << "P1 over " << field_->name();
        return os.str();
    }
    os << "y^2";
    if (a1()) os << " + " << a1() << "*x*y";
    if (a3()) os << " + " << a3() << "*y";
    os << " = x^3";
    if (a2()) os << " + " << a2() << "*x^2";
    if (a4()) os << " + " << a4() << "*x";
    if (a6()) os << " + " << a6();
    os << " over " << field_->name();
    return os.str();
}

bool Curve::same_as(const Curve& o) const {
    return this == &o || (kind_ == o.kind_ && a_ == o.a_ && field_->same_as(*o.field_));
}

}  // namespace rrmul::curves
