#pragma once

#include <array>
#include <compare>
#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "rrmul/ff/field.hpp"
#include "rrmul/ff/poly.hpp"

namespace rrmul::curves {

using ff::Elem;
using ff::FieldPtr;
using ff::Poly;

enum class CurveKind { ProjectiveLine, Elliptic };

/// A closed point. The point at infinity (∞ on the line, O on an elliptic
/// curve) has `infinite` set. Otherwise `pi` is the minimal polynomial of the
/// x-coordinate over F_q and (x, y) is the canonical geometric representative,
/// with coordinates in residue_field(degree): the smallest (x, y) in its
/// Frobenius orbit. On the line y is always 0 and x the smallest root of pi.
///
/// Ordering: infinity first, then degree, then pi, then (x, y).
struct ClosedPoint {
    bool infinite = false;
    unsigned degree = 1;
    Poly pi{nullptr};
    Elem x = 0;
    Elem y = 0;

    bool operator==(const ClosedPoint& o) const;
    std::strong_ordering operator<=>(const ClosedPoint& o) const;
};

/// Affine geometric point over some extension L of the base field, or the
/// point at infinity.
struct GeomPoint {
    bool infinite = false;
    Elem x = 0;
    Elem y = 0;
    bool operator==(const GeomPoint&) const = default;
};

class Curve;
using CurvePtr = std::shared_ptr<const Curve>;

/// The projective line, or an elliptic curve
/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6.
class Curve {
public:
    static CurvePtr projective_line(FieldPtr field);
    /// Coefficients in the order (a1, a3, a2, a4, a6). Throws on a singular curve.
    static CurvePtr elliptic(FieldPtr field, std::array<Elem, 5> a);

    CurveKind kind() const { return kind_; }
    bool is_elliptic() const { return kind_ == CurveKind::Elliptic; }
    unsigned genus() const { return is_elliptic() ? 1 : 0; }
    const FieldPtr& field() const { return field_; }
    std::uint32_t q() const { return field_->order(); }
    /// (a1, a3, a2, a4, a6); all zero for the line.
    const std::array<Elem, 5>& coefficients() const { return a_; }
    Elem a1() const { return a_[0]; }
    Elem a3() const { return a_[1]; }
    Elem a2() const { return a_[2]; }
    Elem a4() const { return a_[3]; }
    Elem a6() const { return a_[4]; }

    /// H = a1 x + a3 and F = x^3 + a2 x^2 + a4 x + a6, so the equation reads
    /// y^2 + H y = F. Both are zero on the line.
    const Poly& h_poly() const { return h_; }
    const Poly& f_poly() const { return f_; }

    Elem discriminant() const;
    bool on_curve(const ff::Field& L, Elem x, Elem y) const;

    /// Residue field of a closed point of degree k: extension_of_degree(F_q, k).
    FieldPtr residue_field(unsigned k) const { return ff::extension_of_degree(field_, k); }

    /// All closed points of exact degree k, sorted.
    std::vector<ClosedPoint> points_of_degree(unsigned k) const;
    /// X(F_q), cached.
    const std::vector<ClosedPoint>& rational_points() const;
    /// |X(F_{q^n})| by direct scan of the coordinates.
    std::uint64_t count_points_over(unsigned n) const;

    /// Closed points whose x-coordinate has minimal polynomial `pi` (monic
    /// irreducible over F_q). On the line this is the single point pi.
    std::vector<ClosedPoint> points_above(const Poly& pi) const;

    ClosedPoint infinity() const;
    /// Closed point of a geometric point with coordinates in `L`, which must be
    /// residue_field(m) for some m. Throws if the point is not on the curve.
    ClosedPoint closed_point(const FieldPtr& L, const GeomPoint& p) const;
    /// P1: the closed point with defining polynomial pi (monic irreducible).
    ClosedPoint line_point(const Poly& pi) const;
    /// Rational affine point (x, y); on the line y is ignored.
    ClosedPoint rational_point(Elem x, Elem y = 0) const;

    /// Ramification index of x - pi at P: 2 at 2-torsion points of an elliptic
    /// curve, 1 otherwise.
    unsigned pi_valuation(const ClosedPoint& P) const;
    bool is_two_torsion(const ClosedPoint& P) const;

    std::string describe() const;
    bool same_as(const Curve& o) const;

private:
    Curve() = default;
    void init_polys();
    std::vector<Elem> y_roots(const FieldPtr& L, Elem x) const;

    CurveKind kind_ = CurveKind::ProjectiveLine;
    FieldPtr field_;
    std::array<Elem, 5> a_{};
    Poly h_{nullptr}, f_{nullptr};
    mutable std::once_flag rational_once_;
    mutable std::vector<ClosedPoint> rational_;
};

}  // namespace rrmul::curves
