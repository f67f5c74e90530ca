#pragma once

#include <compare>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "rrmul/ff/field.hpp"
#include "rrmul/ff/rational.hpp"

namespace rrmul::ff {

/// Degree of the zero polynomial.
inline constexpr int kNegInfinity = std::numeric_limits<int>::min();

/// Dense univariate polynomial over a finite field, little-endian coefficients.
/// The coefficient vector never carries a trailing zero.
class Poly {
public:
    explicit Poly(FieldPtr field) : field_(std::move(field)) {}
    Poly(FieldPtr field, std::vector<Elem> coeffs);

    static Poly constant(FieldPtr field, Elem c);
    static Poly monomial(FieldPtr field, Elem c, unsigned degree);
    static Poly x(FieldPtr field) { return monomial(std::move(field), 1, 1); }
    /// x - a
    static Poly linear(FieldPtr field, Elem a);

    const FieldPtr& field() const { return field_; }
    const std::vector<Elem>& coeffs() const { return c_; }
    int degree() const { return c_.empty() ? kNegInfinity : static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    bool is_monic() const { return !c_.empty() && c_.back() == 1; }
    Elem lead() const { return c_.empty() ? 0 : c_.back(); }
    Elem operator[](std::size_t i) const { return i < c_.size() ? c_[i] : 0; }

    Poly operator-() const;
    Poly operator+(const Poly& o) const;
    Poly operator-(const Poly& o) const;
    Poly operator*(const Poly& o) const;
    Poly scaled(Elem s) const;
    Poly shifted(unsigned n) const;  // times x^n
    Poly& operator+=(const Poly& o) { return *this = *this + o; }
    Poly& operator-=(const Poly& o) { return *this = *this - o; }
    Poly& operator*=(const Poly& o) { return *this = *this * o; }

    /// Euclidean division; throws on a zero divisor.
    std::pair<Poly, Poly> divmod(const Poly& d) const;
    Poly operator/(const Poly& d) const { return divmod(d).first; }
    Poly operator%(const Poly& d) const { return divmod(d).second; }

    Poly monic() const;
    Poly derivative() const;

    /// Evaluation at an element of the coefficient field.
    Elem eval(Elem a) const;
    /// Evaluation at an element of `ext`, an extension whose base is this
    /// polynomial's field (or that field itself).
    Elem eval_in(const Field& ext, Elem a) const;
    /// The same polynomial with coefficients viewed in `ext`.
    Poly lift(FieldPtr ext) const;

    /// Largest e with f^e | *this (this must be nonzero, f nonconstant).
    unsigned multiplicity(const Poly& f) const;

    bool operator==(const Poly& o) const;
    /// Degree first, then coefficients from the top down.
    std::strong_ordering operator<=>(const Poly& o) const;

    std::string to_string(const char* var = "x") const;

private:
    void trim();
    void check_same_field(const Poly& o) const;

    FieldPtr field_;
    std::vector<Elem> c_;
};

Poly gcd(Poly a, Poly b);  // monic, or zero when both vanish
Poly pow_mod(const Poly& base, const BigInt& e, const Poly& mod);
Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod);

/// Rabin's test.
bool is_irreducible(const Poly& f);

/// Monic irreducible factors with multiplicities, sorted by the Poly ordering.
std::vector<std::pair<Poly, unsigned>> factor(const Poly& f);

/// Distinct roots in the coefficient field, ascending by index.
std::vector<Elem> roots(const Poly& f);

/// The monic polynomial of degree `degree` whose lower coefficients, read as
/// base-|F| digits (constant term least significant), equal `index`.
Poly monic_from_index(const FieldPtr& field, unsigned degree, std::uint64_t index);

/// Lexicographically smallest monic irreducible of degree k over `field`.
Poly find_irreducible(const FieldPtr& field, unsigned k);

/// F_{p^m} with the lexicographically smallest monic irreducible modulus.
FieldPtr field_create(std::uint32_t p, unsigned m);

/// F_{q^k} as an extension of `base` by find_irreducible(base, k); the base
/// itself for k == 1.
FieldPtr extension_of_degree(const FieldPtr& base, unsigned k);

/// Degree of `a` over the subfield of order `base_order`: the least j >= 1 with
/// a^{base_order^j} == a.
unsigned degree_over(const Field& ext, std::uint32_t base_order, Elem a);

}  // namespace rrmul::ff
