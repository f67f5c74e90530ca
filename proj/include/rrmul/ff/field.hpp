#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

namespace rrmul::ff {

/// Field elements are indices in [0, order). For an extension base[t]/(h) of
/// degree k over a base of order Q the element sum c_i t^i has index
/// sum c_i Q^i, so base elements keep their index inside every extension and
/// the base-p digits of an index are its coordinates over the prime field.
using Elem = std::uint32_t;

class Field;
using FieldPtr = std::shared_ptr<const Field>;

/// Largest field order the table-driven arithmetic accepts.
inline constexpr std::uint32_t kMaxFieldOrder = 1u << 23;

bool is_prime(std::uint64_t n);

/// Finite field with log/antilog/Zech tables. Immutable after construction.
class Field {
public:
    static FieldPtr prime(std::uint32_t p);

    /// base[t]/(modulus). The modulus is monic of degree >= 1 over `base`;
    /// irreducibility is the caller's responsibility (checked when `check` is set).
    static FieldPtr extension(FieldPtr base, std::vector<Elem> modulus, bool check = true);

    std::uint32_t characteristic() const { return p_; }
    std::uint32_t order() const { return order_; }
    unsigned degree() const { return degree_; }
    unsigned absolute_degree() const { return abs_degree_; }
    bool is_prime_field() const { return base_ == nullptr; }
    const FieldPtr& base() const { return base_; }
    std::uint32_t base_order() const { return base_ ? base_->order() : p_; }

    /// Monic modulus over the base, little-endian. A prime field reports x.
    const std::vector<Elem>& modulus() const { return modulus_; }

    Elem zero() const { return 0; }
    Elem one() const { return 1; }

    Elem add(Elem a, Elem b) const {
        if (p_ == 2) return a ^ b;
        if (a == 0) return b;
        if (b == 0) return a;
        std::uint32_t la = log_[a], lb = log_[b];
        std::uint32_t d = lb >= la ? lb - la : lb + cycle_ - la;
        std::uint32_t z = zech_[d];
        if (z == kNoLog) return 0;
        return exp_[la + z];
    }
    Elem neg(Elem a) const {
        if (p_ == 2 || a == 0) return a;
        return exp_[log_[a] + half_cycle_];
    }
    Elem sub(Elem a, Elem b) const { return add(a, neg(b)); }
    Elem mul(Elem a, Elem b) const {
        if (a == 0 || b == 0) return 0;
        return exp_[log_[a] + log_[b]];
    }
    Elem inv(Elem a) const;
    Elem div(Elem a, Elem b) const { return mul(a, inv(b)); }
    Elem pow(Elem a, std::uint64_t e) const;

    /// Image of an integer under Z -> F_p -> this field.
    Elem from_int(std::int64_t v) const;

    /// Multiplicative structure: exp(log(a)) == a for a != 0.
    Elem generator() const { return exp_[1 % cycle_]; }
    std::uint32_t log(Elem a) const { return log_[a]; }
    Elem exp(std::uint64_t i) const { return exp_[i % cycle_]; }

    /// Coordinates over the base field.
    Elem coeff(Elem a, unsigned i) const;
    std::vector<Elem> coeffs(Elem a) const;
    Elem from_coeffs(std::span<const Elem> c) const;

    /// x -> x^{|base|}, the generator of Gal(this/base).
    Elem frobenius(Elem a) const { return pow(a, base_order()); }

    bool same_as(const Field& other) const;

    /// e.g. "F_4" or "F_4^3".
    std::string name() const;

private:
    static constexpr std::uint32_t kNoLog = 0xffffffffu;

    Field() = default;
    void build_tables(const std::vector<Elem>& powers_of_generator);
    Elem slow_mul(Elem a, Elem b) const;

    std::uint32_t p_ = 0;
    std::uint32_t order_ = 0;
    unsigned degree_ = 1;
    unsigned abs_degree_ = 1;
    FieldPtr base_;
    std::vector<Elem> modulus_;
    std::uint32_t cycle_ = 1;       // order - 1
    std::uint32_t half_cycle_ = 0;  // log(-1)
    std::vector<Elem> exp_;         // length 2 * cycle_
    std::vector<std::uint32_t> log_;
    std::vector<std::uint32_t> zech_;
};

}  // namespace rrmul::ff
