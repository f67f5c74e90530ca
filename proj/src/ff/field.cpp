#include "rrmul/ff/field.hpp"

#include <stdexcept>

#include "rrmul/ff/poly.hpp"

namespace rrmul::ff {

bool is_prime(std::uint64_t n) {
    if (n < 2) return false;
    for (std::uint64_t d = 2; d * d <= n; ++d)
        if (n % d == 0) return false;
    return true;
}

namespace {

std::vector<std::uint32_t> prime_factors(std::uint32_t n) {
    std::vector<std::uint32_t> out;
    for (std::uint32_t d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

}  // namespace

FieldPtr Field::prime(std::uint32_t p) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (p > kMaxFieldOrder) throw std::invalid_argument("field order too large for table arithmetic");
    std::shared_ptr<Field> f(new Field());
    f->p_ = p;
    f->order_ = p;
    f->modulus_ = {0, 1};
    f->cycle_ = p - 1;

    const auto factors = prime_factors(p - 1);
    auto powmod = [p](std::uint64_t b, std::uint64_t e) {
        std::uint64_t r = 1;
        b %= p;
        while (e) {
            if (e & 1) r = r * b % p;
            b = b * b % p;
            e >>= 1;
        }
        return r;
    };
    std::uint32_t g = 1;
    if (p > 2) {
        for (g = 2; g < p; ++g) {
            bool primitive = true;
            for (auto r : factors)
                if (powmod(g, (p - 1) / r) == 1) primitive = false;
            if (primitive) break;
        }
    }
    std::vector<Elem> powers(f->cycle_);
    std::uint64_t cur = 1;
    for (std::uint32_t i = 0; i < f->cycle_; ++i) {
        powers[i] = static_cast<Elem>(cur);
        cur = cur * g % p;
    }
    f->build_tables(powers);
    return f;
}

FieldPtr Field::extension(FieldPtr base, std::vector<Elem> modulus, bool check) {
    if (!base) throw std::invalid_argument("extension needs a base field");
    while (!modulus.empty() && modulus.back() == 0) modulus.pop_back();
    if (modulus.size() < 2) throw std::invalid_argument("extension modulus must have degree >= 1");
    if (modulus.back() != 1) throw std::invalid_argument("extension modulus must be monic");
    for (auto c : modulus)
        if (c >= base->order()) throw std::invalid_argument("modulus coefficient outside base field");
    const unsigned k = static_cast<unsigned>(modulus.size() - 1);
    std::uint64_t order = 1;
    for (unsigned i = 0; i < k; ++i) {
        order *= base->order();
        if (order > kMaxFieldOrder) throw std::invalid_argument("field order too large for table arithmetic");
    }
    if (check && !is_irreducible(Poly(base, modulus)))
        throw std::invalid_argument("extension modulus is not irreducible");

    std::shared_ptr<Field> f(new Field());
    f->p_ = base->characteristic();
    f->order_ = static_cast<std::uint32_t>(order);
    f->degree_ = k;
    f->abs_degree_ = base->absolute_degree() * k;
    f->base_ = base;
    f->modulus_ = std::move(modulus);
    f->cycle_ = f->order_ - 1;

    const auto factors = prime_factors(f->cycle_);
    auto slow_pow = [&](Elem a, std::uint64_t e) {
        Elem r = 1;
        while (e) {
            if (e & 1) r = f->slow_mul(r, a);
            a = f->slow_mul(a, a);
            e >>= 1;
        }
        return r;
    };
    auto primitive = [&](Elem g) {
        if (g == 0) return false;
        for (auto r : factors)
            if (slow_pow(g, f->cycle_ / r) == 1) return false;
        return true;
    };
    Elem g = base->order();  // the class of t
    if (k == 1 || !primitive(g)) {
        for (g = 1; g < f->order_; ++g)
            if (primitive(g)) break;
    }
    std::vector<Elem> powers(f->cycle_);
    Elem cur = 1;
    for (std::uint32_t i = 0; i < f->cycle_; ++i) {
        powers[i] = cur;
        cur = f->slow_mul(cur, g);
    }
    f->build_tables(powers);
    return f;
}

void Field::build_tables(const std::vector<Elem>& powers) {
    half_cycle_ = p_ == 2 ? 0 : cycle_ / 2;
    exp_.assign(2 * static_cast<std::size_t>(cycle_) + 1, 0);
    log_.assign(order_, kNoLog);
    for (std::uint32_t i = 0; i < cycle_; ++i) {
        exp_[i] = powers[i];
        exp_[i + cycle_] = powers[i];
        if (log_[powers[i]] != kNoLog) throw std::logic_error("field generator is not primitive");
        log_[powers[i]] = i;
    }
    exp_[2 * static_cast<std::size_t>(cycle_)] = powers[0];

    const std::uint32_t q = base_order();
    zech_.assign(cycle_, kNoLog);
    for (std::uint32_t i = 0; i < cycle_; ++i) {
        Elem e = powers[i];
        Elem c0 = e % q;
        Elem c0_plus = base_ ? base_->add(c0, 1) : (c0 + 1) % p_;
        Elem e1 = e - c0 + c0_plus;
        zech_[i] = e1 == 0 ? kNoLog : log_[e1];
    }
}

Elem Field::slow_mul(Elem a, Elem b) const {
    const Field& B = *base_;
    const unsigned k = degree_;
    std::vector<Elem> ca = coeffs(a), cb = coeffs(b);
    std::vector<Elem> prod(2 * k - 1, 0);
    for (unsigned i = 0; i < k; ++i) {
        if (ca[i] == 0) continue;
        for (unsigned j = 0; j < k; ++j) prod[i + j] = B.add(prod[i + j], B.mul(ca[i], cb[j]));
    }
    for (unsigned d = 2 * k - 2; d >= k; --d) {
        Elem c = prod[d];
        if (c == 0) continue;
        for (unsigned j = 0; j < k; ++j) prod[d - k + j] = B.sub(prod[d - k + j], B.mul(c, modulus_[j]));
        prod[d] = 0;
    }
    return from_coeffs(std::span<const Elem>(prod.data(), k));
}

Elem Field::inv(Elem a) const {
    if (a == 0) throw std::domain_error("inverse of zero");
    return exp_[cycle_ - log_[a]];
}

Elem Field::pow(Elem a, std::uint64_t e) const {
    if (e == 0) return 1;
    if (a == 0) return 0;
    unsigned __int128 l = static_cast<unsigned __int128>(log_[a]) * e;
    return exp_[static_cast<std::uint32_t>(l % cycle_)];
}

Elem Field::from_int(std::int64_t v) const {
    std::int64_t r = v % static_cast<std::int64_t>(p_);
    if (r < 0) r += p_;
    return static_cast<Elem>(r);
}

Elem Field::coeff(Elem a, unsigned i) const {
    const std::uint32_t q = base_order();
    for (unsigned j = 0; j < i; ++j) a /= q;
    return a % q;
}

std::vector<Elem> Field::coeffs(Elem a) const {
    const std::uint32_t q = base_order();
    std::vector<Elem> out(degree_);
    for (unsigned i = 0; i < degree_; ++i) {
        out[i] = a % q;
        a /= q;
    }
    return out;
}

Elem Field::from_coeffs(std::span<const Elem> c) const {
    if (c.size() > degree_) throw std::invalid_argument("too many coordinates for field element");
    const std::uint32_t q = base_order();
    Elem out = 0;
    for (std::size_t i = c.size(); i-- > 0;) {
        if (c[i] >= q) throw std::invalid_argument("coordinate outside base field");
        out = out * q + c[i];
    }
    return out;
}

bool Field::same_as(const Field& other) const {
    if (this == &other) return true;
    if (p_ != other.p_ || order_ != other.order_ || modulus_ != other.modulus_) return false;
    if (!base_ || !other.base_) return !base_ && !other.base_;
    return base_->same_as(*other.base_);
}

std::string Field::name() const {
    if (!base_) return "F_" + std::to_string(p_);
    if (base_->is_prime_field()) return "F_" + std::to_string(order_);
    return base_->name() + "^" + std::to_string(degree_);
}

}  // namespace rrmul::ff
