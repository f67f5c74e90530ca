#include "rrmul/ff/poly.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <random>
#include <sstream>
#include <stdexcept>

namespace rrmul::ff {

Poly::Poly(FieldPtr field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) {
    for (auto c : c_)
        if (c >= field_->order()) throw std::invalid_argument("polynomial coefficient outside field");
    trim();
}

Poly Poly::constant(FieldPtr field, Elem c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldPtr field, Elem c, unsigned degree) {
    std::vector<Elem> v(degree + 1, 0);
    v[degree] = c;
    return Poly(std::move(field), std::move(v));
}

Poly Poly::linear(FieldPtr field, Elem a) {
    Elem na = field->neg(a);
    return Poly(std::move(field), {na, 1});
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

void Poly::check_same_field(const Poly& o) const {
    if (field_ != o.field_ && !field_->same_as(*o.field_))
        throw std::invalid_argument("polynomials over different fields");
}

Poly Poly::operator-() const {
    Poly r(field_);
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->neg(c_[i]);
    return r;
}

Poly Poly::operator+(const Poly& o) const {
    check_same_field(o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_->add((*this)[i], o[i]);
    r.trim();
    return r;
}

Poly Poly::operator-(const Poly& o) const {
    check_same_field(o);
    Poly r(field_);
    r.c_.resize(std::max(c_.size(), o.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) r.c_[i] = field_->sub((*this)[i], o[i]);
    r.trim();
    return r;
}

Poly Poly::operator*(const Poly& o) const {
    check_same_field(o);
    Poly r(field_);
    if (c_.empty() || o.c_.empty()) return r;
    const Field& F = *field_;
    r.c_.assign(c_.size() + o.c_.size() - 1, 0);
    for (std::size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        for (std::size_t j = 0; j < o.c_.size(); ++j) r.c_[i + j] = F.add(r.c_[i + j], F.mul(c_[i], o.c_[j]));
    }
    r.trim();
    return r;
}

Poly Poly::scaled(Elem s) const {
    Poly r(field_);
    if (s == 0) return r;
    r.c_.resize(c_.size());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i] = field_->mul(c_[i], s);
    return r;
}

Poly Poly::shifted(unsigned n) const {
    Poly r(field_);
    if (c_.empty()) return r;
    r.c_.assign(n, 0);
    r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    return r;
}

std::pair<Poly, Poly> Poly::divmod(const Poly& d) const {
    check_same_field(d);
    if (d.is_zero()) throw std::domain_error("polynomial division by zero");
    const Field& F = *field_;
    Poly q(field_), r = *this;
    if (r.degree() < d.degree()) return {q, r};
    const int dd = d.degree();
    const Elem inv_lead = F.inv(d.lead());
    q.c_.assign(r.c_.size() - d.c_.size() + 1, 0);
    for (int i = r.degree(); i >= dd; --i) {
        Elem c = r.c_[i];
        if (c == 0) continue;
        Elem t = F.mul(c, inv_lead);
        q.c_[i - dd] = t;
        for (int j = 0; j <= dd; ++j) r.c_[i - dd + j] = F.sub(r.c_[i - dd + j], F.mul(t, d.c_[j]));
    }
    r.trim();
    q.trim();
    return {q, r};
}

Poly Poly::monic() const {
    if (c_.empty()) return *this;
    return scaled(field_->inv(lead()));
}

Poly Poly::derivative() const {
    Poly r(field_);
    if (c_.size() <= 1) return r;
    r.c_.resize(c_.size() - 1);
    for (std::size_t i = 1; i < c_.size(); ++i)
        r.c_[i - 1] = field_->mul(c_[i], field_->from_int(static_cast<std::int64_t>(i)));
    r.trim();
    return r;
}

Elem Poly::eval(Elem a) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = field_->add(field_->mul(acc, a), c_[i]);
    return acc;
}

Elem Poly::eval_in(const Field& ext, Elem a) const {
    if (&ext != field_.get() && !ext.same_as(*field_) &&
        !(ext.base() && (ext.base() == field_ || ext.base()->same_as(*field_))))
        throw std::invalid_argument("evaluation field does not extend the coefficient field");
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = ext.add(ext.mul(acc, a), c_[i]);
    return acc;
}

Poly Poly::lift(FieldPtr ext) const {
    if (ext.get() != field_.get() && !ext->same_as(*field_) &&
        !(ext->base() && (ext->base() == field_ || ext->base()->same_as(*field_))))
        throw std::invalid_argument("lift target does not extend the coefficient field");
    Poly r(std::move(ext));
    r.c_ = c_;
    return r;
}

unsigned Poly::multiplicity(const Poly& f) const {
    if (is_zero()) throw std::domain_error("multiplicity in the zero polynomial");
    if (f.degree() < 1) throw std::invalid_argument("multiplicity of a constant");
    unsigned e = 0;
    Poly cur = *this;
    for (;;) {
        auto [q, r] = cur.divmod(f);
        if (!r.is_zero()) return e;
        ++e;
        cur = std::move(q);
    }
}

bool Poly::operator==(const Poly& o) const {
    return c_ == o.c_ && (field_ == o.field_ || field_->same_as(*o.field_));
}

std::strong_ordering Poly::operator<=>(const Poly& o) const {
    if (c_.size() != o.c_.size()) return c_.size() <=> o.c_.size();
    for (std::size_t i = c_.size(); i-- > 0;)
        if (c_[i] != o.c_[i]) return c_[i] <=> o.c_[i];
    return std::strong_ordering::equal;
}

std::string Poly::to_string(const char* var) const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i] == 0) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0 || c_[i] != 1) os << c_[i];
        if (i >= 1) {
            if (c_[i] != 1) os << "*";
            os << var;
            if (i > 1) os << "^" << i;
        }
    }
    return os.str();
}

Poly gcd(Poly a, Poly b) {
    while (!b.is_zero()) {
        Poly r = a % b;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

Poly pow_mod(const Poly& base, std::uint64_t e, const Poly& mod) {
    Poly result = Poly::constant(base.field(), 1) % mod;
    Poly b = base % mod;
    while (e) {
        if (e & 1) result = (result * b) % mod;
        e >>= 1;
        if (e) b = (b * b) % mod;
    }
    return result;
}

Poly pow_mod(const Poly& base, const BigInt& e, const Poly& mod) {
    Poly result = Poly::constant(base.field(), 1) % mod;
    Poly b = base % mod;
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        result = (result * result) % mod;
        if (mpz_tstbit(e.get_mpz_t(), i)) result = (result * b) % mod;
    }
    return result;
}

namespace {

std::vector<unsigned> prime_divisors(unsigned n) {
    std::vector<unsigned> out;
    for (unsigned d = 2; d * d <= n; ++d) {
        if (n % d == 0) {
            out.push_back(d);
            while (n % d == 0) n /= d;
        }
    }
    if (n > 1) out.push_back(n);
    return out;
}

// Square-free decomposition of a monic polynomial: pairs (square-free part, multiplicity).
std::vector<std::pair<Poly, unsigned>> square_free(const Poly& f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Field& F = *f.field();
    Poly c = gcd(f, f.derivative());
    Poly w = f / c;
    unsigned i = 1;
    while (!w.is_one()) {
        Poly y = gcd(w, c);
        Poly fac = w / y;
        if (!fac.is_one()) out.emplace_back(fac, i);
        w = y;
        c = c / y;
        ++i;
    }
    if (!c.is_one()) {
        // c is a polynomial in x^p; take its p-th root.
        const std::uint32_t p = F.characteristic();
        const std::uint64_t root_exp = F.order() / p;
        std::vector<Elem> rc;
        for (int j = 0; j <= c.degree(); j += static_cast<int>(p)) rc.push_back(F.pow(c[j], root_exp));
        for (auto& [g, m] : square_free(Poly(f.field(), rc))) out.emplace_back(g, m * p);
    }
    return out;
}

std::vector<std::pair<Poly, unsigned>> distinct_degree(Poly f) {
    std::vector<std::pair<Poly, unsigned>> out;
    const Poly x = Poly::x(f.field());
    const std::uint64_t q = f.field()->order();
    Poly h = x % f;
    for (unsigned i = 1; f.degree() >= 2 * static_cast<int>(i); ++i) {
        h = pow_mod(h, q, f);
        Poly g = gcd(h - x, f);
        if (!g.is_one()) {
            out.emplace_back(g, i);
            f = f / g;
            h = h % f;
        }
    }
    if (f.degree() > 0) out.emplace_back(f, static_cast<unsigned>(f.degree()));
    return out;
}

void equal_degree(const Poly& g, unsigned d, std::mt19937_64& rng, std::vector<Poly>& out) {
    if (g.degree() == static_cast<int>(d)) {
        out.push_back(g);
        return;
    }
    const Field& F = *g.field();
    const std::uint32_t q = F.order();
    std::uniform_int_distribution<std::uint32_t> coin(0, q - 1);
    BigInt half_exp;
    if (F.characteristic() != 2) half_exp = (pow(BigInt(q), d) - 1) / 2;
    for (;;) {
        std::vector<Elem> rc(g.degree());
        for (auto& c : rc) c = coin(rng);
        Poly a(g.field(), rc);
        if (a.degree() < 1) continue;
        Poly b(g.field());
        if (F.characteristic() == 2) {
            // absolute trace to F_2
            const unsigned steps = F.absolute_degree() * d;
            Poly t = a % g;
            b = t;
            for (unsigned j = 1; j < steps; ++j) {
                t = (t * t) % g;
                b = b + t;
            }
        } else {
            b = pow_mod(a, half_exp, g) - Poly::constant(g.field(), 1);
        }
        Poly h = gcd(b, g);
        if (h.degree() > 0 && h.degree() < g.degree()) {
            equal_degree(h, d, rng, out);
            equal_degree(g / h, d, rng, out);
            return;
        }
    }
}

}  // namespace

bool is_irreducible(const Poly& f) {
    const int n = f.degree();
    if (n < 1) return false;
    if (n == 1) return true;
    const Poly g = f.monic();
    const Poly x = Poly::x(f.field());
    const std::uint64_t q = f.field()->order();
    std::vector<Poly> frob;  // frob[i] = x^{q^i} mod g
    frob.push_back(x % g);
    for (int i = 1; i <= n; ++i) frob.push_back(pow_mod(frob.back(), q, g));
    if (!(frob[n] - x % g).is_zero()) return false;
    for (unsigned r : prime_divisors(static_cast<unsigned>(n))) {
        if (!gcd(frob[n / r] - x, g).is_one()) return false;
    }
    return true;
}

std::vector<std::pair<Poly, unsigned>> factor(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("factoring the zero polynomial");
    std::vector<std::pair<Poly, unsigned>> out;
    if (f.degree() == 0) return out;
    std::mt19937_64 rng(0x5eed5eedULL);
    for (auto& [sf, mult] : square_free(f.monic())) {
        for (auto& [g, d] : distinct_degree(sf)) {
            std::vector<Poly> parts;
            equal_degree(g, d, rng, parts);
            for (auto& p : parts) out.emplace_back(p, mult);
        }
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    // merge equal factors coming from different square-free layers
    std::vector<std::pair<Poly, unsigned>> merged;
    for (auto& e : out) {
        if (!merged.empty() && merged.back().first == e.first)
            merged.back().second += e.second;
        else
            merged.push_back(e);
    }
    return merged;
}

std::vector<Elem> roots(const Poly& f) {
    if (f.is_zero()) throw std::domain_error("roots of the zero polynomial");
    std::vector<Elem> out;
    if (f.degree() < 1) return out;
    const Poly x = Poly::x(f.field());
    Poly g = f.monic();
    Poly split = gcd(pow_mod(x, static_cast<std::uint64_t>(f.field()->order()), g) - x, g);
    if (split.degree() < 1) return out;
    std::mt19937_64 rng(0x5eed5eedULL);
    std::vector<Poly> lin;
    equal_degree(split, 1, rng, lin);
    for (auto& l : lin) out.push_back(f.field()->neg(l[0]));
    std::sort(out.begin(), out.end());
    return out;
}

Poly monic_from_index(const FieldPtr& field, unsigned degree, std::uint64_t index) {
    std::vector<Elem> c(degree + 1, 0);
    const std::uint64_t q = field->order();
    for (unsigned i = 0; i < degree; ++i) {
        c[i] = static_cast<Elem>(index % q);
        index /= q;
    }
    c[degree] = 1;
    return Poly(field, std::move(c));
}

Poly find_irreducible(const FieldPtr& field, unsigned k) {
    if (k < 1) throw std::invalid_argument("irreducible polynomial degree must be >= 1");
    if (k == 1) return Poly::x(field);
    std::uint64_t total = 1;
    for (unsigned i = 0; i < k; ++i) total *= field->order();
    for (std::uint64_t idx = 0; idx < total; ++idx) {
        if (idx % field->order() == 0) continue;  // divisible by x
        Poly f = monic_from_index(field, k, idx);
        if (is_irreducible(f)) return f;
    }
    throw std::logic_error("no irreducible polynomial found");
}

namespace {
std::mutex g_cache_mutex;
std::map<std::pair<std::uint32_t, unsigned>, FieldPtr> g_absolute_cache;
std::map<std::pair<const Field*, unsigned>, FieldPtr> g_extension_cache;
}  // namespace

FieldPtr field_create(std::uint32_t p, unsigned m) {
    if (!is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (m < 1) throw std::invalid_argument("extension degree must be >= 1");
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_absolute_cache.find({p, m});
        if (it != g_absolute_cache.end()) return it->second;
    }
    FieldPtr prime;
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_absolute_cache.find({p, 1});
        if (it != g_absolute_cache.end()) prime = it->second;
    }
    if (!prime) prime = Field::prime(p);
    FieldPtr f = m == 1 ? prime : Field::extension(prime, find_irreducible(prime, m).coeffs(), false);
    std::lock_guard lock(g_cache_mutex);
    g_absolute_cache.emplace(std::make_pair(p, 1u), prime);
    return g_absolute_cache.emplace(std::make_pair(p, m), f).first->second;
}

FieldPtr extension_of_degree(const FieldPtr& base, unsigned k) {
    if (k < 1) throw std::invalid_argument("extension degree must be >= 1");
    if (k == 1) return base;
    {
        std::lock_guard lock(g_cache_mutex);
        auto it = g_extension_cache.find({base.get(), k});
        if (it != g_extension_cache.end()) return it->second;
    }
    FieldPtr ext = Field::extension(base, find_irreducible(base, k).coeffs(), false);
    std::lock_guard lock(g_cache_mutex);
    return g_extension_cache.emplace(std::make_pair(base.get(), k), ext).first->second;
}

unsigned degree_over(const Field& ext, std::uint32_t base_order, Elem a) {
    Elem cur = a;
    for (unsigned j = 1;; ++j) {
        cur = ext.pow(cur, base_order);
        if (cur == a) return j;
    }
}

}  // namespace rrmul::ff
