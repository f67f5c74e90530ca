#include "rrmul/ff/embedding.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <stdexcept>

#include "rrmul/ff/poly.hpp"

namespace rrmul::ff {

Embedding::Embedding(FieldPtr small, FieldPtr big) : small_(std::move(small)), big_(std::move(big)) {
    const Field& S = *small_;
    const Field& B = *big_;
    image_.resize(S.order());
    if (S.same_as(B)) {
        for (Elem a = 0; a < S.order(); ++a) image_[a] = a;
    } else if (S.is_prime_field() || (B.base() && S.same_as(*B.base()))) {
        // base elements keep their index
        for (Elem a = 0; a < S.order(); ++a) image_[a] = a;
    } else {
        if (!S.base() || !B.base() || !S.base()->same_as(*B.base()) || B.degree() % S.degree() != 0)
            throw std::invalid_argument("no embedding between these fields");
        Poly mod = Poly(S.base(), S.modulus()).lift(big_);
        auto rts = roots(mod);
        if (rts.empty()) throw std::logic_error("subfield modulus has no root in the larger field");
        const Elem beta = rts.front();
        const std::uint32_t q = S.base_order();
        for (Elem a = 0; a < S.order(); ++a) {
            Elem acc = 0;
            Elem rest = a;
            std::vector<Elem> c;
            for (unsigned i = 0; i < S.degree(); ++i) {
                c.push_back(rest % q);
                rest /= q;
            }
            for (std::size_t i = c.size(); i-- > 0;) acc = B.add(B.mul(acc, beta), c[i]);
            image_[a] = acc;
        }
    }
    for (Elem a = 0; a < S.order(); ++a) preimage_.emplace(image_[a], a);
}

Elem Embedding::pull_back(Elem b) const {
    auto it = preimage_.find(b);
    if (it == preimage_.end()) throw std::domain_error("element is not in the subfield");
    return it->second;
}

const Embedding& subfield_embedding(const FieldPtr& base, unsigned d, unsigned k) {
    static std::mutex mu;
    static std::map<std::tuple<const Field*, unsigned, unsigned>, std::unique_ptr<Embedding>> cache;
    std::lock_guard lock(mu);
    auto key = std::make_tuple(base.get(), d, k);
    auto it = cache.find(key);
    if (it != cache.end()) return *it->second;
    auto e = std::make_unique<Embedding>(extension_of_degree(base, d), extension_of_degree(base, k));
    return *cache.emplace(key, std::move(e)).first->second;
}

}  // namespace rrmul::ff
