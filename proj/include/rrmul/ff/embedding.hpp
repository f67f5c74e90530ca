#pragma once

#include <unordered_map>

#include "rrmul/ff/field.hpp"

namespace rrmul::ff {

/// Embedding of extension_of_degree(base, d) into extension_of_degree(base, k)
/// for d | k, sending the generating root to the smallest root of its modulus.
class Embedding {
public:
    Embedding(FieldPtr small, FieldPtr big);

    const FieldPtr& small() const { return small_; }
    const FieldPtr& big() const { return big_; }
    Elem forward(Elem a) const { return image_[a]; }
    /// Throws std::domain_error when `b` is not in the image.
    Elem pull_back(Elem b) const;

private:
    FieldPtr small_, big_;
    std::vector<Elem> image_;
    std::unordered_map<Elem, Elem> preimage_;
};

/// Cached embedding of L_d into L_k over `base` (both from extension_of_degree).
const Embedding& subfield_embedding(const FieldPtr& base, unsigned d, unsigned k);

}  // namespace rrmul::ff
