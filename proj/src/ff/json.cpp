#include "rrmul/ff/json.hpp"

#include <stdexcept>

namespace rrmul::ff {

Json field_to_json(const Field& f) {
    Json j;
    if (f.is_prime_field() || f.base()->is_prime_field()) {
        j["p"] = f.characteristic();
        j["m"] = f.absolute_degree();
        j["modulus"] = f.modulus();
        return j;
    }
    j["base"] = field_to_json(*f.base());
    j["degree"] = f.degree();
    Json mod = Json::array();
    for (Elem c : f.modulus()) mod.push_back(elem_to_json(*f.base(), c));
    j["modulus"] = mod;
    return j;
}

FieldPtr field_from_json(const Json& j) {
    if (!j.is_object()) throw std::invalid_argument("field must be a JSON object");
    if (j.contains("base")) {
        FieldPtr base = field_from_json(j.at("base"));
        const unsigned k = j.at("degree").get<unsigned>();
        std::vector<Elem> mod;
        for (const auto& c : j.at("modulus")) mod.push_back(elem_from_json(*base, c));
        if (mod.size() != k + 1) throw std::invalid_argument("modulus degree does not match field degree");
        FieldPtr canonical = extension_of_degree(base, k);
        if (canonical->modulus() == mod) return canonical;
        return Field::extension(base, mod, true);
    }
    const auto p = j.at("p").get<std::uint32_t>();
    const auto m = j.at("m").get<unsigned>();
    auto mod = j.at("modulus").get<std::vector<Elem>>();
    FieldPtr canonical = field_create(p, m);
    if (canonical->modulus() == mod) return canonical;
    if (m == 1) throw std::invalid_argument("prime field modulus must be [0, 1]");
    if (mod.size() != m + 1) throw std::invalid_argument("modulus degree does not match field degree");
    return Field::extension(field_create(p, 1), mod, true);
}

Json elem_to_json(const Field& f, Elem a) {
    if (f.is_prime_field()) return a;
    Json out = Json::array();
    for (Elem c : f.coeffs(a)) out.push_back(elem_to_json(*f.base(), c));
    return out;
}

Elem elem_from_json(const Field& f, const Json& j) {
    if (f.is_prime_field()) {
        if (!j.is_number_integer()) throw std::invalid_argument("prime field element must be an integer");
        auto v = j.get<std::int64_t>();
        if (v < 0 || v >= static_cast<std::int64_t>(f.order())) throw std::invalid_argument("element out of range");
        return static_cast<Elem>(v);
    }
    if (!j.is_array() || j.size() > f.degree()) throw std::invalid_argument("malformed extension element");
    std::vector<Elem> c;
    for (const auto& x : j) c.push_back(elem_from_json(*f.base(), x));
    return f.from_coeffs(c);
}

Json poly_to_json(const Poly& p) {
    Json out = Json::array();
    for (Elem c : p.coeffs()) out.push_back(elem_to_json(*p.field(), c));
    return out;
}

Poly poly_from_json(const FieldPtr& f, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("polynomial must be a coefficient list");
    std::vector<Elem> c;
    for (const auto& x : j) c.push_back(elem_from_json(*f, x));
    return Poly(f, std::move(c));
}

}  // namespace rrmul::ff
