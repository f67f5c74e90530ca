#include "rrmul/curves/json.hpp"

#include <stdexcept>

namespace rrmul::curves {

Json curve_to_json(const Curve& C) {
    Json j;
    j["kind"] = C.is_elliptic() ? "elliptic" : "projective_line";
    j["field"] = ff::field_to_json(*C.field());
    if (C.is_elliptic()) {
        Json a = Json::array();
        for (Elem c : C.coefficients()) a.push_back(ff::elem_to_json(*C.field(), c));
        j["a"] = a;
    }
    return j;
}

CurvePtr curve_from_json(const Json& j) {
    FieldPtr F = ff::field_from_json(j.at("field"));
    const auto kind = j.at("kind").get<std::string>();
    if (kind == "projective_line") return Curve::projective_line(F);
    if (kind != "elliptic") throw std::invalid_argument("unknown curve kind '" + kind + "'");
    const auto& a = j.at("a");
    if (!a.is_array() || a.size() != 5) throw std::invalid_argument("elliptic curve needs five coefficients");
    std::array<Elem, 5> c{};
    for (std::size_t i = 0; i < 5; ++i) c[i] = ff::elem_from_json(*F, a[i]);
    return Curve::elliptic(F, c);
}

Json point_to_json(const Curve& C, const ClosedPoint& P) {
    Json j;
    j["degree"] = P.infinite ? 1u : P.degree;
    if (P.infinite) {
        j["infinity"] = true;
        return j;
    }
    if (!C.is_elliptic()) {
        j["poly"] = ff::poly_to_json(P.pi);
        return j;
    }
    FieldPtr L = C.residue_field(P.degree);
    j["x"] = ff::elem_to_json(*L, P.x);
    j["y"] = ff::elem_to_json(*L, P.y);
    return j;
}

ClosedPoint point_from_json(const Curve& C, const Json& j) {
    if (j.value("infinity", false)) return C.infinity();
    if (!C.is_elliptic()) {
        ClosedPoint P = C.line_point(ff::poly_from_json(C.field(), j.at("poly")));
        if (j.contains("degree") && j.at("degree").get<unsigned>() != P.degree)
            throw std::invalid_argument("point degree does not match its polynomial");
        return P;
    }
    const unsigned k = j.at("degree").get<unsigned>();
    if (k < 1) throw std::invalid_argument("point degree must be >= 1");
    FieldPtr L = C.residue_field(k);
    ClosedPoint P = C.closed_point(L, GeomPoint{false, ff::elem_from_json(*L, j.at("x")), ff::elem_from_json(*L, j.at("y"))});
    if (P.degree != k) throw std::invalid_argument("point coordinates generate a smaller field than its degree");
    return P;
}

Json divisor_to_json(const Curve& C, const Divisor& D) {
    Json out = Json::array();
    for (const auto& [P, m] : D.terms()) {
        Json t;
        t["point"] = point_to_json(C, P);
        t["mult"] = m;
        out.push_back(t);
    }
    return out;
}

Divisor divisor_from_json(const Curve& C, const Json& j) {
    if (!j.is_array()) throw std::invalid_argument("divisor must be a list of terms");
    Divisor D;
    for (const auto& t : j) D.add(point_from_json(C, t.at("point")), t.at("mult").get<long>());
    return D;
}

Json function_to_json(const Function& f) {
    Json j;
    j["u"] = ff::poly_to_json(f.u);
    j["v"] = ff::poly_to_json(f.v);
    j["d"] = ff::poly_to_json(f.d);
    return j;
}

Function function_from_json(const Curve& C, const Json& j) {
    const FieldPtr& F = C.field();
    return make_function(C, ff::poly_from_json(F, j.at("u")), ff::poly_from_json(F, j.at("v")),
                         ff::poly_from_json(F, j.at("d")));
}

}  // namespace rrmul::curves
