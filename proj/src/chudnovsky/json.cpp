#include "rrmul/chudnovsky/chudnovsky.hpp"

namespace rrmul::chudnovsky {

using curves::curve_from_json;
using curves::curve_to_json;
using curves::divisor_from_json;
using curves::divisor_to_json;
using curves::point_from_json;
using curves::point_to_json;

Json algorithm_to_json(const BilinearAlgorithm& alg) {
    const ff::Field& F = *alg.base;
    Json j;
    j["q"] = alg.q();
    j["k"] = alg.k;
    j["n"] = alg.n();
    j["base_field"] = ff::field_to_json(F);
    ff::Poly modulus = alg.k == 1 ? ff::Poly::x(alg.base) : ff::Poly(alg.base, alg.ext->modulus());
    j["field_modulus"] = ff::poly_to_json(modulus);
    Json phi = Json::array();
    for (std::size_t i = 0; i < alg.phi.rows(); ++i) {
        Json row = Json::array();
        for (std::size_t c = 0; c < alg.phi.cols(); ++c) row.push_back(ff::elem_to_json(F, alg.phi.at(i, c)));
        phi.push_back(std::move(row));
    }
    j["phi"] = std::move(phi);
    Json w = Json::array();
    for (Elem e : alg.w) {
        Json coeffs = Json::array();
        for (Elem c : coordinates(alg, e)) coeffs.push_back(ff::elem_to_json(F, c));
        w.push_back(std::move(coeffs));
    }
    j["w"] = std::move(w);
    j["symmetric"] = alg.symmetric;
    if (!alg.provenance) {
        j["provenance"] = nullptr;
        return j;
    }
    const Provenance& pv = *alg.provenance;
    Json p;
    p["route"] = pv.route;
    if (pv.curve) {
        const curves::Curve& C = *pv.curve;
        p["curve"] = curve_to_json(C);
        p["D"] = divisor_to_json(C, pv.D);
        p["Q"] = pv.Q ? point_to_json(C, *pv.Q) : Json(nullptr);
        Json G = Json::array();
        for (const auto& P : pv.G) G.push_back(point_to_json(C, P));
        p["G"] = std::move(G);
    } else {
        p["curve"] = nullptr;
    }
    j["provenance"] = std::move(p);
    return j;
}

BilinearAlgorithm algorithm_from_json(const Json& j) {
    BilinearAlgorithm alg;
    alg.base = ff::field_from_json(j.at("base_field"));
    const ff::Field& F = *alg.base;
    if (j.at("q").get<std::uint64_t>() != F.order()) throw std::invalid_argument("q does not match base_field");
    alg.k = j.at("k").get<unsigned>();
    if (alg.k < 1) throw std::invalid_argument("k must be >= 1");
    ff::Poly modulus = ff::poly_from_json(alg.base, j.at("field_modulus"));
    if (modulus.degree() != static_cast<int>(alg.k) || !modulus.is_monic())
        throw std::invalid_argument("field_modulus must be monic of degree k");
    if (alg.k == 1) {
        alg.ext = alg.base;
    } else {
        FieldPtr canonical = ff::extension_of_degree(alg.base, alg.k);
        alg.ext = ff::Poly(alg.base, canonical->modulus()) == modulus
                      ? canonical
                      : ff::Field::extension(alg.base, modulus.coeffs(), true);
    }
    const std::size_t n = j.at("n").get<std::size_t>();
    const Json& phi = j.at("phi");
    const Json& w = j.at("w");
    if (phi.size() != n || w.size() != n) throw std::invalid_argument("phi and w must have n entries");
    alg.phi = Matrix(alg.base, n, alg.k);
    for (std::size_t i = 0; i < n; ++i) {
        if (phi[i].size() != alg.k) throw std::invalid_argument("phi rows must have k entries");
        for (unsigned c = 0; c < alg.k; ++c) alg.phi.at(i, c) = ff::elem_from_json(F, phi[i][c]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        if (w[i].size() != alg.k) throw std::invalid_argument("w entries must have k coordinates");
        Elem e = 0;
        for (unsigned c = alg.k; c-- > 0;) e = e * F.order() + ff::elem_from_json(F, w[i][c]);
        alg.w.push_back(e);
    }
    alg.symmetric = j.value("symmetric", true);
    if (j.contains("provenance") && !j.at("provenance").is_null()) {
        const Json& p = j.at("provenance");
        Provenance pv;
        pv.route = p.at("route").get<std::string>();
        if (!p.at("curve").is_null()) {
            pv.curve = curve_from_json(p.at("curve"));
            const curves::Curve& C = *pv.curve;
            pv.D = divisor_from_json(C, p.at("D"));
            if (!p.at("Q").is_null()) pv.Q = point_from_json(C, p.at("Q"));
            for (const auto& P : p.at("G")) pv.G.push_back(point_from_json(C, P));
        }
        alg.provenance = std::move(pv);
    }
    return alg;
}

}  // namespace rrmul::chudnovsky
