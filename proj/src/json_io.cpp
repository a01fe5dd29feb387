#include "klm/json_io.hpp"

namespace klm {

json int_to_json(const mpz_class& v) {
    if (!v.fits_slong_p())
        throw ValidationError("integer " + v.get_str() + " does not fit in a JSON number");
    return json(static_cast<std::int64_t>(v.get_si()));
}

mpz_class int_from_json(const json& j) {
    if (!j.is_number_integer())
        throw ValidationError("expected an integer, got " + j.dump());
    return mpz_class(static_cast<long>(j.get<std::int64_t>()));
}

json poly_to_json(const IntPoly& p) {
    if (p.is_zero()) return json::array({0});
    if (p.low() >= 0) {
        json arr = json::array();
        for (long e = 0; e <= p.degree(); ++e) arr.push_back(int_to_json(p.coeff(e)));
        return arr;
    }
    json coeffs = json::array();
    for (const mpz_class& c : p.coeffs()) coeffs.push_back(int_to_json(c));
    return json{{"low", p.low()}, {"coeffs", coeffs}};
}

IntPoly poly_from_json(const json& j) {
    long low = 0;
    const json* arr = &j;
    if (j.is_object()) {
        if (!j.contains("low") || !j.contains("coeffs") || !j["low"].is_number_integer())
            throw ValidationError("polynomial object needs integer \"low\" and \"coeffs\"");
        low = j["low"].get<long>();
        arr = &j["coeffs"];
    }
    if (!arr->is_array())
        throw ValidationError("polynomial coefficients must be an array");
    std::vector<mpz_class> coeffs;
    for (const auto& c : *arr) coeffs.push_back(int_from_json(c));
    return IntPoly::from_coeffs(low, std::move(coeffs));
}

Matroid matroid_from_json(const json& j, int cap) {
    if (!j.is_object() || !j.contains("n") || !j.contains("flats"))
        throw ValidationError("matroid JSON needs \"n\" and \"flats\"");
    if (!j["n"].is_number_integer())
        throw ValidationError("\"n\" must be an integer");
    int n = j["n"].get<int>();
    if (n < 0 || n > kMaxGround)
        throw ValidationError("\"n\" out of range: " + std::to_string(n));
    if (!j["flats"].is_array())
        throw ValidationError("\"flats\" must be an array of element lists");
    std::vector<FlatMask> flats;
    for (const auto& fj : j["flats"]) {
        if (!fj.is_array())
            throw ValidationError("each flat must be an array of elements");
        FlatMask m = 0;
        for (const auto& ej : fj) {
            if (!ej.is_number_integer())
                throw ValidationError("flat elements must be integers");
            int e = ej.get<int>();
            if (e < 0 || e >= n)
                throw ValidationError("flat element out of range: " + std::to_string(e));
            if (m & bit(e))
                throw ValidationError("repeated element " + std::to_string(e) + " in a flat");
            m |= bit(e);
        }
        flats.push_back(m);
    }
    return Matroid::from_flats(n, flats, cap, false);
}

Graph graph_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        throw ValidationError("graph JSON needs \"vertices\" and \"edges\"");
    if (!j["vertices"].is_number_integer())
        throw ValidationError("\"vertices\" must be an integer");
    Graph g;
    g.vertices = j["vertices"].get<int>();
    if (!j["edges"].is_array())
        throw ValidationError("\"edges\" must be an array of pairs");
    for (const auto& ej : j["edges"]) {
        if (!ej.is_array() || ej.size() != 2 || !ej[0].is_number_integer() ||
            !ej[1].is_number_integer())
            throw ValidationError("each edge must be a pair of integers");
        g.edges.emplace_back(ej[0].get<int>(), ej[1].get<int>());
    }
    check_graph(g);
    return g;
}

json helement_to_json(const HElement& a) {
    const auto& labels = a.matroid->labels();
    json out = json::array();
    for (const auto& [f, p] : a.coords) {
        json flat = json::array();
        for (int i = 0; i < a.matroid->ground_size(); ++i)
            if (f & bit(i)) flat.push_back(labels[static_cast<size_t>(i)]);
        out.push_back(json{{"flat", flat}, {"poly", poly_to_json(p)}});
    }
    return out;
}

json deletion_report_to_json(const DeletionReport& r) {
    json out = json::array();
    for (const auto& c : r.checks) {
        if (c.status == DeletionCheck::Status::skipped_coloop) {
            out.push_back(json{{"element", c.label}, {"status", "skipped-coloop"}});
            continue;
        }
        bool kl_ok = c.kl_lhs == c.kl_rhs;
        bool z_ok = c.z_lhs == c.z_rhs;
        out.push_back(json{{"element", c.label},
                           {"check", "kl"},
                           {"status", kl_ok ? "pass" : "fail"},
                           {"lhs", poly_to_json(c.kl_lhs)},
                           {"rhs", poly_to_json(c.kl_rhs)}});
        out.push_back(json{{"element", c.label},
                           {"check", "z"},
                           {"status", z_ok ? "pass" : "fail"},
                           {"lhs", poly_to_json(c.z_lhs)},
                           {"rhs", poly_to_json(c.z_rhs)}});
    }
    return out;
}

} // namespace klm
