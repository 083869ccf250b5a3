#include "qbeta/json_io.hpp"

namespace qbeta {

Json coeff_to_json(const Coeff& c) {
    if (c.is_rational()) return c.rational().str();
    Json j;
    j["m"] = c.cyclo().order();
    Json arr = Json::array();
    for (const auto& r : c.cyclo().coeffs()) arr.push_back(r.str());
    j["c"] = arr;
    return j;
}

Coeff coeff_from_json(const Json& j) {
    if (j.is_string()) return Coeff(Rational::parse(j.get<std::string>()));
    const auto m = j.at("m").get<unsigned long>();
    std::vector<Rational> coeffs;
    for (const auto& s : j.at("c")) coeffs.push_back(Rational::parse(s.get<std::string>()));
    return Coeff(CycloElement(m, std::move(coeffs)));
}

namespace {
Json poly_to_json(const Poly& p) {
    Json arr = Json::array();
    for (const auto& [m, c] : p.terms()) {
        Json t;
        t["e"] = {m.e[0], m.e[1], m.e[2], m.e[3]};
        t["c"] = coeff_to_json(c);
        arr.push_back(t);
    }
    return arr;
}

Poly poly_from_json(const Json& arr) {
    Poly p;
    for (const auto& t : arr) {
        Monomial m;
        const auto& e = t.at("e");
        for (std::size_t i = 0; i < 4; ++i) m.e[i] = e.at(i).get<std::uint32_t>();
        p.add_term(m, coeff_from_json(t.at("c")));
    }
    return p;
}
} // namespace

Json ratfunc_to_json(const RatFunc& f) {
    Json j;
    j["vars"] = {"q", "L", "X", "Y"};
    j["num"] = poly_to_json(f.num());
    j["den"] = poly_to_json(f.den());
    return j;
}

RatFunc ratfunc_from_json(const Json& j) {
    return RatFunc(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

} // namespace qbeta
