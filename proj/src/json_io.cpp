#include "qortho/json_io.hpp"

#include "qortho/text.hpp"

namespace qortho {

nlohmann::ordered_json poly_record(const std::string& family_id, int n, const Poly& p) {
    nlohmann::ordered_json rec;
    rec["family"] = family_id;
    rec["n"] = n;
    nlohmann::ordered_json terms = nlohmann::ordered_json::array();
    for (const auto& [m, c] : p.terms()) {
        nlohmann::ordered_json t;
        t["x"] = m.x;
        t["s"] = m.s;
        t["coeff"] = render_scalar(c);
        terms.push_back(std::move(t));
    }
    rec["terms"] = std::move(terms);
    rec["text"] = render_poly(p);
    return rec;
}

Poly poly_from_record(const nlohmann::ordered_json& record) {
    Poly p;
    for (const auto& t : record.at("terms"))
        p += Poly::monomial(parse_scalar(t.at("coeff").get<std::string>()), t.at("x").get<int>(),
                            t.at("s").get<int>());
    return p;
}

}  // namespace qortho
