#include "qgen/table_io.hpp"

#include <sstream>

#include <json.hpp>

namespace qgen {

std::string table_to_json(const GenocchiTable& table) {
    nlohmann::ordered_json j;
    j["q"] = to_string(table.ctx.q());
    j["alpha"] = table.alpha;
    j["N"] = table.order;
    nlohmann::ordered_json polys = nlohmann::ordered_json::array();
    for (const auto& p : table.polys) polys.push_back(poly_coeff_strings(p));
    j["polys"] = std::move(polys);
    return j.dump(2) + "\n";
}

GenocchiTable table_from_json(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::exception& e) {
        throw DomainError(std::string("invalid table JSON: ") + e.what());
    }
    if (!j.contains("q") || !j.contains("alpha") || !j.contains("N") || !j.contains("polys")) {
        throw DomainError("invalid table JSON: missing field");
    }
    GenocchiTable table{QContext(rational_from_string(j.at("q").get<std::string>())),
                        j.at("alpha").get<unsigned>(), j.at("N").get<unsigned>(), {}};
    for (const auto& coeffs : j.at("polys")) {
        std::vector<Rational> c;
        c.reserve(coeffs.size());
        for (const auto& s : coeffs) c.push_back(rational_from_string(s.get<std::string>()));
        table.polys.push_back(QPolynomial::from_coeffs(std::move(c)));
    }
    if (table.polys.size() != static_cast<std::size_t>(table.order) + 1) {
        throw DomainError("invalid table JSON: polys length does not match N");
    }
    return table;
}

std::string table_to_csv(const GenocchiTable& table, const std::optional<Rational>& eval_at) {
    std::ostringstream os;
    for (unsigned n = 0; n <= table.order; ++n) {
        os << n;
        if (eval_at) os << ',' << to_string(poly_eval(table.poly(n), *eval_at));
        for (const auto& c : table.poly(n).coeffs()) os << ',' << to_string(c);
        if (table.poly(n).is_zero()) os << ",0";
        os << '\n';
    }
    return os.str();
}

}  // namespace qgen
