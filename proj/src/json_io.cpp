#include "weylrec/json_io.hpp"

#include <stdexcept>

namespace weylrec {

nlohmann::json to_json(const Partition& p) {
    nlohmann::json j = nlohmann::json::array();
    for (int i = 0; i < p.length(); ++i) j.push_back(p.part(i));
    return j;
}

Partition partition_from_json(const nlohmann::json& j) {
    if (!j.is_array()) throw std::invalid_argument("partition_from_json: array expected");
    std::vector<int> parts;
    for (auto& x : j) parts.push_back(x.get<int>());
    return Partition(std::move(parts));
}

nlohmann::json to_json(const DominantWeight& w) {
    nlohmann::json c = nlohmann::json::array();
    for (int x : w.coords()) c.push_back(x);
    return {{"fundamental", std::move(c)}};
}

DominantWeight weight_from_json(const nlohmann::json& j) {
    std::vector<int> coords;
    for (auto& x : j.at("fundamental")) coords.push_back(x.get<int>());
    return DominantWeight(std::move(coords));
}

nlohmann::json to_json(const PolyQ& p) {
    nlohmann::json j = nlohmann::json::array();
    for (int k = 0; k <= p.degree(); ++k) j.push_back(rational_to_string(p.coeff(k)));
    return j;
}

PolyQ poly_from_json(const nlohmann::json& j) {
    std::vector<Rational> coeffs;
    for (auto& x : j) coeffs.push_back(rational_from_string(x.get<std::string>()));
    return PolyQ(std::move(coeffs));
}

nlohmann::json to_json(const RatFuncQ& f) {
    return {{"num", to_json(f.num())}, {"den", to_json(f.den())}};
}

RatFuncQ ratfunc_from_json(const nlohmann::json& j) {
    return RatFuncQ(poly_from_json(j.at("num")), poly_from_json(j.at("den")));
}

nlohmann::json to_json(const QSeries& s) {
    nlohmann::json coeffs = nlohmann::json::array();
    for (int k = 0; k <= s.order(); ++k) coeffs.push_back(rational_to_string(s.coeff(k)));
    return {{"order", s.order()}, {"coeffs", std::move(coeffs)}};
}

QSeries series_from_json(const nlohmann::json& j) {
    int order = j.at("order").get<int>();
    QSeries s(order);
    const auto& coeffs = j.at("coeffs");
    for (int k = 0; k <= order && k < static_cast<int>(coeffs.size()); ++k)
        s.set_coeff(k, rational_from_string(coeffs[static_cast<size_t>(k)].get<std::string>()));
    return s;
}

nlohmann::json coeff_to_json(const Rational& c) { return rational_to_string(c); }
nlohmann::json coeff_to_json(const RatFuncQ& c) { return to_json(c); }
nlohmann::json coeff_to_json(const QSeries& c) { return to_json(c); }

SymFunc<RatFuncQ> symfunc_ratfunc_from_json(const nlohmann::json& j) {
    SymFunc<RatFuncQ> f{j.at("rank").get<int>(), j.at("twist").get<int>(), {}};
    for (auto& t : j.at("terms"))
        f.terms.emplace(partition_from_json(t.at("partition")), ratfunc_from_json(t.at("coeff")));
    return f;
}

}  // namespace weylrec
