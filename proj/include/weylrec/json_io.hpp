#pragma once

#include <json.hpp>

#include "weylrec/partition.hpp"
#include "weylrec/poly.hpp"
#include "weylrec/ratfunc.hpp"
#include "weylrec/series.hpp"
#include "weylrec/symfunc.hpp"
#include "weylrec/weight.hpp"

namespace weylrec {

// Partitions serialize as integer arrays, weights as {"fundamental": [...]},
// rationals as "p/q" strings.

nlohmann::json to_json(const Partition& p);
Partition partition_from_json(const nlohmann::json& j);

nlohmann::json to_json(const DominantWeight& w);
DominantWeight weight_from_json(const nlohmann::json& j);

nlohmann::json to_json(const PolyQ& p);           // ["1","-1"] ascending powers
PolyQ poly_from_json(const nlohmann::json& j);

nlohmann::json to_json(const RatFuncQ& f);        // {"num": [...], "den": [...]}
RatFuncQ ratfunc_from_json(const nlohmann::json& j);

nlohmann::json to_json(const QSeries& s);         // {"order": N, "coeffs": [...]}
QSeries series_from_json(const nlohmann::json& j);

nlohmann::json coeff_to_json(const Rational& c);
nlohmann::json coeff_to_json(const RatFuncQ& c);
nlohmann::json coeff_to_json(const QSeries& c);

template <class R>
nlohmann::json to_json(const SymFunc<R>& f) {
    nlohmann::json terms = nlohmann::json::array();
    for (auto& [key, coeff] : f.terms) {
        nlohmann::json t;
        t["partition"] = to_json(key);
        t["coeff"] = coeff_to_json(coeff);
        terms.push_back(std::move(t));
    }
    return {{"rank", f.rank}, {"twist", f.twist}, {"terms", std::move(terms)}};
}

SymFunc<RatFuncQ> symfunc_ratfunc_from_json(const nlohmann::json& j);

}  // namespace weylrec
