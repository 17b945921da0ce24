#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "abacus.hpp"
#include "bounce.hpp"
#include "dyck.hpp"
#include "extremal.hpp"
#include "fibonacci.hpp"
#include "numeric.hpp"
#include "partition.hpp"
#include "qt_polynomial.hpp"
#include "twin_odd.hpp"

namespace corefib {

using Json = nlohmann::json;

inline Json to_json(const Partition& p) { return Json(p.parts()); }

inline Partition partition_from_json(const Json& j) {
    return Partition(j.get<std::vector<long long>>());
}

inline Json to_json(const BetaSet& beta) {
    return Json(std::vector<long long>(beta.begin(), beta.end()));
}

inline BetaSet beta_from_json(const Json& j) {
    const auto v = j.get<std::vector<long long>>();
    return BetaSet(v.begin(), v.end());
}

inline Json to_json(const AbacusVector& d) { return Json(d.entries()); }

inline AbacusVector abacus_from_json(const Json& j) {
    return AbacusVector(j.get<std::vector<long long>>());
}

inline Json to_json(const DyckPath& p) {
    return Json{{"a", p.a()},
                {"b", p.b()},
                {"east_heights", p.east_heights()},
                {"steps", p.steps()}};
}

inline DyckPath path_from_steps(const std::string& word) {
    std::vector<long long> e;
    long long y = 0;
    for (char ch : word) {
        if (ch == 'N')
            ++y;
        else if (ch == 'E')
            e.push_back(y);
        else
            throw invalid_input_error("path_from_steps: steps must be over {N, E}");
    }
    const long long a = static_cast<long long>(e.size());
    return DyckPath(a, y, std::move(e));
}

// accepts the steps string, a bare east_heights array (the last height is b),
// or the full object form
inline DyckPath path_from_json(const Json& j) {
    if (j.is_string()) return path_from_steps(j.get<std::string>());
    if (j.is_array()) {
        auto e = j.get<std::vector<long long>>();
        if (e.empty()) throw invalid_input_error("path_from_json: empty east_heights");
        const long long a = static_cast<long long>(e.size());
        const long long b = e.back();
        return DyckPath(a, b, std::move(e));
    }
    if (j.is_object()) {
        auto e = j.at("east_heights").get<std::vector<long long>>();
        return DyckPath(j.at("a").get<long long>(), j.at("b").get<long long>(), std::move(e));
    }
    throw invalid_input_error("path_from_json: expected string, array, or object");
}

inline Json to_json(const QtPolynomial& p) {
    Json arr = Json::array();
    for (const auto& [e, c] : p.terms())
        arr.push_back(Json{{"q", e.first}, {"t", e.second}, {"c", c.str()}});
    return arr;
}

inline QtPolynomial poly_from_json(const Json& j) {
    QtPolynomial p;
    for (const auto& term : j)
        p.add_term(term.at("q").get<long long>(), term.at("t").get<long long>(),
                   BigInt(term.at("c").get<std::string>()));
    return p;
}

inline Json to_json(const BounceRecord& r) {
    return Json{{"v", r.v},
                {"w", r.w},
                {"bounce_rows", std::vector<long long>(r.bounce_rows.begin(), r.bounce_rows.end())},
                {"bounce", r.bounce}};
}

inline BounceRecord bounce_from_json(const Json& j) {
    BounceRecord r;
    r.v = j.at("v").get<std::vector<long long>>();
    r.w = j.at("w").get<std::vector<long long>>();
    const auto rows = j.at("bounce_rows").get<std::vector<long long>>();
    r.bounce_rows.insert(rows.begin(), rows.end());
    r.bounce = j.at("bounce").get<long long>();
    return r;
}

inline Json to_json(const GapDecomposition& gd) { return Json{{"n", gd.n}, {"g", gd.g}}; }

inline Json to_json(const MaxSizeReport& r) {
    Json maxi = Json::array();
    for (const auto& m : r.maximizers) maxi.push_back(to_json(m));
    return Json{{"max_size", r.max_size},
                {"num_maximizers", r.num_maximizers},
                {"maximizers", maxi}};
}

inline Json to_json(const TotalAverage& t) {
    return Json{{"total", t.total.str()}, {"average", rational_to_string(t.average)}};
}

inline Json to_json(const CSymPath& z) {
    return Json{{"k", z.k},
                {"heights", z.heights},
                {"c", to_json(z.c_set)},
                {"b", to_json(z.b_set)},
                {"a_transpose", to_json(z.at_set)},
                {"c_transpose", to_json(z.ct_set)},
                {"i", z.i_index},
                {"j", z.j_index}};
}

} // namespace corefib
