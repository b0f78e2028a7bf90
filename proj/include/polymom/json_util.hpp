#pragma once
#include <nlohmann/json.hpp>
#include "polymom/rat.hpp"

namespace polymom {

// Insertion-ordered JSON everywhere: emission order is controlled by the
// producers, which keeps CLI output byte-stable.
using json = nlohmann::ordered_json;

inline Rat rat_from_json(const json& v) {
    if (!v.is_array() || v.size() != 2)
        throw validation_error("rational must be a [numerator, denominator] pair");
    auto part = [](const json& x) -> Int {
        if (x.is_number_integer()) return Int(static_cast<long>(x.get<std::int64_t>()));
        if (x.is_string()) return Int(x.get<std::string>());
        throw validation_error("rational parts must be integers or integer strings");
    };
    return rat_make(part(v[0]), part(v[1]));
}

inline json rat_to_json(const Rat& q) {
    auto part = [](const Int& z) -> json {
        if (z.fits_slong_p()) return json(static_cast<std::int64_t>(z.get_si()));
        return json(z.get_str());
    };
    json out = json::array();
    out.push_back(part(q.get_num()));
    out.push_back(part(q.get_den()));
    return out;
}

inline json parse_json_text(const std::string& text, const char* what) {
    try {
        return json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw validation_error(std::string(what) + " JSON parse error: " + e.what());
    }
}

} // namespace polymom
