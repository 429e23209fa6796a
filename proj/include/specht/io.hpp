#pragma once

#include <ostream>
#include <string>
#include <vector>

#include <json.hpp>

#include "hom_engine.hpp"
#include "partition.hpp"
#include "summands.hpp"

// JSON and CSV renderings of the report types.
namespace specht {

inline nlohmann::json combo_json(const GF2Combo& c) { return to_strings(c); }

inline nlohmann::json hom_space_json(const HomSpace& hs) {
    nlohmann::json basis = nlohmann::json::array();
    for (const auto& c : hs.basis)
        basis.push_back(combo_json(c));
    return {{"mu", to_string(hs.mu)},
            {"lambda", to_string(hs.lambda)},
            {"dim", hs.dim()},
            {"complete", hs.complete},
            {"basis", basis}};
}

inline std::string join_partitions(const std::vector<Partition>& ps, const char* sep) {
    std::string out;
    for (std::size_t i = 0; i < ps.size(); ++i)
        out += (i ? sep : "") + paren(ps[i]);
    return out;
}

inline nlohmann::json survey_json(const SurveyRecord& r) {
    nlohmann::json s = nlohmann::json::array();
    for (const auto& p : r.summands)
        s.push_back(paren(p));
    return {{"a", r.a},
            {"b", r.b},
            {"n", r.n},
            {"summands", s},
            {"corollary_flag", r.corollary_flag},
            {"corollary_case", r.corollary_case}};
}

// RFC 4180 quoting for fields holding separators or quotes
inline std::string csv_field(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos)
        return s;
    std::string out = "\"";
    for (char ch : s) {
        if (ch == '"')
            out += '"';
        out += ch;
    }
    return out + "\"";
}

inline void write_survey_csv(std::ostream& os, const std::vector<SurveyRecord>& rows) {
    os << "a,b,n,summands,corollary_flag,corollary_case\n";
    for (const auto& r : rows)
        os << r.a << ',' << r.b << ',' << r.n << ',' << csv_field(join_partitions(r.summands, ";")) << ','
           << (r.corollary_flag ? "true" : "false") << ',' << csv_field(r.corollary_case) << '\n';
}

}  // namespace specht
