#pragma once
// JSON documents for root systems and the frak W_p data.

#include "weyl.hpp"

#include <json.hpp>

namespace weng {

// roots and coroots as digit strings a_1...a_r, positives only; the coroot
// list is index-aligned with the root list
inline nlohmann::json to_json(const RootSystem& rs) {
    using nlohmann::json;
    json roots = json::array(), coroots = json::array();
    for (int i = 0; i < rs.npos; ++i) {
        roots.push_back(digits(rs.roots[i]));
        coroots.push_back(digits(rs.coroots[i]));
    }
    return {{"format", "weng-root-system"},
            {"version", 1},
            {"series", std::string(1, series_char(rs.spec.series))},
            {"rank", rs.r},
            {"cartan", rs.cartan},
            {"positive_roots", roots},
            {"positive_coroots", coroots},
            {"highest_root", digits(rs.highest_root_coeffs)},
            {"highest_coroot", digits(rs.highest_coroot_coeffs)}};
}

inline nlohmann::json to_json(const ParabolicData& pd) {
    std::map<int, int> hist;
    for (int w : pd.frak_Wp) ++hist[pd.lp.at(w)];
    nlohmann::json h = nlohmann::json::array();
    for (const auto& [l, n] : hist) h.push_back({{"l_p", l}, {"count", n}});
    return {{"p", pd.p},
            {"frak_Wp", pd.frak_Wp.size()},
            {"plus", pd.plus.size()},
            {"zero", pd.zero.size()},
            {"minus", pd.minus.size()},
            {"ddagger", pd.ddagger.size()},
            {"l_p_histogram", h}};
}

} // namespace weng
