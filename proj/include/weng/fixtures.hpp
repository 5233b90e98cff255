#pragma once
// Loading the tabulated chain decompositions and c_p values shipped in data/.

#include "grading.hpp"

#include <json.hpp>

#include <fstream>

namespace weng {

struct ChainFixture {
    std::string table; // type the table is printed under (dual system)
    RootSystemSpec spec;
    int p = 0;
    std::vector<std::vector<std::string>> chains; // top-down digit strings
};

inline nlohmann::json load_json(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw InvalidSpec("cannot open fixture " + path);
    return nlohmann::json::parse(in);
}

inline std::vector<ChainFixture> load_chain_fixtures(const std::string& path) {
    auto j = load_json(path);
    if (j.value("format", "") != "weng-chains") throw InvalidSpec(path + " is not a chain fixture");
    std::vector<ChainFixture> out;
    for (const auto& c : j.at("cases")) {
        ChainFixture f;
        f.table = c.at("table");
        f.spec = {parse_series(c.at("series")), c.at("rank")};
        f.p = c.at("p");
        f.chains = c.at("chains").get<std::vector<std::vector<std::string>>>();
        out.push_back(std::move(f));
    }
    return out;
}

struct CpFixture {
    RootSystemSpec spec;
    std::vector<int> c_p;
};

inline std::vector<CpFixture> load_cp_fixtures(const std::string& path) {
    auto j = load_json(path);
    if (j.value("format", "") != "weng-cp") throw InvalidSpec(path + " is not a c_p fixture");
    std::vector<CpFixture> out;
    for (const auto& c : j.at("cases"))
        out.push_back({{parse_series(c.at("series")), c.at("rank")}, c.at("c_p").get<std::vector<int>>()});
    return out;
}

// chains as top-down digit strings
inline std::vector<std::vector<std::string>> chains_as_digits(const RootSystem& rs, const ChainDecomposition& D) {
    std::vector<std::vector<std::string>> out;
    for (const auto& ch : D.chains) {
        std::vector<std::string> s;
        for (auto it = ch.rbegin(); it != ch.rend(); ++it) s.push_back(digits(rs.coroots[*it]));
        out.push_back(s);
    }
    return out;
}

// Set-of-chains comparison; empty string on match, else both sides listed.
inline std::string compare_chains(const std::vector<std::vector<std::string>>& got,
                                  const std::vector<std::vector<std::string>>& want) {
    std::set<std::vector<std::string>> a(got.begin(), got.end()), b(want.begin(), want.end());
    if (a == b && got.size() == want.size()) return {};
    auto show = [](const std::vector<std::vector<std::string>>& cs) {
        std::string s;
        for (const auto& c : cs) {
            s += "  ";
            for (const auto& x : c) s += x + " ";
            s += "\n";
        }
        return s;
    };
    return "computed:\n" + show(got) + "expected:\n" + show(want);
}

#ifdef WENG_DATA_DIR
inline std::string data_path(const std::string& rel) { return std::string(WENG_DATA_DIR) + "/" + rel; }
#endif

} // namespace weng
