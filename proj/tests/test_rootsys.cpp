#include <weng/rootsys.hpp>
#include <weng/serialize.hpp>
#include <weng/weyl.hpp>

#include <gtest/gtest.h>

using namespace weng;

namespace {

std::vector<RootSystemSpec> all_through_rank(int rmax) {
    std::vector<RootSystemSpec> out;
    for (char s : std::string("ABCDEFG"))
        for (int r = 1; r <= rmax; ++r) {
            RootSystemSpec sp{parse_series(std::string(1, s)), r};
            if (valid_spec(sp)) out.push_back(sp);
        }
    return out;
}

// h - 1 for the Coxeter number h
int highest_height(const RootSystemSpec& sp) {
    const int r = sp.rank;
    switch (sp.series) {
    case Series::A: return r;
    case Series::B:
    case Series::C: return 2 * r - 1;
    case Series::D: return 2 * r - 3;
    case Series::E: return r == 6 ? 11 : r == 7 ? 17 : 29;
    case Series::F: return 11;
    case Series::G: return 5;
    }
    return -1;
}

} // namespace

TEST(RootSystem, PositiveRootCounts) {
    for (const auto& sp : all_through_rank(8)) {
        auto rs = build_root_system(sp);
        EXPECT_EQ(rs.npos, classical_positive_count(sp)) << sp.name();
        EXPECT_EQ(rs.size(), 2 * rs.npos);
    }
}

TEST(RootSystem, HighestRootHeightIsCoxeterMinusOne) {
    for (const auto& sp : all_through_rank(8)) {
        auto rs = build_root_system(sp);
        EXPECT_EQ(height(rs.highest_root_coeffs), highest_height(sp)) << sp.name();
        // the dual system has the same Coxeter number
        EXPECT_EQ(height(rs.highest_coroot_coeffs), highest_height(sp)) << sp.name();
    }
}

TEST(RootSystem, SimpleRootsComeFirstAndHeightsAreOrdered) {
    for (const auto& sp : all_through_rank(8)) {
        auto rs = build_root_system(sp);
        for (int i = 0; i < rs.r; ++i) EXPECT_EQ(height_root(rs, i), 1);
        for (int i = 1; i < rs.npos; ++i) EXPECT_LE(height_root(rs, i - 1), height_root(rs, i));
        for (int i = 0; i < rs.npos; ++i) EXPECT_EQ(rs.find(rs.roots[i]), i);
    }
}

TEST(RootSystem, LabelingConventions) {
    auto g2 = build_root_system({Series::G, 2});
    EXPECT_EQ(g2.highest_root_coeffs, (IVec{3, 2}));   // alpha_1 short
    EXPECT_EQ(g2.highest_coroot_coeffs, (IVec{2, 3}));
    auto f4 = build_root_system({Series::F, 4});
    EXPECT_EQ(f4.highest_root_coeffs, (IVec{2, 4, 3, 2}));   // alpha_1, alpha_2 short
    EXPECT_EQ(f4.highest_coroot_coeffs, (IVec{2, 3, 4, 2}));
    auto b3 = build_root_system({Series::B, 3});
    EXPECT_EQ(b3.highest_root_coeffs, (IVec{1, 2, 2}));
    auto c3 = build_root_system({Series::C, 3});
    EXPECT_EQ(c3.highest_root_coeffs, (IVec{2, 2, 1}));
}

TEST(RootSystem, InvalidSpecsThrow) {
    EXPECT_THROW(require_valid({Series::A, 0}), InvalidSpec);
    EXPECT_THROW(require_valid({Series::C, 2}), InvalidSpec);
    EXPECT_THROW(require_valid({Series::D, 3}), InvalidSpec);
    EXPECT_THROW(require_valid({Series::E, 9}), InvalidSpec);
    EXPECT_THROW(require_valid({Series::F, 3}), InvalidSpec);
    EXPECT_THROW(parse_series("H"), InvalidSpec);
}

TEST(Weyl, OrdersAndLongestElement) {
    for (const auto& sp : all_through_rank(4)) {
        auto rs = build_root_system(sp);
        auto G = enumerate_weyl(rs);
        EXPECT_EQ(G.order(), classical_weyl_order(sp)) << sp.name();
        EXPECT_EQ(G.len[G.w0], rs.npos);
        EXPECT_EQ(static_cast<int>(inversion_set(G, G.w0).size()), rs.npos);
    }
}

TEST(Weyl, InversionSetSizeIsLength) {
    auto rs = build_root_system({Series::B, 3});
    auto G = enumerate_weyl(rs);
    for (int w = 0; w < static_cast<int>(G.order()); ++w)
        ASSERT_EQ(static_cast<int>(inversion_set(G, w).size()), G.len[w]);
}

TEST(Weyl, E8RespectsCap) {
    auto rs = build_root_system({Series::E, 8});
    EXPECT_THROW(enumerate_weyl(rs), CapExceeded);
}

// brute force over W in an independent script
TEST(Weyl, DistinguishedSetSizes) {
    struct Row {
        RootSystemSpec sp;
        std::vector<int> sizes;
    };
    const std::vector<Row> rows = {
        {{Series::A, 2}, {5, 5}},          {{Series::A, 3}, {12, 14, 12}},
        {{Series::A, 4}, {28, 37, 37, 28}}, {{Series::B, 2}, {6, 6}},
        {{Series::B, 3}, {16, 22, 18}},    {{Series::C, 3}, {16, 22, 18}},
        {{Series::D, 4}, {36, 62, 36, 36}}, {{Series::G, 2}, {8, 8}},
        {{Series::F, 4}, {78, 180, 180, 78}},
    };
    for (const auto& row : rows) {
        auto rs = build_root_system(row.sp);
        auto G = enumerate_weyl(rs);
        for (int p = 1; p <= rs.r; ++p) {
            auto pd = compute_frak_Wp(G, rs, p);
            EXPECT_EQ(static_cast<int>(pd.frak_Wp.size()), row.sizes[p - 1]) << row.sp.name() << " p=" << p;
            EXPECT_EQ(pd.plus.size() + pd.zero.size() + pd.minus.size(), pd.frak_Wp.size());
        }
    }
}

TEST(Weyl, LpHistogram) {
    auto rs = build_root_system({Series::B, 3});
    auto G = enumerate_weyl(rs);
    auto pd = compute_frak_Wp(G, rs, 2);
    std::map<int, int> hist;
    for (int w : pd.frak_Wp) ++hist[l_p(pd, w)];
    EXPECT_EQ(hist, (std::map<int, int>{{0, 4}, {1, 1}, {2, 3}, {3, 3}, {4, 3}, {5, 3}, {6, 1}, {7, 4}}));
}

TEST(Weyl, InvolutionStaysInDistinguishedSet) {
    auto rs = build_root_system({Series::G, 2});
    auto G = enumerate_weyl(rs);
    for (int p = 1; p <= 2; ++p) {
        auto pd = compute_frak_Wp(G, rs, p);
        for (int w : pd.frak_Wp) {
            int v = involution(G, pd, w);
            EXPECT_TRUE(pd.in_frak[v]);
            EXPECT_EQ(involution(G, pd, v), w);
        }
    }
}

TEST(Serialize, RootSystemDocument) {
    auto j = to_json(build_root_system({Series::G, 2}));
    EXPECT_EQ(j.at("cartan"), (std::vector<IVec>{{2, -3}, {-1, 2}}));
    EXPECT_EQ(j.at("positive_roots"), (std::vector<std::string>{"10", "01", "11", "21", "31", "32"}));
    EXPECT_EQ(j.at("highest_coroot"), "23");
}

TEST(Serialize, ParabolicHistogram) {
    auto rs = build_root_system({Series::B, 3});
    auto G = enumerate_weyl(rs);
    auto j = to_json(compute_frak_Wp(G, rs, 2));
    EXPECT_EQ(j.at("frak_Wp"), 22);
    EXPECT_EQ(j.at("ddagger"), 4);
    int total = 0;
    for (const auto& h : j.at("l_p_histogram")) total += h.at("count").get<int>();
    EXPECT_EQ(total, 22);
}
