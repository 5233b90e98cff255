#include <weng/fixtures.hpp>
#include <weng/grading.hpp>

#include <gtest/gtest.h>

using namespace weng;

namespace {

// the k >= 1 part of N; the rest follows from alpha -> -alpha
std::map<std::pair<int, int>, int> table(const GradingTables& T) {
    std::map<std::pair<int, int>, int> out;
    for (const auto& [kh, n] : T.N)
        if (kh.first >= 1) out[kh] = n;
    return out;
}

} // namespace

TEST(Grading, F4Constants) {
    auto rs = build_root_system({Series::F, 4});
    std::vector<int> c;
    for (int p = 1; p <= 4; ++p) c.push_back(build_grading(rs, p).c_p);
    EXPECT_EQ(c, (std::vector<int>{11, 7, 5, 8}));
}

TEST(Grading, CpFixture) {
    auto fx = load_cp_fixtures(data_path("fixtures/cp.json"));
    ASSERT_FALSE(fx.empty());
    for (const auto& f : fx) {
        auto rs = build_root_system(f.spec);
        ASSERT_EQ(static_cast<int>(f.c_p.size()), rs.r) << f.spec.name();
        for (int p = 1; p <= rs.r; ++p) {
            auto T = build_grading(rs, p);
            EXPECT_EQ(T.c_p, f.c_p[p - 1]) << f.spec.name() << " p=" << p;
            EXPECT_EQ(T.c_p, c_p_from_rho(rs, p)) << f.spec.name() << " p=" << p;
        }
    }
}

TEST(Grading, KpIsHighestCorootCoefficient) {
    auto g2 = build_root_system({Series::G, 2});
    EXPECT_EQ(build_grading(g2, 1).k_p, 2);
    EXPECT_EQ(build_grading(g2, 2).k_p, 3);
    auto e8 = build_root_system({Series::E, 8});
    for (int p = 1; p <= 8; ++p) EXPECT_EQ(build_grading(e8, p).k_p, e8.highest_coroot_coeffs[p - 1]);
}

// counted from the dual root system in an independent script
TEST(Grading, NTables) {
    auto g2 = build_root_system({Series::G, 2});
    EXPECT_EQ(table(build_grading(g2, 1)),
              (std::map<std::pair<int, int>, int>{{{1, 1}, 1}, {{1, 2}, 1}, {{1, 3}, 1}, {{1, 4}, 1}, {{2, 5}, 1}}));
    EXPECT_EQ(table(build_grading(g2, 2)),
              (std::map<std::pair<int, int>, int>{{{1, 1}, 1}, {{1, 2}, 1}, {{2, 3}, 1}, {{3, 4}, 1}, {{3, 5}, 1}}));
    auto b3 = build_root_system({Series::B, 3});
    EXPECT_EQ(table(build_grading(b3, 2)), (std::map<std::pair<int, int>, int>{
                                               {{1, 1}, 1}, {{1, 2}, 2}, {{1, 3}, 1}, {{2, 3}, 1}, {{2, 4}, 1}, {{2, 5}, 1}}));
}

TEST(Grading, MClosedFormMatchesBruteForce) {
    for (auto sp : {RootSystemSpec{Series::A, 3}, RootSystemSpec{Series::B, 3}, RootSystemSpec{Series::C, 3},
                    RootSystemSpec{Series::G, 2}}) {
        auto rs = build_root_system(sp);
        auto G = enumerate_weyl(rs);
        for (int p = 1; p <= rs.r; ++p) {
            auto T = build_grading(rs, p);
            auto pd = compute_frak_Wp(G, rs, p);
            for (int k = 1; k <= T.k_p; ++k)
                for (int h = 2; h <= height(rs.highest_coroot_coeffs) + 1; ++h)
                    EXPECT_EQ(M_p(T, k, h), M_p_bruteforce(T, G, pd, k, h)) << sp.name() << " p=" << p << " k=" << k << " h=" << h;
        }
    }
}

TEST(Grading, LowestHighestOutOfRange) {
    auto rs = build_root_system({Series::A, 2});
    auto T = build_grading(rs, 1);
    EXPECT_THROW(lowest_highest(T, 2), InvalidSpec);
    auto [lo, hi] = lowest_highest(T, 1);
    EXPECT_EQ(lo, 0);
    EXPECT_EQ(hi, rs.npos - 1);
}

TEST(Chains, G2MatchesTable) {
    auto fx = load_chain_fixtures(data_path("fixtures/chains_k1.json"));
    auto rs = build_root_system({Series::G, 2});
    for (const auto& f : fx) {
        if (!(f.spec == rs.spec)) continue;
        auto D = chain_decomposition(build_grading(rs, f.p), 1);
        EXPECT_EQ(compare_chains(chains_as_digits(rs, D), f.chains), "") << "p=" << f.p;
    }
}

TEST(Chains, InvariantsHoldEverywhere) {
    for (char s : std::string("ABCDEFG"))
        for (int r = 1; r <= 8; ++r) {
            RootSystemSpec sp{parse_series(std::string(1, s)), r};
            if (!valid_spec(sp)) continue;
            auto rs = build_root_system(sp);
            for (int p = 1; p <= r; ++p) {
                auto T = build_grading(rs, p);
                for (int k = 1; k <= T.k_p; ++k)
                    EXPECT_EQ(chain_invariant_violation(T, chain_decomposition(T, k)), "") << sp.name() << " p=" << p;
            }
        }
}

TEST(Chains, DetectsBrokenDecomposition) {
    auto rs = build_root_system({Series::B, 3});
    auto T = build_grading(rs, 2);
    auto D = chain_decomposition(T, 1);
    ASSERT_GE(D.chains.size(), 2u);
    std::swap(D.chains[0].back(), D.chains[1].back());
    EXPECT_NE(chain_invariant_violation(T, D), "");
}
