#include <weng/invariants.hpp>

#include <gtest/gtest.h>

using namespace weng;

TEST(Invariants, RootOnlyChecksHoldThroughRankEight) {
    for (char s : std::string("ABCDEFG"))
        for (int r = 1; r <= 8; ++r) {
            RootSystemSpec sp{parse_series(std::string(1, s)), r};
            if (!valid_spec(sp)) continue;
            auto rs = build_root_system(sp);
            for (int p = 1; p <= r; ++p)
                for (const auto& res : root_invariants(rs, build_grading(rs, p)))
                    EXPECT_TRUE(res.ok) << sp.name() << " p=" << p << ": " << res.name << " " << res.witness;
        }
}

TEST(Invariants, WeylChecksHold) {
    for (auto sp : std::vector<RootSystemSpec>{{Series::A, 3}, {Series::B, 3}, {Series::C, 3}, {Series::D, 4},
                                              {Series::G, 2}, {Series::F, 4}}) {
        auto rs = build_root_system(sp);
        auto G = enumerate_weyl(rs);
        for (int p = 1; p <= sp.rank; ++p) {
            auto res = weyl_invariants(rs, build_grading(rs, p), G, compute_frak_Wp(G, rs, p));
            ASSERT_FALSE(res.empty());
            for (const auto& r : res) {
                EXPECT_FALSE(r.root_only);
                EXPECT_TRUE(r.ok) << sp.name() << " p=" << p << ": " << r.name << " " << r.witness;
            }
        }
    }
}

TEST(Invariants, CorruptedTableIsCaught) {
    auto rs = build_root_system({Series::B, 3});
    auto T = build_grading(rs, 2);
    ASSERT_EQ(T.n(1, 2), 2);
    ASSERT_EQ(T.n(1, 3), 1);
    std::swap(T.N[{1, 2}], T.N[{1, 3}]);
    bool caught = false;
    for (const auto& r : root_invariants(rs, T))
        if (!r.ok) {
            caught = true;
            EXPECT_FALSE(r.witness.empty()) << r.name;
        }
    EXPECT_TRUE(caught);
}
