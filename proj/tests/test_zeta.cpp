#include <weng/numerics.hpp>

#include <gtest/gtest.h>

using namespace weng;

namespace {

std::vector<RootSystemSpec> small_specs() {
    return {{Series::A, 1}, {Series::A, 2}, {Series::A, 3}, {Series::A, 4}, {Series::B, 2}, {Series::B, 3},
            {Series::B, 4}, {Series::C, 3}, {Series::C, 4}, {Series::D, 4}, {Series::G, 2}, {Series::F, 4}};
}

std::vector<int> all_p(int r) {
    std::vector<int> ps;
    for (int p = 1; p <= r; ++p) ps.push_back(p);
    return ps;
}

} // namespace

TEST(Zeta, A1Exact) {
    auto C = make_case({Series::A, 1}, 1);
    EXPECT_EQ(C.c(), 2);
    EXPECT_EQ(render(omega_p(C), Format::text), "-zhat(s+1)/((s+2)*zhat(s+2)) + 1/s");
    EXPECT_EQ(render(zhat_p(C), Format::text), "zhat(s+2)/s - zhat(s+1)/(s+2)");
    auto R = build_XEQD(C);
    EXPECT_EQ(render(R.xi, Format::text), "zhat(s+2)*(s+1)*(s+2) - zhat(s+1)*s*(s+1)");
    EXPECT_EQ(R.sign, 1);
    EXPECT_EQ(R.xi_sign, -1);
}

TEST(Zeta, A2Exact) {
    const std::string want = "(zhat(2)/s - 1/(2*(s+1)))*zhat(s+3) - zhat(s+2)/(s*(s+3)) - (zhat(2)/(s+3) - 1/(2*(s+2)))*zhat(s+1)";
    for (int p = 1; p <= 2; ++p) EXPECT_EQ(render(zhat_p(make_case({Series::A, 2}, p)), Format::text), want) << p;
}

TEST(Zeta, FunctionalEquationEverywhere) {
    for (const auto& sp : small_specs())
        for (const auto& C : make_cases(sp, all_p(sp.rank))) {
            auto fe = check_zhat_functional_equation(C);
            EXPECT_TRUE(fe.ok) << sp.name() << " p=" << C.p << ": " << fe.report;
        }
}

TEST(Zeta, WrongCenterIsRejected) {
    auto z = zhat_p(make_case({Series::A, 1}, 1));
    EXPECT_TRUE(check_functional_equation(z, 2, 1).ok);
    EXPECT_FALSE(check_functional_equation(z, 3, 1).ok);
    EXPECT_FALSE(check_functional_equation(z, 2, -1).ok);
}

TEST(Zeta, StructuralIdentities) {
    for (const auto& sp : small_specs())
        for (const auto& C : make_cases(sp, all_p(sp.rank))) {
            auto R = build_XEQD(C);
            std::string why;
            EXPECT_TRUE(check_involution_pairing(C, R, &why)) << sp.name() << " p=" << C.p << " " << why;
            EXPECT_TRUE(check_X_splitting(R)) << sp.name() << " p=" << C.p;
            EXPECT_TRUE(check_xi_identities(R)) << sp.name() << " p=" << C.p;
            EXPECT_TRUE(check_xi_polynomial_multiple(C, R)) << sp.name() << " p=" << C.p;
            EXPECT_TRUE(check_xdd_quotient(C, R)) << sp.name() << " p=" << C.p;
            EXPECT_TRUE(check_xdd_quotient_bound(C, xdd_quotient(C))) << sp.name() << " p=" << C.p;
            EXPECT_TRUE(degree_gap_check(C, R).ok) << sp.name() << " p=" << C.p;
            EXPECT_EQ(leading_residue_constant(C), levi_residue_form(C)) << sp.name() << " p=" << C.p;
        }
}

TEST(Zeta, ResidueConstantIsPositive) {
    auto L = leading_residue_constant(make_case({Series::A, 2}, 1));
    EXPECT_EQ(L, ConstantCombo::zhat(2) - ConstantCombo(Rational(1, 2)));
    for (const auto& sp : small_specs())
        for (const auto& C : make_cases(sp, all_p(sp.rank)))
            EXPECT_GT(num::eval_constant<DoubleMode>(leading_residue_constant(C)), 1e-12) << sp.name() << " p=" << C.p;
    // the smallest one, checked at 50 digits
    EXPECT_NEAR(num::eval_constant<DoubleMode>(leading_residue_constant(make_case({Series::B, 4}, 1))), 1.87403043514855e-8,
                1e-20);
}

TEST(Zeta, XddQuotientA2) {
    EXPECT_EQ(render(ZetaExpression({xdd_quotient(make_case({Series::A, 2}, 1))}), Format::text), "zhat(s+3)*(s+2)*(s+3)");
}

TEST(Zeta, MultiplierIsPolynomial) {
    auto C = make_case({Series::G, 2}, 2);
    auto R = build_XEQD(C);
    Term m;
    ASSERT_TRUE(check_xi_polynomial_multiple(C, R, &m));
    for (const auto& [f, e] : m.rat) EXPECT_GE(e, 0);
    EXPECT_TRUE(m.mono.empty());
}

TEST(Zeta, RatioBound) {
    auto C = make_case({Series::A, 3}, 2);
    auto R = build_XEQD(C);
    for (const auto& d : R.wd) {
        if (d.lp == 0) continue;
        auto rep = check_ratio_bound(R, d.w, 40);
        EXPECT_TRUE(rep.ok) << "w=" << d.w;
        EXPECT_LE(rep.max_on_line, 1 + 1e-12);
    }
    EXPECT_TRUE(check_xdd_nonvanishing(C, R));
}
