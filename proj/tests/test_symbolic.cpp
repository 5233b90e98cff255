#include <weng/symbolic.hpp>

#include <gtest/gtest.h>

using namespace weng;

namespace {

// zhat(a s + b)^e / (k s + c)
Term zterm(long a, long b, long e, long k, long c, const Rational& q = 1) {
    Term t;
    t.coeff = q;
    t.mul_zhat(a, b, e);
    t.mul_linear(k, c, -1);
    return t;
}

} // namespace

TEST(Symbolic, LinearFactorsAreCanonical) {
    FactoredRational f;
    f.mul_linear(-2, -4, 1); // -2s-4 = -2 (s+2)
    FactoredRational g;
    g.mul_linear(1, 2, 1);
    g.scalar = -2;
    EXPECT_EQ(f, g);
    FactoredRational h;
    h.mul_linear(0, 3, 2);
    EXPECT_EQ(h.scalar, Rational(9));
    EXPECT_TRUE(h.bag.empty());
    EXPECT_THROW(h.mul_linear(0, 0, 1), InternalError);
}

TEST(Symbolic, ZhatArgumentsUseTheReflection) {
    // zhat(-s) = zhat(1+s), and integer arguments become constants
    Term a, b;
    a.mul_zhat(-1, 0, 1);
    b.mul_zhat(1, 1, 1);
    EXPECT_EQ(a.mono, b.mono);
    Term c;
    c.mul_zhat(0, -1, 1);
    EXPECT_TRUE(c.mono.empty());
    EXPECT_EQ(c.coeff, ConstantCombo::zhat(2));
    EXPECT_THROW(ConstantCombo::zhat(1), PoleError);
    EXPECT_THROW(ConstantCombo::zhat(0), PoleError);
}

TEST(Symbolic, MergingCancels) {
    ZetaExpression e({zterm(1, 2, 1, 1, 0), zterm(1, 2, 1, 1, 0, -1)});
    EXPECT_TRUE(e.empty());
    ZetaExpression f({zterm(1, 2, 1, 1, 0), zterm(1, 2, 1, 1, 0, 2)});
    ASSERT_EQ(f.terms().size(), 1u);
    EXPECT_EQ(f.terms()[0].coeff, ConstantCombo(Rational(3)));
}

TEST(Symbolic, Reflection) {
    // zhat(s+1)/(s+2) under s -> -2-s is -zhat(s+2)/s
    ZetaExpression e({zterm(1, 1, 1, 1, 2)});
    ZetaExpression want({zterm(1, 2, 1, 1, 0, -1)});
    EXPECT_EQ(substitute_reflect(e, 2), want);
    EXPECT_EQ(substitute_reflect(substitute_reflect(e, 2), 2), e);
}

TEST(Symbolic, Rendering) {
    ZetaExpression e({zterm(1, 2, 1, 1, 0), zterm(1, 1, 1, 1, 2, -1)});
    EXPECT_EQ(render(e, Format::text), "zhat(s+2)/s - zhat(s+1)/(s+2)");
    EXPECT_EQ(render(e, Format::latex), "\\frac{\\hat{\\zeta}(s+2)}{s} - \\frac{\\hat{\\zeta}(s+1)}{(s+2)}");
}

TEST(Symbolic, JsonRoundTrip) {
    Term t = zterm(2, 3, 2, 1, -1, Rational(-5, 7));
    t.coeff = t.coeff * ConstantCombo::zhat(4) + ConstantCombo(Rational(1, 3));
    ZetaExpression e({t, zterm(1, 1, 1, 3, 2)});
    auto j = to_json(e);
    EXPECT_EQ(j.at("format"), "weng-zeta-expression");
    EXPECT_EQ(expression_from_json(j), e);
    EXPECT_EQ(expression_from_json(nlohmann::json::parse(j.dump())), e);
}

TEST(Symbolic, ConstantArithmetic) {
    auto z2 = ConstantCombo::zhat(2);
    auto x = z2 * ConstantCombo::zhat(2, -1);
    EXPECT_TRUE(x.is_rational());
    EXPECT_EQ(x.rational_value(), Rational(1));
    EXPECT_TRUE((z2 - z2).is_zero());
}
