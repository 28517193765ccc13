#include <gtest/gtest.h>

#include "mzeta/closed_forms.hpp"
#include "mzeta/errors.hpp"
#include "support.hpp"

using namespace mz;
using mz::test::germ;
using mz::test::up;

TEST(TwoVariables, AgreesWithEngine) {
    for (const std::string text : {"x^2+y^2", "x^4+y^4-3*x^2*y^2", "x^2-y^7", "x^3+y^5+x*y^3", "x^6+y^4",
                                   "x^5-y^3+x^2*y^2"}) {
        auto g = germ(text, 2);
        ZetaSeries s = zeta_series(g.nd, g.ms, 12, Sign::Naive);
        for (long long k = 1; k <= 12; ++k)
            EXPECT_EQ(two_var_closed_form(g.nd, g.ms, k), s.at(k).value) << text << " k=" << k;
    }
}

TEST(TwoVariables, Chain) {
    auto g = germ("x^2+y^2", 2);
    EXPECT_EQ(two_var_chain(g.nd), (std::vector<IVec>{{1, 0}, {1, 1}, {0, 1}}));
    EXPECT_EQ(two_var_closed_form(g.nd, g.ms, 2), up("u^2-1", -2));
    EXPECT_TRUE(two_var_closed_form(g.nd, g.ms, 3).is_zero());
}

TEST(ThreeVariables, AgreesWithEngine) {
    for (const std::string text : {"x^3+y^3+z^6", "x^3+y^4+z^4", "x^3+y^4-z^4+y^2*z^2", "x^2+y^3+z^7",
                                   "x^4+y^4+z^4-3*x^2*y^2", "x^2+y^2-z^3", "x^3+y^4+z^5"}) {
        auto g = germ(text, 3);
        ZetaSeries s = zeta_series(g.nd, g.ms, 12, Sign::Naive);
        for (long long k = 1; k <= 12; ++k)
            EXPECT_EQ(three_var_wh_closed_form(g.nd, g.ms, k), s.at(k).value) << text << " k=" << k;
    }
}

TEST(ThreeVariables, FirstLevel) {
    // p1 < p2 <= p3: the first nonzero coefficient is (u-1)/u.
    for (const std::string text : {"x^3+y^4+z^5", "x^2+y^3+z^7", "x^4+y^6+z^12+x^2*y^3"}) {
        auto g = germ(text, 3);
        WHFaces w = wh_faces(g.nd);
        long long p1 = *std::min_element(w.p.begin(), w.p.end());
        EXPECT_EQ(three_var_wh_closed_form(g.nd, g.ms, p1), up("u-1", -1)) << text;
    }
}

TEST(ThreeVariables, Levels344) {
    auto g = germ("x^3+y^4+z^4", 3);
    WHFaces w = wh_faces(g.nd);
    const UPoly& x1 = g.ms.at(static_cast<std::size_t>(w.edge[0])).x_hat;  // edge y^4 + z^4
    UPoly u1 = UPoly::u_minus_1_pow(1);
    EXPECT_EQ(three_var_wh_closed_form(g.nd, g.ms, 4), (up("u^2-1") - u1 * x1).shifted(-3));
    // The level-5 coefficient carries a second factor (u - 1).
    EXPECT_EQ(three_var_wh_closed_form(g.nd, g.ms, 5), (u1 * u1 * x1).shifted(-4));
    auto h = germ("x^3+y^4-z^4", 3);
    WHFaces wh = wh_faces(h.nd);
    const UPoly& xh = h.ms.at(static_cast<std::size_t>(wh.edge[0])).x_hat;
    EXPECT_EQ(xh, up("2"));
    EXPECT_EQ(three_var_wh_closed_form(h.nd, h.ms, 5), up("2*u^2-4*u+2", -4));
}

TEST(ThreeVariables, RequiresWeightedHomogeneous) {
    auto g = germ("x^2+y^5+z^5+x*y*z", 3);
    EXPECT_THROW(wh_faces(g.nd), NotWeightedHomogeneousError);
}
