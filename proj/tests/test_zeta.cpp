#include <gtest/gtest.h>

#include "mzeta/errors.hpp"
#include "support.hpp"

using namespace mz;
using mz::test::germ;
using mz::test::up;

TEST(OrderSlice, TwoSquares) {
    auto g = germ("x^2+y^2", 2);
    EXPECT_EQ(order_slice_measure(g.nd, g.ms, {1, 1}, 2, Sign::Naive), up("u^2-2*u+1", -2));
    EXPECT_TRUE(order_slice_measure(g.nd, g.ms, {1, 1}, 3, Sign::Naive).is_zero());
    EXPECT_TRUE(order_slice_measure(g.nd, g.ms, {2, 3}, 3, Sign::Naive).is_zero());
}

TEST(ConeSums, TwoSquares) {
    auto g = germ("x^2+y^2", 2);
    const Cone* vertex_cone = nullptr;
    const Cone* edge_cone = nullptr;
    for (const auto& c : g.nd.fan) {
        auto gens = c.generators;
        std::sort(gens.begin(), gens.end());
        if (gens == std::vector<IVec>{{0, 1}, {1, 1}}) vertex_cone = &c;
        if (gens == std::vector<IVec>{{1, 1}}) edge_cone = &c;
    }
    ASSERT_NE(vertex_cone, nullptr);
    ASSERT_NE(edge_cone, nullptr);
    // a = (1,1) + j(0,1): u^-(2+j) summed over j >= 1.
    EXPECT_TRUE(cone_P(*vertex_cone, 2).equals(URat(up("u^-2"), {{1, 1}})));
    EXPECT_TRUE(cone_P(*edge_cone, 2).equals(URat(up("u^-2"))));
    EXPECT_TRUE(cone_P(*edge_cone, 1).is_zero());
}

TEST(Series, PurePower) {
    auto g = germ("x^2", 1);
    ZetaSeries s = zeta_series(g.nd, g.ms, 5, Sign::Naive);
    EXPECT_EQ(s.at(2).value, up("u-1", -1));
    EXPECT_EQ(s.at(4).value, up("u-1", -2));
    for (long long k : {1, 3, 5}) EXPECT_TRUE(s.at(k).value.is_zero());
    for (const auto& c : zeta_series(g.nd, g.ms, 5, Sign::Minus).coefficients) EXPECT_TRUE(c.value.is_zero());
    EXPECT_EQ(zeta_series(g.nd, g.ms, 2, Sign::Plus).at(2).value, up("2*u^-1"));
}

TEST(Series, PurePowersAllDegrees) {
    for (int d = 2; d <= 5; ++d) {
        auto g = germ("x^" + std::to_string(d), 1);
        ZetaSeries s = zeta_series(g.nd, g.ms, 3 * d, Sign::Naive);
        for (long long k = 1; k <= 3 * d; ++k) {
            UPoly want = k % d == 0 ? up("u-1", static_cast<int>(-k / d)) : UPoly();
            EXPECT_EQ(s.at(k).value, want) << "d=" << d << " k=" << k;
        }
    }
}

TEST(Series, TwoSquares) {
    auto g = germ("x^2+y^2", 2);
    ZetaSeries s = zeta_series(g.nd, g.ms, 3, Sign::Naive);
    EXPECT_TRUE(s.at(1).value.is_zero());
    EXPECT_EQ(s.at(2).value, up("u^2-1", -2));
    EXPECT_TRUE(s.at(3).value.is_zero());
}

TEST(Series, Brieskorn336) {
    auto g = germ("x^3+y^3+z^6", 3);
    ZetaSeries s = zeta_series(g.nd, g.ms, 5, Sign::Naive);
    EXPECT_EQ(s.at(4).value, up("u^2-2*u+1", -3));
    EXPECT_EQ(s.at(5).value, up("u^2-2*u+1", -4));
}

TEST(Series, BreakdownSumsToCoefficient) {
    auto g = germ("x^3+y^4-z^4+y^2*z^2", 3);
    ZetaEngine engine(g.nd, g.ms, 8);
    for (long long k = 1; k <= 8; ++k) {
        ZetaCoefficient c = engine.coefficient(k, Sign::Naive, true);
        URat total;
        for (const auto& fc : c.breakdown) {
            const FaceMeasure& m = g.ms.at(static_cast<std::size_t>(fc.face));
            int n = g.nd.n;
            total += fc.P * (UPoly::u_minus_1_pow(n) - m.x_full) + fc.Q * (UPoly::u_minus_1_pow(1) * m.x_full);
        }
        EXPECT_EQ(total.to_upoly(), c.value) << "k=" << k;
    }
}

TEST(Series, NegationSwapsSigns) {
    const std::vector<std::pair<std::string, std::string>> pairs = {
        {"x^2+y^3", "-x^2-y^3"}, {"x^3+y^3+z^5", "-x^3-y^3-z^5"}, {"x^3-y^3+z^5", "-x^3+y^3-z^5"}};
    for (const auto& [text, negated] : pairs) {
        int n = text.find('z') != std::string::npos ? 3 : 2;
        auto g = germ(text, n);
        auto h = germ(negated, n);
        for (Sign s : {Sign::Plus, Sign::Minus}) {
            Sign t = s == Sign::Plus ? Sign::Minus : Sign::Plus;
            ZetaSeries a = zeta_series(g.nd, g.ms, 8, s);
            ZetaSeries b = zeta_series(h.nd, h.ms, 8, t);
            for (long long k = 1; k <= 8; ++k) EXPECT_EQ(a.at(k).value, b.at(k).value) << text;
        }
    }
}

TEST(Series, EvenLevelFacetSignedUnsupported) {
    auto g = germ("x^2+y^2-z^2", 3);
    EXPECT_THROW(zeta_series(g.nd, g.ms, 4, Sign::Plus), UnsupportedMeasureError);
    EXPECT_NO_THROW(zeta_series(g.nd, g.ms, 4, Sign::Naive));
}
