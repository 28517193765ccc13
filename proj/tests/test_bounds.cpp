#include <gtest/gtest.h>

#include "mzeta/bounds.hpp"
#include "mzeta/errors.hpp"
#include "support.hpp"

using namespace mz;
using mz::test::germ;

TEST(DegreeBound, HoldsOnSamples) {
    for (const std::string text : {"x^2+y^2", "x^3+y^4+z^5", "x^3+y^3+z^3", "x^2+y^2+z^2", "x^4+y^4-3*x^2*y^2",
                                   "x^3+y^4-z^4+y^2*z^2", "x^2+y^5+z^5+x*y*z"}) {
        int n = text.find('z') != std::string::npos ? 3 : 2;
        auto g = germ(text, n);
        ZetaSeries s = zeta_series(g.nd, g.ms, 16, Sign::Naive);
        DegreeBoundReport r = degree_bound_report(s, g.nd, g.ms);
        EXPECT_TRUE(r.violations.empty()) << text;
        EXPECT_TRUE(r.pattern_mismatches.empty()) << text;
        EXPECT_TRUE(r.missed_multiples.empty()) << text;
    }
}

TEST(DegreeBound, TwoSquaresEquality) {
    auto g = germ("x^2+y^2", 2);
    DegreeBoundReport r = degree_bound_report(zeta_series(g.nd, g.ms, 4, Sign::Naive), g.nd, g.ms);
    EXPECT_EQ(r.rows.at(1).degree, 0);
    EXPECT_TRUE(r.rows.at(1).equality);
}

TEST(DegreeBound, InteriorStrict) {
    auto g = germ("x^2+y^2+z^2", 3);
    DegreeBoundReport r = degree_bound_report(zeta_series(g.nd, g.ms, 10, Sign::Naive), g.nd, g.ms);
    EXPECT_EQ(r.position, -1);
    for (const auto& row : r.rows) EXPECT_FALSE(!row.zero && row.equality) << row.k;
    EXPECT_EQ(r.rows.at(1).degree, 3 - 2 + *max_h_up_to(g.nd, 2));
}

TEST(DegreeBound, EqualityAtLevelOfMaxRay) {
    auto g = germ("x^3+y^4+z^5", 3);
    ZetaSeries s = zeta_series(g.nd, g.ms, 60, Sign::Naive);
    DegreeBoundReport r = degree_bound_report(s, g.nd, g.ms);
    EXPECT_EQ(r.L_e, Rat(13, 60));
    EXPECT_TRUE(r.rows.at(59).equality);
}

TEST(Alpha, SeriesMatchesGeometry) {
    auto g = germ("x^3+y^4+z^5", 3);
    AlphaReport r = alpha0_report(zeta_series(g.nd, g.ms, 120, Sign::Naive), g.nd);
    EXPECT_EQ(r.alpha0_series, Rat(47, 60));
    EXPECT_TRUE(r.agree);
    EXPECT_TRUE(r.singleton_positive);
    EXPECT_EQ(r.period, 60);
    EXPECT_TRUE(r.period_pattern_ok);
    auto h = germ("x^2+y^2", 2);
    EXPECT_EQ(alpha0_report(zeta_series(h.nd, h.ms, 8, Sign::Naive), h.nd).alpha0_series, 1);
}

TEST(Trichotomy, Positions) {
    for (const std::string text : {"x^2+y^2+z^2", "x^3+y^3+z^3", "x^3+y^4+z^5", "x^2+y^2", "x^2+y^3"}) {
        int n = text.find('z') != std::string::npos ? 3 : 2;
        EXPECT_TRUE(trichotomy_check(germ(text, n).nd).holds) << text;
    }
}

TEST(FacetLimit, DivisibilityAndRhs) {
    auto g = germ("x^3", 1);
    ZetaSeries s = zeta_series(g.nd, g.ms, 6, Sign::Naive);
    FacetLimitResult r = facet_limit_check(s.at(3).value, g.nd, g.ms, 3);
    EXPECT_EQ(r.lhs, 1);
    EXPECT_EQ(r.rhs, 1);
    EXPECT_TRUE(r.holds);
    EXPECT_THROW(facet_limit_check(test::up("1"), g.nd, g.ms, 3), DivisibilityError);
}

TEST(FacetLimit, TwoSquaresSidesDiffer) {
    // The lattice sums over the two vertex cones contribute to the limit as well.
    auto g = germ("x^2+y^2", 2);
    ZetaSeries s = zeta_series(g.nd, g.ms, 2, Sign::Naive);
    FacetLimitResult r = facet_limit_check(s.at(2).value, g.nd, g.ms, 2);
    EXPECT_EQ(r.lhs, 2);
    EXPECT_EQ(r.rhs, 0);
    EXPECT_FALSE(r.holds);
}
