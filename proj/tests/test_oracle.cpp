#include <gtest/gtest.h>

#include "mzeta/oracle.hpp"
#include "support.hpp"

using namespace mz;
using mz::test::germ;

TEST(Truncation, MatchesEngineAboveCutoff) {
    for (const std::string text : {"x^2+y^2", "x^4+y^4-3*x^2*y^2", "x^3+y^4+z^5", "x^2+y^2-z^3",
                                   "x^3+y^4-z^4+y^2*z^2", "x^5"}) {
        int n = text.find('z') != std::string::npos ? 3 : (text.find('y') != std::string::npos ? 2 : 1);
        auto g = germ(text, n);
        ZetaSeries s = zeta_series(g.nd, g.ms, 10, Sign::Naive);
        for (long long D : {6, 9}) {
            for (long long k = 1; k <= 10; ++k) {
                int low = n - static_cast<int>(D);
                EXPECT_EQ(truncate_below(truncated_coefficient(g.nd, g.ms, k, D), low),
                          truncate_below(s.at(k).value, low))
                    << text << " D=" << D << " k=" << k;
            }
        }
    }
}

TEST(Truncation, SignedPurePower) {
    auto g = germ("x^2", 1);
    EXPECT_EQ(truncated_coefficient(g.nd, g.ms, 2, 6, Sign::Plus), test::up("2*u^-1"));
    EXPECT_TRUE(truncated_coefficient(g.nd, g.ms, 2, 6, Sign::Minus).is_zero());
}

TEST(Fukui, SampledOrdersArePredicted) {
    for (const std::string text : {"x^2+y^2", "x^2-y^2", "x^3+y^4+z^5", "x^2+y^2-z^2"}) {
        int n = text.find('z') != std::string::npos ? 3 : 2;
        auto g = germ(text, n);
        FukuiSets sets = fukui_sets(g.nd, g.ms, 12);
        FukuiSample sample = sample_fukui(g.f, 12, 1500, 7);
        for (long long o : sample.orders)
            EXPECT_TRUE(std::binary_search(sets.A.begin(), sets.A.end(), o)) << text << " order " << o;
    }
}

TEST(Fukui, Deterministic) {
    Poly f = parse_germ("x^2-y^3", {"x", "y"});
    EXPECT_EQ(sample_fukui(f, 10, 300, 11).orders, sample_fukui(f, 10, 300, 11).orders);
}

TEST(FaceSampling, ClaimsSurvive) {
    for (const std::string text : {"x^2+y^2+z^2", "x^2+y^2-z^2", "x^4+y^4-3*x^2*y^2"}) {
        int n = text.find('z') != std::string::npos ? 3 : 2;
        auto g = germ(text, n);
        for (const auto& m : g.ms) {
            Poly fg = face_polynomial(g.nd, g.nd.face(m.face));
            FaceSampleStats st = sample_face_counts(fg, m, 400, 8, 3);
            EXPECT_FALSE(st.refutes_definite) << text;
        }
    }
}
