#include <gtest/gtest.h>

#include "mzeta/errors.hpp"
#include "mzeta/lattice.hpp"
#include "mzeta/newton.hpp"

using namespace mz;

namespace {
NewtonData newton(const std::string& text, int n) {
    return build_newton_polyhedron(parse_germ(text, default_varnames(n)));
}
}  // namespace

TEST(Newton, TwoSquares) {
    NewtonData nd = newton("x^2+y^2", 2);
    EXPECT_EQ(nd.vertices, (std::vector<IVec>{{0, 2}, {2, 0}}));
    int edges = 0;
    for (const auto& f : nd.faces) edges += f.dim == 1;
    EXPECT_EQ(edges, 1);
    std::vector<IVec> gens = nd.generators;
    std::sort(gens.begin(), gens.end());
    EXPECT_EQ(gens, (std::vector<IVec>{{0, 1}, {1, 0}, {1, 1}}));
    EXPECT_EQ(nd.generators_pos, (std::vector<IVec>{{1, 1}}));
}

TEST(Newton, OneVariable) {
    NewtonData nd = newton("x^5", 1);
    EXPECT_EQ(nd.vertices, (std::vector<IVec>{{5}}));
    EXPECT_EQ(nd.faces.size(), 1u);
}

TEST(Newton, FacetNormal) {
    NewtonData nd = newton("x^2+y^2+z^3", 3);
    EXPECT_EQ(nd.vertices.size(), 3u);
    EXPECT_TRUE(facet_with_normal(nd, {3, 3, 2}).has_value());
}

TEST(Newton, SupportFunction) {
    NewtonData nd = newton("x^2+y^2", 2);
    EXPECT_EQ(m_f(nd, {1, 1}), 2);
    EXPECT_EQ(m_f(nd, {1, 0}), 0);
    EXPECT_EQ(h_of(nd, {1, 1}), 0);
    EXPECT_EQ(nd.face(*gamma_f(nd, {1, 1})).dim, 1);
    EXPECT_EQ(nd.face(*gamma_f(nd, {1, 2})).vertices, (std::vector<IVec>{{2, 0}}));
    NewtonData nd3 = newton("x^2+y^2+z^3", 3);
    EXPECT_EQ(m_f(nd3, {3, 3, 2}), 6);
    EXPECT_EQ(h_of(nd3, {1, 1, 1}), -1);
    EXPECT_EQ(h_of(nd3, {3, 3, 2}), -2);
    EXPECT_EQ(nd3.face(*gamma_f(nd3, {3, 3, 2})).dim, 2);
}

TEST(Newton, Convenience) {
    EXPECT_TRUE(is_convenient(newton("x^2+y^2+z^3", 3)));
    EXPECT_FALSE(is_convenient(newton("x^2*y+x*y^2", 2)));
    EXPECT_TRUE(is_convenient(newton("x^7", 1)));
}

TEST(Refine, AllConesUnimodular) {
    for (const std::string text : {"x^2+y^2", "x^2+y^7", "x^2+y^2+z^3", "x^3+y^4+z^5", "x^4+y^6+z^12+x^2*y^3"}) {
        int n = text.find('z') != std::string::npos ? 3 : 2;
        NewtonData nd = unimodular_refine(newton(text, n));
        EXPECT_TRUE(nd.refined);
        for (const auto& c : nd.fan) {
            EXPECT_TRUE(c.unimodular) << text;
            if (c.generators.size() == static_cast<std::size_t>(n)) {
                long long d = det(c.generators);
                EXPECT_TRUE(d == 1 || d == -1) << text;
            }
        }
    }
}

TEST(Refine, TwoSquaresUnchanged) {
    NewtonData nd = newton("x^2+y^2", 2);
    NewtonData r = unimodular_refine(nd);
    EXPECT_EQ(r.maximal_cones.size(), nd.maximal_cones.size());
}

TEST(LeadingExponent, Examples) {
    LeadingExponent a = leading_exponent(newton("x^3+y^4+z^5", 3));
    EXPECT_EQ(a.value, Rat(13, 60));
    EXPECT_EQ(a.max_set, (std::vector<IVec>{{20, 15, 12}}));
    LeadingExponent b = leading_exponent(newton("x^3+y^3+z^3", 3));
    EXPECT_EQ(b.value, 0);
    EXPECT_EQ(b.max_set, (std::vector<IVec>{{1, 1, 1}}));
    NewtonData sq = newton("x^2+y^2+z^2", 3);
    LeadingExponent c = leading_exponent(sq);
    EXPECT_EQ(c.value, 0);
    EXPECT_TRUE(c.max_set.empty());
    EXPECT_EQ(position_of_ones(sq), -1);
    EXPECT_EQ(position_of_ones(newton("x^3+y^3+z^3", 3)), 0);
    EXPECT_EQ(position_of_ones(newton("x^3+y^4+z^5", 3)), 1);
}
