#include <gtest/gtest.h>

#include "mzeta/errors.hpp"
#include "mzeta/unipoly.hpp"
#include "support.hpp"

using namespace mz;
using mz::test::germ;
using mz::test::up;

namespace {
const FaceMeasure& top_face(const test::Germ& g) {
    const FaceMeasure* best = &g.ms.front();
    for (const auto& m : g.ms)
        if (m.dim > best->dim) best = &m;
    return *best;
}

UniPoly uni(std::initializer_list<std::pair<int, int>> terms) {
    UniPoly g;
    for (auto [e, c] : terms) g.add(e, c);
    return g;
}
}  // namespace

TEST(EdgePolynomial, LatticePoints) {
    Poly f = parse_germ("x^4+y^4-3*x^2*y^2", {"x", "y"});
    UniPoly g = edge_to_univariate(f, {4, 0}, {0, 4});
    EXPECT_EQ(g.coeffs, (std::map<int, Rat>{{0, 1}, {2, -3}, {4, 1}}));
    EXPECT_EQ(edge_to_univariate(parse_germ("x^2+y^2", {"x", "y"}), {2, 0}, {0, 2}).coeffs,
              (std::map<int, Rat>{{0, 1}, {2, 1}}));
    EXPECT_THROW(edge_to_univariate(parse_germ("x^2*y", {"x", "y"}), {2, 1}, {2, 1}), NotOnEdgeError);
}

TEST(EdgePolynomial, NonzeroRootCount) {
    EXPECT_EQ(sturm_count_nonzero_real_roots(uni({{0, 1}, {2, 1}})), 0);
    EXPECT_EQ(sturm_count_nonzero_real_roots(uni({{0, -1}, {2, 1}})), 2);
    EXPECT_EQ(sturm_count_nonzero_real_roots(uni({{0, 1}, {2, -3}, {4, 1}})), 4);
    EXPECT_TRUE(has_multiple_nonzero_real_root(uni({{0, 1}, {2, -2}, {4, 1}})));
}

TEST(Measures, Vertex) {
    auto g = germ("x^2", 1);
    const FaceMeasure& m = g.ms.at(0);
    EXPECT_TRUE(m.x_hat.is_zero());
    EXPECT_EQ(*m.x_plus, up("2"));
    EXPECT_TRUE(m.x_minus->is_zero());
    auto odd = germ("-x^3", 1);
    EXPECT_EQ(*odd.ms.at(0).x_plus, up("1"));
    EXPECT_EQ(*odd.ms.at(0).x_minus, up("1"));
}

TEST(Measures, SignedVertexInTwoVariables) {
    // x^2 y^2 = 1 is the union of two hyperbola branches.
    Poly f = parse_germ("x^2*y^2", {"x", "y"});
    NewtonData nd = build_newton_polyhedron(f);
    FaceMeasure m = measure_vertex(nd, nd.face(0));
    EXPECT_EQ(*m.x_plus, up("2*u-2"));
    EXPECT_TRUE(m.x_minus->is_zero());
}

TEST(Measures, Edges) {
    EXPECT_TRUE(top_face(germ("x^2+y^2", 2)).x_hat.is_zero());
    EXPECT_TRUE(top_face(germ("x^2+y^2", 2)).definite);
    EXPECT_EQ(top_face(germ("x^4+y^4-3*x^2*y^2", 2)).x_hat, up("4"));
    EXPECT_EQ(top_face(germ("x^2-y^2", 2)).x_hat, up("2"));
}

TEST(Measures, Facets) {
    auto sq = germ("x^2+y^2+z^2", 3);
    EXPECT_TRUE(top_face(sq).x_hat.is_zero());
    EXPECT_TRUE(top_face(sq).definite);
    // Circle in the projectivized cone minus its four points on the axes.
    EXPECT_EQ(top_face(germ("x^2+y^2-z^2", 3)).x_hat, up("u-3"));
}

TEST(Measures, FacetModesAgree) {
    MeasureOptions numeric;
    numeric.mode = FacetMode::NumericTrace;
    for (const std::string text : {"x^2+y^2-z^2", "x^3+y^4-z^4", "x^4+y^4+z^4-3*x^2*y^2", "x^2+y^3-z^5"}) {
        auto a = germ(text, 3);
        auto b = germ(text, 3, numeric);
        ASSERT_EQ(a.ms.size(), b.ms.size());
        for (std::size_t i = 0; i < a.ms.size(); ++i) EXPECT_EQ(a.ms[i].x_hat, b.ms[i].x_hat) << text;
    }
}

TEST(Measures, Override) {
    auto g0 = germ("x^2+y^2-z^2", 3);
    MeasureOptions o;
    o.overrides[top_face(g0).face] = up("2");
    auto g = germ("x^2+y^2-z^2", 3, o);
    EXPECT_EQ(top_face(g).x_hat, up("2"));
    EXPECT_EQ(top_face(g).source, "user-override");
}

TEST(Measures, ClosureIsSumOverSubfaces) {
    auto g = germ("x^3+y^4-z^4+y^2*z^2", 3);
    for (const auto& m : g.ms) {
        UPoly sum;
        for (int t : g.nd.face(m.face).subfaces) sum += g.ms.at(static_cast<std::size_t>(t)).x_hat;
        EXPECT_EQ(sum, m.x_closure);
    }
}

TEST(Nondegeneracy, Examples) {
    auto check = [](const std::string& text, int n) {
        return nondegenerate_check(build_newton_polyhedron(parse_germ(text, default_varnames(n))));
    };
    EXPECT_EQ(check("x^2+y^2+z^3", 3).value, Tri::True);
    EXPECT_EQ(check("x^4+y^4-3*x^2*y^2", 2).value, Tri::True);
    auto bad = check("x^4-2*x^2*y^2+y^4+z^2", 3);
    EXPECT_EQ(bad.value, Tri::False);
    EXPECT_FALSE(bad.witness.empty());
}

TEST(Fukui, Sets) {
    auto sq = germ("x^2+y^2", 2);
    FukuiSets s = fukui_sets(sq.nd, sq.ms, 10);
    EXPECT_EQ(s.A, (std::vector<long long>{2, 4, 6, 8, 10}));
    EXPECT_TRUE(s.A_minus.empty());
    auto hyp = germ("x^2-y^2", 2);
    FukuiSets h = fukui_sets(hyp.nd, hyp.ms, 10);
    EXPECT_EQ(h.m0, 2);
    EXPECT_EQ(h.A, (std::vector<long long>{2, 3, 4, 5, 6, 7, 8, 9, 10}));
    auto cube = germ("x^3", 1);
    EXPECT_EQ(fukui_sets(cube.nd, cube.ms, 10).A, (std::vector<long long>{3, 6, 9}));
}
