#include <gtest/gtest.h>

#include "mzeta/bipoly.hpp"
#include "mzeta/curve.hpp"
#include "support.hpp"

using namespace mz;
using mz::test::up;

namespace {
BiPoly bipoly(std::initializer_list<std::tuple<int, int, int>> terms) {
    std::map<std::pair<int, int>, Rat> m;
    for (auto [i, j, c] : terms) m[{i, j}] = c;
    return BiPoly::from_laurent(m);
}

void expect_both(const BiPoly& F, int circles, int boundary) {
    CurveTopology e = curve_topology_exact(F);
    CurveTopology t = curve_topology_trace(F);
    EXPECT_EQ(e.circles, circles);
    EXPECT_EQ(e.boundary_points, boundary);
    EXPECT_EQ(t.circles, e.circles);
    EXPECT_EQ(t.boundary_points, e.boundary_points);
}
}  // namespace

TEST(CurveTopology, UnitCircle) {
    BiPoly F = bipoly({{2, 0, 1}, {0, 2, 1}, {0, 0, -1}});
    expect_both(F, 1, 4);
    EXPECT_EQ(curve_topology_exact(F).vp(), up("u-3"));
}

TEST(CurveTopology, EmptyCurve) { expect_both(bipoly({{2, 0, 1}, {0, 2, 1}, {0, 0, 1}}), 0, 0); }

TEST(CurveTopology, Line) {
    // a + b = 1 meets the torus in three open arcs of one closed line.
    BiPoly F = bipoly({{1, 0, 1}, {0, 1, 1}, {0, 0, -1}});
    expect_both(F, 1, 3);
    EXPECT_EQ(curve_topology_exact(F).vp(), up("u-2"));
}

TEST(CurveTopology, QuarticWithFourOvals) {
    // (a^2-1)^2 + (b^2-1)^2 = 1/4 scaled to integers: four small ovals around (+-1, +-1).
    BiPoly F = bipoly({{4, 0, 4}, {2, 0, -8}, {0, 4, 4}, {0, 2, -8}, {0, 0, 7}});
    expect_both(F, 4, 0);
    EXPECT_EQ(curve_topology_exact(F).vp(), up("4*u+4"));
}

TEST(RealRoots, Signs) {
    RealRoots r = nonzero_real_roots(ZPoly{1, 0, -3, 0, 1});
    EXPECT_EQ(r.positive.size(), 2u);
    EXPECT_EQ(r.negative.size(), 2u);
    EXPECT_TRUE(r.squarefree);
    RealRoots d = nonzero_real_roots(ZPoly{1, 0, -2, 0, 1});
    EXPECT_FALSE(d.squarefree);
}
