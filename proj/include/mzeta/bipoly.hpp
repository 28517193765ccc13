#pragma once
#include <map>
#include <utility>
#include <vector>

#include "mzeta/lattice.hpp"
#include "mzeta/unipoly.hpp"

namespace mz {

// Integer polynomial in (a, b), normalized so that neither a nor b divides it.
struct BiPoly {
    std::map<std::pair<int, int>, Int> c;

    static BiPoly from_laurent(const std::map<std::pair<int, int>, Rat>& terms);
    bool is_zero() const { return c.empty(); }
    int deg_a() const;
    int deg_b() const;
    std::vector<ZPoly> rows() const;  // rows()[j](a) = coefficient of b^j
    BiPoly with_signs(int ea, int eb) const;  // F(ea*a, eb*b)
    BiPoly swapped() const;
    BiPoly d_a() const;
    BiPoly d_b() const;
    ZPoly at_a(const Rat& a) const;  // primitive integer polynomial in b
};

// Resultant with respect to b, as a polynomial in a.
ZPoly resultant_b(const BiPoly& F, const BiPoly& G);

struct PolygonEdge {
    IVec p0, p1;    // endpoints, counterclockwise
    IVec delta;     // primitive direction, oriented with delta[1] > 0, or (1,0)
    IVec normal;    // primitive inner normal
    int length = 0;
    ZPoly poly;     // edge polynomial in xi = a^delta0 * b^delta1
};

// Edges of the Newton polygon of a two-dimensional BiPoly.
std::vector<PolygonEdge> newton_polygon_edges(const BiPoly& F);

}  // namespace mz
