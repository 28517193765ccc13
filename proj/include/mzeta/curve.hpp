#pragma once
#include "mzeta/bipoly.hpp"
#include "mzeta/upoly.hpp"

namespace mz {

// Topology of the real affine curve {F = 0} in the torus (R*)^2, where F is
// non-degenerate with respect to its Newton polygon.
struct CurveTopology {
    int circles = 0;          // components of the closure in the toric surface
    int boundary_points = 0;  // points added by the closure
    UPoly vp() const;         // circles * (1 + u) - boundary_points
    UPoly closure() const;    // circles * (1 + u)
};

// Certified cylindrical decomposition with exact counts at sample fibers.
CurveTopology curve_topology_exact(const BiPoly& F);
// Independent branch tracing by predictor-corrector continuation.
CurveTopology curve_topology_trace(const BiPoly& F);

// Positive real algebraic number: the unique root of a squarefree integer
// polynomial inside an isolating interval.
struct AlgNum {
    ZPoly p;
    RootInterval iv;
};
bool alg_equal(AlgNum x, AlgNum y);
int sign_at_alg(const ZPoly& q, const AlgNum& x);
double alg_approx(const AlgNum& x);

// Nonzero real roots of an edge polynomial, with their multiplicity check.
struct RealRoots {
    std::vector<AlgNum> positive;  // absolute values of roots > 0
    std::vector<AlgNum> negative;  // absolute values of roots < 0
    bool squarefree = true;        // no repeated nonzero real root
};
RealRoots nonzero_real_roots(const ZPoly& p);

}  // namespace mz
