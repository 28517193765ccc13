#pragma once
#include <array>
#include <vector>

#include "mzeta/measures.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/upoly.hpp"

namespace mz {

// Rays a^0 = (1,0), ..., a^q = (0,1) of the unimodular refinement of a
// convenient two-variable germ, ordered by angle.
std::vector<IVec> two_var_chain(const NewtonData& refined);

// Closed formula for [A_k] of a convenient non-degenerate germ in two variables.
UPoly two_var_closed_form(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long k);

// Faces of a convenient weighted homogeneous germ in three variables.
struct WHFaces {
    std::array<long long, 3> p{};  // axis intercepts, in variable order
    int facet = -1;
    std::array<int, 3> edge{-1, -1, -1};  // edge[i] lies in the plane nu_i = 0
};
WHFaces wh_faces(const NewtonData& nd);

// Closed formula for [A_k] of a convenient non-degenerate weighted
// homogeneous germ in three variables.
UPoly three_var_wh_closed_form(const NewtonData& nd, const std::vector<FaceMeasure>& ms, long long k);

}  // namespace mz
