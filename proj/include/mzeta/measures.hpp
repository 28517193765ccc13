#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mzeta/curve.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/unipoly.hpp"
#include "mzeta/upoly.hpp"

namespace mz {

enum class FacetMode { ExactCurve, NumericTrace };

struct MeasureOptions {
    FacetMode mode = FacetMode::ExactCurve;
    std::map<int, UPoly> overrides;  // face id -> [X^_gamma]
};

struct FaceMeasure {
    int face = -1;
    int dim = 0;
    UPoly x_hat;      // [X^_gamma]
    UPoly x_full;     // [X_gamma] = (u-1)^(n-dim) [X^_gamma]
    UPoly x_closure;  // sum of [X^_tau] over the faces tau of gamma
    // Full measures [X^+_gamma], [X^-_gamma]; empty when not computable.
    std::optional<UPoly> x_plus, x_minus;
    std::string signed_note;  // reason when a signed measure is missing
    bool plus_nonempty = false, minus_nonempty = false;
    bool definite = false;  // f_gamma has no zero on the torus
    std::string source;     // exact-sturm | exact-curve | numeric-trace | user-override
};

// Face polynomial f_gamma.
Poly face_polynomial(const NewtonData& nd, const Face& face);

// Univariate polynomial of an edge: coefficient of t^k is the coefficient of
// the k-th lattice point starting from vertex p0 towards p1.
UniPoly edge_to_univariate(const Poly& f_gamma, const IVec& p0, const IVec& p1);

// Facet polynomial of a 2-dimensional face of a 3-variable germ, written in
// torus coordinates of the facet plane.
BiPoly facet_curve(const NewtonData& nd, const Face& face);

CurveTopology curve_topology(const BiPoly& F, FacetMode mode);

FaceMeasure measure_vertex(const NewtonData& nd, const Face& face);
FaceMeasure measure_edge(const NewtonData& nd, const Face& face, FacetMode mode);
FaceMeasure measure_facet(const NewtonData& nd, const Face& face, const MeasureOptions& opts);

// Measures of every compact face, indexed by face id.
std::vector<FaceMeasure> compute_measures(const NewtonData& nd, const MeasureOptions& opts = {});

enum class Tri { True, False, Indeterminate };
struct NondegeneracyResult {
    Tri value = Tri::True;
    std::string witness;
};
NondegeneracyResult nondegenerate_check(const NewtonData& nd);

struct FukuiSets {
    std::vector<long long> A, A_plus, A_minus, S, T;
    std::optional<long long> m0;  // nullopt when every face is definite
};
FukuiSets fukui_sets(const NewtonData& nd, const std::vector<FaceMeasure>& ms, long long K);

}  // namespace mz
