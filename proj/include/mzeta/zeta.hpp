#pragma once
#include <map>
#include <string>
#include <vector>

#include "mzeta/measures.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/upoly.hpp"

namespace mz {

enum class Sign { Naive, Plus, Minus };
std::string sign_name(Sign s);

// Measure of the arcs of order a with f(arc) of order k.
UPoly order_slice_measure(const NewtonData& nd, const std::vector<FaceMeasure>& ms, const IVec& a,
                          long long k, Sign sign);

// Lattice sums over the relative interior of one unimodular cone.
URat cone_P(const Cone& cone, long long k);
URat cone_Q(const Cone& cone, long long k);

struct FaceContribution {
    int face = -1;
    URat P, Q;
};

struct ZetaCoefficient {
    long long k = 0;
    UPoly value;
    Sign sign = Sign::Naive;
    std::vector<FaceContribution> breakdown;
};

struct ZetaSeries {
    long long K = 0;
    int n = 0;
    Sign sign = Sign::Naive;
    std::vector<ZetaCoefficient> coefficients;  // k = 1..K
    const ZetaCoefficient& at(long long k) const { return coefficients.at(static_cast<size_t>(k - 1)); }
};

// Precomputed per-face lattice sums for k = 0..K over the unimodular fan.
class ZetaEngine {
public:
    ZetaEngine(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long K);
    ZetaCoefficient coefficient(long long k, Sign sign, bool breakdown = true) const;
    ZetaSeries series(Sign sign, bool breakdown = true) const;
    URat P(int face, long long k) const;
    URat Q(int face, long long k) const;

private:
    struct Group {
        int face;
        std::map<int, int> den;
        std::vector<UPoly> P, Q;  // numerators over den, indexed by k
    };
    const NewtonData& nd_;
    const std::vector<FaceMeasure>& ms_;
    long long K_;
    std::vector<Group> groups_;
};

ZetaCoefficient coefficient(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long k,
                            Sign sign);
ZetaSeries zeta_series(const NewtonData& refined, const std::vector<FaceMeasure>& ms, long long K,
                       Sign sign);

}  // namespace mz
