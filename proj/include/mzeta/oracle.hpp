#pragma once
#include <cstdint>
#include <set>
#include <vector>

#include "mzeta/measures.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/zeta.hpp"

namespace mz {

// Sum of the order slices over all a > 0 with s(a) <= D. Agrees with [A_k]
// in u-degrees >= n - D.
UPoly truncated_coefficient(const NewtonData& nd, const std::vector<FaceMeasure>& ms, long long k,
                            long long D, Sign sign = Sign::Naive);

// Drops the terms of degree < lowest.
UPoly truncate_below(const UPoly& p, int lowest);

struct FukuiSample {
    std::set<long long> orders;  // attained orders in [1, K]
    long long trials = 0;
    long long truncated = 0;     // arcs whose value vanished to order > K
    std::uint64_t seed = 0;
};
// Orders of f along random arcs with small integer coefficients.
FukuiSample sample_fukui(const Poly& f, long long K, long long trials, std::uint64_t seed);

struct FaceSampleStats {
    long long trials = 0, positive = 0, negative = 0, zero = 0;
    bool refutes_definite = false;     // a sign change inside one orthant
    bool refutes_plus_empty = false;   // f_gamma > 0 seen, claimed X^+ empty
    bool refutes_minus_empty = false;  // f_gamma < 0 seen, claimed X^- empty
    std::uint64_t seed = 0;
};
// Signs of f_gamma at random torus points with coordinates of absolute value
// in [1/grid, grid]; compared with the claims of the measure.
FaceSampleStats sample_face_counts(const Poly& f_gamma, const FaceMeasure& claim, long long trials,
                                   long long grid, std::uint64_t seed);

}  // namespace mz
