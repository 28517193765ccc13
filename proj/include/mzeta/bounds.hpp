#pragma once
#include <optional>
#include <string>
#include <vector>

#include "mzeta/measures.hpp"
#include "mzeta/newton.hpp"
#include "mzeta/zeta.hpp"

namespace mz {

// Limit of [A_k]/(u-1) at u = 1 against the facet-ray enumeration.
struct FacetLimitResult {
    long long k = 0;
    Rat lhs;  // ([A_k]/(u-1))(1)
    Rat rhs;  // sum over a = t*v, v a facet normal, m_f(a) = k
    bool holds = false;
};
// Throws DivisibilityError when (u-1) does not divide the coefficient.
FacetLimitResult facet_limit_check(const UPoly& coefficient, const NewtonData& nd,
                                   const std::vector<FaceMeasure>& ms, long long k);

struct DegreeRow {
    long long k = 0;
    bool zero = true;
    int degree = 0;
    Rat bound;              // n - k + k L_e
    bool equality = false;  // degree == bound
    // Some a > 0 with m_f(a) = k and h(a) = k L_e.
    bool level_equality = false;
    // Adds, when L_e = 0, a > 0 with h(a) = 0, m_f(a) < k and [X^_gamma(a)]
    // of top degree dim gamma(a) - 1: its Q-term then reaches the bound.
    bool predicted_equality = false;
};

struct DegreeBoundReport {
    Rat L_e;
    int position = 0;  // of (1,...,1), see position_of_ones
    std::vector<DegreeRow> rows;
    std::vector<long long> violations;          // k with degree > bound
    std::vector<long long> pattern_mismatches;  // observed vs predicted equality differ
    std::vector<long long> level_mismatches;   // observed vs level_equality differ
    std::vector<long long> missed_multiples;    // k = t m_f(a), a in the max set, without equality
    // Interior case: k where deg != n - k + max{h(a) : a in R_k, a > 0}.
    std::vector<long long> interior_formula_mismatches;
    // Weighted homogeneous in three variables: k with deg > 3 - sum k/p_i.
    std::vector<long long> wh_violations;
    bool wh_checked = false;

    bool ok() const {
        return violations.empty() && pattern_mismatches.empty() && missed_multiples.empty() &&
               wh_violations.empty();
    }
};

// Throws BoundViolation when throw_on_violation is set and the bound fails.
DegreeBoundReport degree_bound_report(const ZetaSeries& series, const NewtonData& nd,
                                      const std::vector<FaceMeasure>& ms, bool throw_on_violation = false);

// max{h(a) : a in Z^n_{>0}, m_f(a) = k} (nullopt when no such a exists),
// and the same over 0 < m_f(a) <= k.
std::optional<long long> max_h_at_level(const NewtonData& nd, long long k);
std::optional<long long> max_h_up_to(const NewtonData& nd, long long k);

// alpha_0 read off the degree envelope of the series alone.
struct AlphaEstimate {
    Rat alpha0;
    Rat envelope;  // max(0, max_k (deg[A_k] - n + k)/k)
    std::vector<long long> attaining;  // k realizing the envelope when it is positive
};
AlphaEstimate alpha0_from_series(const ZetaSeries& series);

// Leading-coefficient counts c_k: coefficient of u^{n - k + k L_e} in [A_k].
std::vector<long long> leading_counts(const ZetaSeries& series, const Rat& L_e);

struct AlphaReport {
    Rat alpha0_series;
    Rat alpha0_geometry;  // 1 - L_e(f)
    bool agree = false;
    std::vector<long long> c;  // c_1..c_K
    bool singleton_positive = false;  // Gamma^(1)_max = {a} with h(a) > 0
    long long period = 0;             // m_f(a) in the singleton case
    bool period_pattern_ok = true;    // c_k = 1 iff period | k
};
// Throws HorizonTooSmall if the series stops before the first k at which
// the envelope is attained.
AlphaReport alpha0_report(const ZetaSeries& series, const NewtonData& nd);

// Horizon suggested for alpha_0: 2 lcm of the positive generator levels,
// capped at 240 (capped is set when the cap applies).
long long default_alpha_horizon(const NewtonData& nd, bool* capped = nullptr);

// Checks of the (1,...,1) trichotomy relating its position to L_e and the
// maximal set.
struct TrichotomyResult {
    int position = 0;
    Rat L_e;
    bool max_set_empty = true;
    bool holds = false;
};
TrichotomyResult trichotomy_check(const NewtonData& nd);

}  // namespace mz
